#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rookpath/errors.hpp"

namespace rookpath {

// Exhaustive enumeration over S_n is refused above this length.
inline constexpr int kMaxEnumerationLength = 11;

/// A permutation in one-line notation. Entries are the values 1..n; the empty
/// permutation (n = 0) is allowed and contains exactly itself.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    bool empty() const { return entries_.empty(); }

    // 0-based position, 1-based value.
    int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
};

/// True iff some subsequence of host is order isomorphic to pattern.
/// The empty pattern is contained in everything.
bool contains(const Permutation& host, const Permutation& pattern);

/// True iff host contains none of the basis patterns.
bool avoids_all(const Permutation& host, const std::vector<Permutation>& basis);

/// All length-n permutations avoiding every basis pattern, in lexicographic
/// order of one-line notation. Throws ResourceLimitError for n above
/// kMaxEnumerationLength.
std::vector<Permutation> enumerate_avoiders(int n, const std::vector<Permutation>& basis);

/// Count-only variant of enumerate_avoiders (streams instead of storing).
std::uint64_t count_avoiders(int n, const std::vector<Permutation>& basis);

/// Length of the longest increasing subsequence; 0 for the empty permutation.
int lis(const Permutation& p);

/// Parses "4,2,5,1,3" or, for n <= 9, the compact digit string "42513".
Permutation parse_permutation(const std::string& text);

/// One-line notation: compact digits for n <= 9, comma-separated otherwise.
std::string format_permutation(const Permutation& p);

}  // namespace rookpath
