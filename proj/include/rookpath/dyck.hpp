#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "rookpath/rook.hpp"

namespace rookpath {

// Exhaustive admissible-labeling enumeration is refused above this semilength.
inline constexpr int kMaxAdmissibleLength = 8;

/// A Dyck path as a word over {U, D}: balanced, with every prefix holding at
/// least as many U as D. The empty path (semilength 0) is allowed.
class DyckPath {
public:
    DyckPath() = default;
    explicit DyckPath(std::string steps);

    int semilength() const { return static_cast<int>(steps_.size()) / 2; }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::string& steps() const { return steps_; }
    char step(int k) const { return steps_[static_cast<std::size_t>(k - 1)]; }  // 1-based

    /// Height of vertex j, 0 <= j <= 2n.
    int height(int j) const { return heights_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& heights() const { return heights_; }

    /// A peak vertex sits between an up step and a down step.
    bool is_peak(int j) const {
        return j >= 1 && j < length() && step(j) == 'U' && step(j + 1) == 'D';
    }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    // Lexicographic with U before D.
    friend std::strong_ordering operator<=>(const DyckPath& a, const DyckPath& b) {
        const std::size_t common = std::min(a.steps_.size(), b.steps_.size());
        for (std::size_t i = 0; i < common; ++i)
            if (a.steps_[i] != b.steps_[i])
                return a.steps_[i] == 'U' ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
        return a.steps_.size() <=> b.steps_.size();
    }

private:
    std::string steps_;
    std::vector<int> heights_ = {0};
};

/// A Dyck path with one nonnegative label per vertex (2n + 1 labels; the empty
/// path carries the single label 0).
class LabeledDyckPath {
public:
    LabeledDyckPath() : labels_{0} {}
    LabeledDyckPath(DyckPath path, std::vector<int> labels);

    const DyckPath& path() const { return path_; }
    int semilength() const { return path_.semilength(); }
    const std::vector<int>& labels() const { return labels_; }
    int label(int j) const { return labels_[static_cast<std::size_t>(j)]; }

    friend bool operator==(const LabeledDyckPath&, const LabeledDyckPath&) = default;
    friend std::strong_ordering operator<=>(const LabeledDyckPath& a, const LabeledDyckPath& b) {
        if (auto c = a.path_ <=> b.path_; c != 0) return c;
        return a.labels_ <=> b.labels_;
    }

private:
    DyckPath path_;
    std::vector<int> labels_;
};

/// Walks the northwest-southeast border of the board from its top-left lattice
/// point to its bottom-right one (east steps become U, south steps D) and
/// labels each border vertex (x, y) with the length of the longest increasing
/// sequence of rooks lying weakly below and to the left of it.
LabeledDyckPath border_labeled_path(const RookPlacement& placement);

/// Labels change by +1 or 0 across an up step and by -1 or 0 across a down step.
bool monotone_property(const LabeledDyckPath& lp);

/// Zero labels occur exactly at height 0.
bool zero_property(const LabeledDyckPath& lp);

/// For every weak tunnel, the right endpoint's label is at most the left's.
bool tunnel_property(const LabeledDyckPath& lp);

/// Labels around every peak read l, l+1, l.
bool peak_property(const LabeledDyckPath& lp);

/// All vertex pairs (i, j), i < j, at equal height h whose connecting
/// horizontal segment stays at or below the path (every height between is >= h).
std::vector<std::pair<int, int>> weak_tunnel_pairs(const DyckPath& path);

/// Conjunction of the monotone, zero, tunnel, and peak properties — the
/// labeled paths produced by border_labeled_path on 312-avoiding placements.
bool is_admissible(const LabeledDyckPath& lp);

/// All admissible labeled paths of semilength n, paths in lexicographic
/// (U < D) order and labels smallest-first.
std::vector<LabeledDyckPath> enumerate_admissible(int n);

/// Largest label on the path (0 for the empty path).
int max_label(const LabeledDyckPath& lp);

/// All Dyck paths of semilength n in lexicographic (U < D) order.
std::vector<DyckPath> enumerate_dyck_paths(int n);

}  // namespace rookpath
