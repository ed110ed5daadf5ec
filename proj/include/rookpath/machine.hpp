#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rookpath/dyck.hpp"
#include "rookpath/perm.hpp"

namespace rookpath {

// Sortability search and greedy-word search are refused above this length.
inline constexpr int kMaxSortableLength = 9;

/// A word over {s, t, p}: push to stack 1, transfer stack 1 -> stack 2, pop
/// stack 2 to the output.
class StackWord {
public:
    StackWord() = default;
    explicit StackWord(std::string letters);

    const std::string& str() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }

    friend bool operator==(const StackWord&, const StackWord&) = default;
    friend std::strong_ordering operator<=>(const StackWord& a, const StackWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    std::string letters_;
};

/// Snapshot of the two-stacks-in-series machine. The four containers
/// partition the input values; stacks are stored bottom to top.
struct MachineState {
    std::vector<int> input;   // values not yet read, in input order
    std::vector<int> stack1;  // bottom to top
    std::vector<int> stack2;  // bottom to top
    std::vector<int> output;  // values emitted so far

    friend bool operator==(const MachineState&, const MachineState&) = default;
};

MachineState initial_state(const Permutation& pi);

/// Applies the letters of `word` to `pi`. Throws MachineError (with position
/// and reason) on an inapplicable letter, and, when enforce_increasing is set,
/// when a moved value would not be smaller than the destination stack's top.
MachineState execute(const StackWord& word, const Permutation& pi, bool enforce_increasing);

/// As execute, but returns the state after every letter.
std::vector<std::pair<char, MachineState>> execute_trace(const StackWord& word,
                                                         const Permutation& pi,
                                                         bool enforce_increasing);

/// Equal numbers of s, t, p, and every prefix has #s >= #t >= #p.
bool is_valid_word(const StackWord& word);

/// Valid and free of the forbidden factors: t u t with u a possibly empty
/// valid word, sp, and u t with u a nonempty valid word.
bool is_greedy_increasing_word(const StackWord& word);

/// Maps an admissible labeled path to its greedy stack word: positive up step
/// -> st, neutral up -> s, neutral down -> pt, negative down -> p.
StackWord word_from_path(const LabeledDyckPath& lp);

/// Inverse of word_from_path: s/p become U/D and each vertex is labeled by
/// the size of the second stack before the next push or pop.
LabeledDyckPath path_from_word(const StackWord& word);

/// The unique permutation a valid word sorts: simulate with symbolic entries
/// and give the k-th popped entry the value k.
Permutation word_to_permutation(const StackWord& word);

/// True iff pi can be sorted by two increasing stacks in series. Decided by
/// depth-first search over legal moves with memoized states; pops are taken
/// only when the top of stack 2 is the next value the output needs.
bool sortable(const Permutation& pi);

/// The unique greedy word that sorts pi, when pi is sortable.
/// Found by pruned search; the search finding two distinct words would be a
/// logic error.
std::optional<StackWord> greedy_word(const Permutation& pi);

/// All greedy words of length 3n, by pruned letter-by-letter
/// search (independent of word_from_path), in lexicographic p < s < t order.
std::vector<StackWord> enumerate_greedy_words(int n);

}  // namespace rookpath
