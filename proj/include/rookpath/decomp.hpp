#pragma once

#include <utility>
#include <vector>

#include "rookpath/dyck.hpp"

namespace rookpath {

// Exhaustive block-family enumeration is refused above this semilength.
inline constexpr int kMaxBlockLength = 7;

/// Family A: labeled paths satisfying the monotone, tunnel, and peak
/// properties, with every label in {0,1,2} and label 0 at every height-0
/// vertex (zeros may also occur above the axis). These are exactly the
/// decremented interiors produced by return_blocks. The empty path belongs.
bool is_return_block(const LabeledDyckPath& lp);

/// Family B: as family A except nonempty, the leftmost label is 1, and no
/// axis rule is imposed beyond that.
bool is_leading_one_block(const LabeledDyckPath& lp);

/// Family C membership: a nonempty path labeled all 1s except 2s at peaks.
bool is_trivially_labeled(const LabeledDyckPath& lp);

/// The trivial labeling (1s, with 2s at peaks) of a nonempty Dyck path.
LabeledDyckPath trivial_labels(const DyckPath& path);

/// Splits an admissible path with labels at most 3 at its returns and strips
/// each return block to its interior with labels decremented by 1. Every
/// output is a member of family A.
std::vector<LabeledDyckPath> return_blocks(const LabeledDyckPath& lp);

/// The bijection A x C -> B. For empty `a` the first-return block of `c`
/// moves behind the rest, trivially labeled; otherwise `c`'s first-return
/// interior is grafted into `a` at its first label-1 vertex.
LabeledDyckPath combine_blocks(const LabeledDyckPath& a, const LabeledDyckPath& c);

/// Inverse of combine_blocks; throws std::invalid_argument if the input is
/// not in the image (which is_leading_one_block members never are).
std::pair<LabeledDyckPath, LabeledDyckPath> split_block(const LabeledDyckPath& b);

/// All family-A members of semilength n, paths lexicographic, labels
/// smallest-first.
std::vector<LabeledDyckPath> enumerate_family_a(int n);

/// All family-B members of semilength n.
std::vector<LabeledDyckPath> enumerate_family_b(int n);

}  // namespace rookpath
