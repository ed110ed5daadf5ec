#pragma once

#include <vector>

#include "rookpath/dyck.hpp"

namespace rookpath::detail {

// Constraints for the exhaustive vertex-labeling search. The monotone, peak,
// and tunnel properties are always enforced online; the fields below select
// the per-family label rules.
struct LabelingRules {
    int label_cap;                // inclusive upper bound on every label
    bool force_zero_on_axis;      // height 0 => label 0
    bool forbid_zero_above_axis;  // height > 0 => label >= 1
    int first_label;              // label of vertex 0
};

// All labelings of `path` satisfying the rules, in smallest-first order.
std::vector<LabeledDyckPath> enumerate_labelings(const DyckPath& path, const LabelingRules& rules);

}  // namespace rookpath::detail
