#pragma once

#include <optional>
#include <string>

#include "rookpath/machine.hpp"
#include "rookpath/textio.hpp"

namespace rookpath {

/// One permutation pushed through the whole bijection chain: board-minimal
/// placement, labeled border path, greedy stack word, and the permutation the
/// word sorts. The word stage applies only when the labeled path is
/// admissible, which is exactly the 3124-avoiding case.
struct ChainReport {
    Permutation perm;
    bool in_av3124 = false;
    bool in_av3124_1234 = false;
    RookPlacement placement;
    LabeledDyckPath labeled_path;
    int path_max_label = 0;
    bool admissible = false;
    std::optional<StackWord> word;
    std::optional<Permutation> sorts;
};

/// Recomputes every stage from scratch; requires a nonempty permutation.
ChainReport build_chain_report(const Permutation& pi);

std::string format_chain_report(const ChainReport& report);
json chain_report_json(const ChainReport& report);

}  // namespace rookpath
