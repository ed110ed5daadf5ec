#pragma once

#include <json.hpp>

#include <string>

#include "rookpath/dyck.hpp"
#include "rookpath/machine.hpp"
#include "rookpath/perm.hpp"
#include "rookpath/rook.hpp"
#include "rookpath/series.hpp"

namespace rookpath {

using nlohmann::json;

/// "heights=5,5,5,3,3; rooks=(1,4),(2,2),(3,5),(4,1),(5,3)"
std::string format_placement(const RookPlacement& placement);
json placement_json(const RookPlacement& placement);

/// "UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0" (the empty path prints "empty | 0")
std::string format_labeled_path(const LabeledDyckPath& lp);
json labeled_path_json(const LabeledDyckPath& lp);

/// {"order": N, "coeffs": ["p/q", ...]}
json series_json(const PowerSeries& series);

/// Stacks are serialized top first.
json machine_state_json(const MachineState& state);

}  // namespace rookpath
