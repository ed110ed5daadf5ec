#pragma once

#include <string>

#include "rookpath/machine.hpp"
#include "rookpath/rook.hpp"

namespace rookpath {

/// The board drawn row by row (top row first), 'x' for rooks, '.' for cells.
std::string render_board(const RookPlacement& placement);

/// The labeled path drawn with '/' and '\' steps and a digit per vertex.
std::string render_labeled_path(const LabeledDyckPath& lp);

/// One line per machine operation, stacks shown top first.
std::string render_trace(const StackWord& word, const Permutation& pi, bool enforce_increasing);

}  // namespace rookpath
