#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "rookpath/perm.hpp"

namespace rookpath {

/// A Ferrers board in French/Cartesian orientation, stored as its column
/// heights h_1 >= h_2 >= ... >= h_n >= 1. Cells are implicit: column c holds
/// the cells (c, 1..h_c).
class FerrersBoard {
public:
    explicit FerrersBoard(std::vector<int> heights);

    int columns() const { return static_cast<int>(heights_.size()); }
    int height(int c) const { return heights_[static_cast<std::size_t>(c - 1)]; }  // 1-based
    const std::vector<int>& heights() const { return heights_; }
    bool cell_on_board(int c, int r) const {
        return c >= 1 && c <= columns() && r >= 1 && r <= height(c);
    }
    long total_cells() const;

    friend bool operator==(const FerrersBoard&, const FerrersBoard&) = default;

private:
    std::vector<int> heights_;
};

/// A full rook placement: a Ferrers board with n columns and n rows (h_1 = n)
/// carrying one rook per row and per column. Rooks are stored as the row of
/// the rook in each column.
class RookPlacement {
public:
    RookPlacement(FerrersBoard board, std::vector<int> row_of_column);

    const FerrersBoard& board() const { return board_; }
    int rooks() const { return static_cast<int>(row_of_column_.size()); }
    int rook_row(int c) const { return row_of_column_[static_cast<std::size_t>(c - 1)]; }
    bool rook_at(int c, int r) const { return rook_row(c) == r; }

    /// Rooks as (column, row) cells, in column order.
    std::vector<std::pair<int, int>> rook_cells() const;

    friend bool operator==(const RookPlacement&, const RookPlacement&) = default;

private:
    FerrersBoard board_;
    std::vector<int> row_of_column_;
};

/// The n-by-n square placement with a rook at (i, pi(i)) in each column.
RookPlacement square_placement(const Permutation& pi);

/// The board-minimal placement of pi: rooks at (i, pi(i)) on the smallest
/// Ferrers board containing them, h_i = max of pi over positions >= i.
RookPlacement board_minimal_placement(const Permutation& pi);

/// True iff every upper-right corner of the board holds a rook.
bool is_board_minimal(const RookPlacement& placement);

/// Pattern containment for full rook placements: true iff some rooks, taken in
/// column order, have rows order isomorphic to sigma and the bounding cell
/// (last column, max row) lies on the board. On Ferrers boards this is
/// equivalent to obtaining sigma's square placement by row/column deletion.
bool placement_contains(const RookPlacement& placement, const Permutation& sigma);

/// The permutation read off the rook rows, column by column.
Permutation read_permutation(const RookPlacement& placement);

}  // namespace rookpath
