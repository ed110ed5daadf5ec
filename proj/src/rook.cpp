#include "rookpath/rook.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rookpath {

FerrersBoard::FerrersBoard(std::vector<int> heights) : heights_(std::move(heights)) {
    if (heights_.empty()) throw std::invalid_argument("Ferrers board needs at least one column");
    for (std::size_t i = 0; i < heights_.size(); ++i) {
        if (heights_[i] < 1) throw std::invalid_argument("column heights must be positive");
        if (i > 0 && heights_[i] > heights_[i - 1])
            throw std::invalid_argument("column heights must be weakly decreasing");
    }
}

long FerrersBoard::total_cells() const {
    return std::accumulate(heights_.begin(), heights_.end(), 0L);
}

RookPlacement::RookPlacement(FerrersBoard board, std::vector<int> row_of_column)
    : board_(std::move(board)), row_of_column_(std::move(row_of_column)) {
    const int n = board_.columns();
    if (static_cast<int>(row_of_column_.size()) != n)
        throw std::invalid_argument("need exactly one rook per column");
    if (board_.height(1) != n)
        throw std::invalid_argument("a full placement has as many rows as columns");
    std::vector<bool> row_used(static_cast<std::size_t>(n) + 1, false);
    for (int c = 1; c <= n; ++c) {
        const int r = rook_row(c);
        if (r < 1 || r > n || row_used[static_cast<std::size_t>(r)])
            throw std::invalid_argument("rook rows must be a rearrangement of 1..n");
        row_used[static_cast<std::size_t>(r)] = true;
        if (!board_.cell_on_board(c, r)) throw std::invalid_argument("rook off the board");
    }
}

std::vector<std::pair<int, int>> RookPlacement::rook_cells() const {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(row_of_column_.size());
    for (int c = 1; c <= rooks(); ++c) cells.emplace_back(c, rook_row(c));
    return cells;
}

RookPlacement square_placement(const Permutation& pi) {
    if (pi.empty()) throw std::invalid_argument("square placement needs a nonempty permutation");
    const int n = pi.size();
    return RookPlacement(FerrersBoard(std::vector<int>(static_cast<std::size_t>(n), n)),
                         pi.entries());
}

RookPlacement board_minimal_placement(const Permutation& pi) {
    if (pi.empty()) throw std::invalid_argument("board-minimal placement needs a nonempty permutation");
    const int n = pi.size();
    std::vector<int> heights(static_cast<std::size_t>(n));
    int suffix_max = 0;
    for (int i = n - 1; i >= 0; --i) {
        suffix_max = std::max(suffix_max, pi[i]);
        heights[static_cast<std::size_t>(i)] = suffix_max;
    }
    return RookPlacement(FerrersBoard(std::move(heights)), pi.entries());
}

bool is_board_minimal(const RookPlacement& placement) {
    const auto& board = placement.board();
    const int n = board.columns();
    for (int c = 1; c <= n; ++c) {
        const bool corner = (c == n) || board.height(c + 1) < board.height(c);
        if (corner && !placement.rook_at(c, board.height(c))) return false;
    }
    return true;
}

namespace {

bool extend_match(const RookPlacement& placement, const std::vector<int>& pattern,
                  std::vector<std::pair<int, int>>& chosen, int start_col) {
    const std::size_t depth = chosen.size();
    if (depth == pattern.size()) {
        int max_row = 0;
        for (const auto& [c, r] : chosen) max_row = std::max(max_row, r);
        return placement.board().cell_on_board(chosen.back().first, max_row);
    }
    const int n = placement.rooks();
    for (int c = start_col; c + (static_cast<int>(pattern.size() - depth) - 1) <= n; ++c) {
        const int r = placement.rook_row(c);
        bool ok = true;
        for (std::size_t k = 0; k < depth; ++k) {
            if ((chosen[k].second < r) != (pattern[k] < pattern[depth])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.emplace_back(c, r);
        if (extend_match(placement, pattern, chosen, c + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool placement_contains(const RookPlacement& placement, const Permutation& sigma) {
    if (sigma.empty()) throw std::invalid_argument("pattern must be nonempty");
    if (sigma.size() > placement.rooks()) return false;
    std::vector<std::pair<int, int>> chosen;
    chosen.reserve(static_cast<std::size_t>(sigma.size()));
    return extend_match(placement, sigma.entries(), chosen, 1);
}

Permutation read_permutation(const RookPlacement& placement) {
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(placement.rooks()));
    for (int c = 1; c <= placement.rooks(); ++c) entries.push_back(placement.rook_row(c));
    return Permutation(std::move(entries));
}

}  // namespace rookpath
