#include "rookpath/render.hpp"

#include <algorithm>

namespace rookpath {

std::string render_board(const RookPlacement& placement) {
    const auto& board = placement.board();
    std::string out;
    for (int r = board.height(1); r >= 1; --r) {
        for (int c = 1; c <= board.columns() && board.height(c) >= r; ++c) {
            if (c > 1) out += ' ';
            out += placement.rook_at(c, r) ? 'x' : '.';
        }
        out += '\n';
    }
    return out;
}

std::string render_labeled_path(const LabeledDyckPath& lp) {
    const auto& path = lp.path();
    const int m = path.length();
    const int maxh = *std::max_element(path.heights().begin(), path.heights().end());
    std::vector<std::string> canvas(static_cast<std::size_t>(2 * maxh + 1),
                                    std::string(static_cast<std::size_t>(2 * m + 1), ' '));
    auto put = [&](int row, int col, const std::string& text) {
        for (std::size_t k = 0; k < text.size(); ++k)
            canvas[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) + k] = text[k];
    };
    for (int j = 0; j <= m; ++j)
        put(2 * (maxh - path.height(j)), 2 * j, std::to_string(lp.label(j)));
    for (int k = 1; k <= m; ++k) {
        const int top = std::max(path.height(k - 1), path.height(k));
        put(2 * (maxh - top) + 1, 2 * k - 1, path.step(k) == 'U' ? "/" : "\\");
    }
    std::string out;
    for (auto& line : canvas) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string render_trace(const StackWord& word, const Permutation& pi, bool enforce_increasing) {
    auto fmt = [](const std::vector<int>& values, bool top_first) {
        if (values.empty()) return std::string("-");
        std::string out;
        if (top_first)
            for (auto it = values.rbegin(); it != values.rend(); ++it)
                out += std::to_string(*it);
        else
            for (int v : values) out += std::to_string(v);
        return out;
    };
    auto row = [&](char op, const MachineState& state) {
        auto pad = [](std::string s, std::size_t width) {
            s.resize(std::max(s.size(), width), ' ');
            return s;
        };
        return std::string(1, op) + "  in: " + pad(fmt(state.input, false), 10) +
               " stack1: " + pad(fmt(state.stack1, true), 10) +
               " stack2: " + pad(fmt(state.stack2, true), 10) + " out: " +
               fmt(state.output, false) + "\n";
    };
    std::string out = row('-', initial_state(pi));
    for (const auto& [op, state] : execute_trace(word, pi, enforce_increasing))
        out += row(op, state);
    return out;
}

}  // namespace rookpath
