#include "rookpath/textio.hpp"

namespace rookpath {

namespace {

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

}  // namespace

std::string format_placement(const RookPlacement& placement) {
    std::string out = "heights=" + join_ints(placement.board().heights()) + "; rooks=";
    const auto cells = placement.rook_cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) out += ',';
        out += "(" + std::to_string(cells[i].first) + "," + std::to_string(cells[i].second) + ")";
    }
    return out;
}

json placement_json(const RookPlacement& placement) {
    json rooks = json::array();
    for (const auto& [c, r] : placement.rook_cells()) rooks.push_back({c, r});
    return json{{"heights", placement.board().heights()}, {"rooks", rooks}};
}

std::string format_labeled_path(const LabeledDyckPath& lp) {
    const std::string steps = lp.path().steps().empty() ? "empty" : lp.path().steps();
    return steps + " | " + join_ints(lp.labels());
}

json labeled_path_json(const LabeledDyckPath& lp) {
    return json{{"steps", lp.path().steps()}, {"labels", lp.labels()}};
}

json series_json(const PowerSeries& series) {
    json coeffs = json::array();
    for (int k = 0; k <= series.order(); ++k)
        coeffs.push_back(rational_to_string(series.coeff(k)));
    return json{{"order", series.order()}, {"coeffs", coeffs}};
}

json machine_state_json(const MachineState& state) {
    auto top_first = [](const std::vector<int>& stack) {
        return std::vector<int>(stack.rbegin(), stack.rend());
    };
    return json{{"input", state.input},
                {"stack1", top_first(state.stack1)},
                {"stack2", top_first(state.stack2)},
                {"output", state.output}};
}

}  // namespace rookpath
