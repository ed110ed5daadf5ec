#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "rookpath/chain.hpp"
#include "rookpath/decomp.hpp"
#include "rookpath/render.hpp"
#include "rookpath/series.hpp"
#include "rookpath/verify.hpp"

namespace {

using namespace rookpath;

std::vector<Permutation> parse_basis(const std::string& text) {
    std::vector<Permutation> basis;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok =
            text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        basis.push_back(parse_permutation(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return basis;
}

int cmd_chain(const std::string& perm_text, bool as_json) {
    const ChainReport report = build_chain_report(parse_permutation(perm_text));
    if (as_json)
        std::cout << chain_report_json(report).dump(2) << "\n";
    else
        std::cout << format_chain_report(report);
    return 0;
}

int cmd_count(const std::string& basis_text, int max_n, bool as_json) {
    const auto basis = parse_basis(basis_text);
    json counts = json::array();
    for (int n = 1; n <= max_n; ++n) {
        const auto count = count_avoiders(n, basis);
        if (as_json)
            counts.push_back(count);
        else
            std::cout << n << ": " << count << "\n";
    }
    if (as_json) std::cout << json{{"basis", basis_text}, {"counts", counts}}.dump(2) << "\n";
    return 0;
}

int cmd_series(const std::string& name, int order, bool as_json) {
    PowerSeries series = [&] {
        if (name == "catalan") return catalan_series(order);
        if (name == "av1342") return av1342_series(order);
        if (name == "av3124-1234") return av3124_1234_series(order);
        throw std::invalid_argument("unknown series: " + name);
    }();
    if (as_json) {
        std::cout << series_json(series).dump(2) << "\n";
    } else {
        for (int n = 0; n <= order; ++n)
            std::cout << n << ": " << rational_to_string(series.coeff(n)) << "\n";
    }
    return 0;
}

int cmd_sortable(const std::string& perm_text, bool as_json) {
    const Permutation pi = parse_permutation(perm_text);
    const auto word = greedy_word(pi);
    if (as_json) {
        json j{{"permutation", pi.entries()}, {"sortable", word.has_value()}};
        if (word) {
            j["greedy_word"] = word->str();
            json trace = json::array();
            trace.push_back({{"op", "-"}, {"state", machine_state_json(initial_state(pi))}});
            for (const auto& [op, state] : execute_trace(*word, pi, true))
                trace.push_back({{"op", std::string(1, op)}, {"state", machine_state_json(state)}});
            j["trace"] = trace;
        }
        std::cout << j.dump(2) << "\n";
    } else if (word) {
        std::cout << format_permutation(pi) << " is sortable by two increasing stacks in series\n"
                  << "greedy word: " << word->str() << "\n";
    } else {
        std::cout << format_permutation(pi) << " is not sortable by two increasing stacks in series\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, int max_n) {
    const auto results = run_verify_suite(suite, max_n);
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.passed) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

int cmd_render(const std::string& perm_text, const std::string& what) {
    const Permutation pi = parse_permutation(perm_text);
    if (what == "board") {
        std::cout << render_board(board_minimal_placement(pi));
    } else if (what == "path") {
        std::cout << render_labeled_path(border_labeled_path(board_minimal_placement(pi)));
    } else if (what == "trace") {
        const auto word = greedy_word(pi);
        if (!word) {
            std::cout << format_permutation(pi)
                      << " is not sortable by two increasing stacks in series\n";
            return 0;
        }
        std::cout << render_trace(*word, pi, true);
    } else {
        throw std::invalid_argument("unknown render target: " + what);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bijections between pattern-avoiding permutations, rook placements on "
                 "Ferrers boards, labeled Dyck paths, and two-stack sorting words"};
    app.require_subcommand(1);

    std::string perm_text, basis_text, series_name = "catalan", suite = "all", what = "board";
    int max_n = 6, order = 10;
    bool as_json = false;

    auto* chain = app.add_subcommand("chain", "Push a permutation through the bijection chain");
    chain->add_option("perm,--perm", perm_text, "Permutation, e.g. 4,2,5,1,3 or 42513")
        ->required();
    chain->add_flag("--json", as_json, "JSON output");

    auto* count = app.add_subcommand("count", "Count avoiders of a pattern basis per length");
    count->add_option("--basis", basis_text, "Comma-separated patterns, e.g. 3124,1234")
        ->required();
    count->add_option("--max-n", max_n, "Largest length to count")->required();
    count->add_flag("--json", as_json, "JSON output");

    auto* series = app.add_subcommand("series", "Print generating-function coefficients");
    series->add_option("--name", series_name, "catalan, av1342, or av3124-1234")->required();
    series->add_option("--order", order, "Truncation order")->required();
    series->add_flag("--json", as_json, "JSON output");

    auto* sort = app.add_subcommand("sortable", "Test two-increasing-stack sortability");
    sort->add_option("perm,--perm", perm_text, "Permutation to sort")->required();
    sort->add_flag("--json", as_json, "JSON output with the machine trace");

    auto* verify = app.add_subcommand("verify", "Run the cross-module invariant suites");
    verify->add_option("--suite", suite, "all, pi-chi, phi, words, or series");
    verify->add_option("--max-n", max_n, "Exhaustive bound (capped per check)");

    auto* render = app.add_subcommand("render", "Draw a board, labeled path, or machine trace");
    render->add_option("perm,--perm", perm_text, "Permutation")->required();
    render->add_option("--what", what, "board, path, or trace");

    try {
        app.parse(argc, argv);
        if (chain->parsed()) return cmd_chain(perm_text, as_json);
        if (count->parsed()) return cmd_count(basis_text, max_n, as_json);
        if (series->parsed()) return cmd_series(series_name, order, as_json);
        if (sort->parsed()) return cmd_sortable(perm_text, as_json);
        if (verify->parsed()) return cmd_verify(suite, max_n);
        if (render->parsed()) return cmd_render(perm_text, what);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
