#include "rookpath/chain.hpp"

namespace rookpath {

ChainReport build_chain_report(const Permutation& pi) {
    RookPlacement placement = board_minimal_placement(pi);
    LabeledDyckPath lp = border_labeled_path(placement);
    ChainReport report{pi,
                       avoids_all(pi, {parse_permutation("3124")}),
                       avoids_all(pi, {parse_permutation("3124"), parse_permutation("1234")}),
                       std::move(placement),
                       lp,
                       max_label(lp),
                       is_admissible(lp),
                       std::nullopt,
                       std::nullopt};
    if (report.admissible) {
        report.word = word_from_path(report.labeled_path);
        report.sorts = word_to_permutation(*report.word);
    }
    return report;
}

std::string format_chain_report(const ChainReport& report) {
    std::string out;
    out += "permutation:      " + format_permutation(report.perm) + "\n";
    out += "in Av(3124):      " + std::string(report.in_av3124 ? "yes" : "no") + "\n";
    out += "in Av(3124,1234): " + std::string(report.in_av3124_1234 ? "yes" : "no") + "\n";
    out += "board:            " + format_placement(report.placement) + "\n";
    out += "labeled path:     " + format_labeled_path(report.labeled_path) + "\n";
    out += "max label:        " + std::to_string(report.path_max_label) + "\n";
    if (report.word) {
        out += "stack word:       " + report.word->str() + "\n";
        out += "sorts:            " + format_permutation(*report.sorts) + "\n";
    } else {
        out += "note: contains 3124; the labeled path is not admissible, so the "
               "stack-word stage does not apply\n";
    }
    return out;
}

json chain_report_json(const ChainReport& report) {
    json j{{"permutation", report.perm.entries()},
           {"in_av3124", report.in_av3124},
           {"in_av3124_1234", report.in_av3124_1234},
           {"board", placement_json(report.placement)},
           {"labeled_path", labeled_path_json(report.labeled_path)},
           {"max_label", report.path_max_label},
           {"admissible", report.admissible}};
    if (report.word) {
        j["stack_word"] = report.word->str();
        j["sorts"] = report.sorts->entries();
    }
    return j;
}

}  // namespace rookpath
