#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rookpath/errors.hpp"
#include "rookpath/machine.hpp"

using namespace rookpath;

namespace {

LabeledDyckPath lpath(const std::string& steps, std::vector<int> labels) {
    return LabeledDyckPath(DyckPath(steps), std::move(labels));
}

const StackWord& worked_word() {
    static const StackWord w{"stsstpptsstpptp"};
    return w;
}

const LabeledDyckPath& worked_path() {
    static const LabeledDyckPath lp = lpath("UUUDDUUDDD", {0, 1, 1, 2, 1, 1, 1, 2, 1, 1, 0});
    return lp;
}

}  // namespace

TEST_CASE("executing the worked sorting") {
    const Permutation pi = parse_permutation("24153");
    const MachineState final_state = execute(worked_word(), pi, true);
    CHECK(final_state.output == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(final_state.input.empty());
    CHECK(final_state.stack1.empty());
    CHECK(final_state.stack2.empty());

    // Mid-run snapshot after "sstst" read as s,t,s,s,t: both stacks occupied.
    const auto trace = execute_trace(worked_word(), pi, true);
    CHECK(trace[4].second == MachineState{{5, 3}, {4}, {2, 1}, {}});
    CHECK(trace[6].second == MachineState{{5, 3}, {4}, {}, {1, 2}});
}

TEST_CASE("executing trivial and failing words") {
    CHECK(execute(StackWord("stp"), parse_permutation("1"), true).output ==
          std::vector<int>{1});
    CHECK_THROWS_AS(execute(StackWord("ts"), parse_permutation("12"), false), MachineError);
    try {
        execute(StackWord("ts"), parse_permutation("12"), false);
    } catch (const MachineError& e) {
        CHECK(e.position == 0);
    }
    // Pushing 2 onto 1 breaks the increasing discipline, but only when enforced.
    CHECK_THROWS_AS(execute(StackWord("ss"), parse_permutation("12"), true), MachineError);
    CHECK_NOTHROW(execute(StackWord("ss"), parse_permutation("12"), false));
    CHECK_NOTHROW(execute(StackWord("ss"), parse_permutation("21"), true));
    CHECK_THROWS_AS(StackWord("abc"), std::invalid_argument);
}

TEST_CASE("valid words") {
    CHECK(is_valid_word(StackWord("stp")));
    CHECK_FALSE(is_valid_word(StackWord("tsp")));
    CHECK(is_valid_word(worked_word()));
    CHECK(is_valid_word(StackWord("")));
    CHECK_FALSE(is_valid_word(StackWord("stpp")));
    CHECK(is_valid_word(StackWord("stsptp")));
}

TEST_CASE("greedy words") {
    CHECK(is_greedy_increasing_word(worked_word()));
    CHECK(is_greedy_increasing_word(StackWord("stpstp")));
    CHECK(is_greedy_increasing_word(StackWord("ststpp")));
    CHECK_FALSE(is_greedy_increasing_word(StackWord("ssptp")));   // invalid and has sp
    CHECK_FALSE(is_greedy_increasing_word(StackWord("stsptp")));  // sp factor
    CHECK_FALSE(is_greedy_increasing_word(StackWord("sstptp")));  // "stp" then t
    CHECK_FALSE(is_greedy_increasing_word(StackWord("ssttpp")));  // tt factor
}

TEST_CASE("words from labeled paths") {
    CHECK(word_from_path(worked_path()) == worked_word());
    CHECK(word_from_path(lpath("UD", {0, 1, 0})) == StackWord("stp"));
    CHECK(word_from_path(lpath("UDUD", {0, 1, 0, 1, 0})) == StackWord("stpstp"));
    CHECK_THROWS_AS(word_from_path(lpath("UD", {0, 0, 0})), std::invalid_argument);
}

TEST_CASE("labeled paths from words") {
    CHECK(path_from_word(worked_word()) == worked_path());
    CHECK(path_from_word(StackWord("stp")) == lpath("UD", {0, 1, 0}));
    CHECK(path_from_word(StackWord("stpstp")) == lpath("UDUD", {0, 1, 0, 1, 0}));
    CHECK_THROWS_AS(path_from_word(StackWord("ssttpp")), std::invalid_argument);
}

TEST_CASE("decoding the sorted permutation from a word") {
    CHECK(word_to_permutation(worked_word()) == parse_permutation("24153"));
    CHECK(word_to_permutation(StackWord("stp")) == parse_permutation("1"));
    // The transfers stack e1 on top of e2, so e1 pops first: 12, not 21.
    CHECK(word_to_permutation(StackWord("ssttpp")) == parse_permutation("12"));
    CHECK(word_to_permutation(StackWord("ststpp")) == parse_permutation("21"));
    CHECK_THROWS_AS(word_to_permutation(StackWord("tsp")), std::invalid_argument);
}

TEST_CASE("sortability") {
    CHECK(sortable(parse_permutation("24153")));
    CHECK(sortable(Permutation::identity(5)));
    CHECK_FALSE(sortable(parse_permutation("2341")));
    int sortable_4 = 0;
    for (const auto& pi : enumerate_avoiders(4, {}))
        if (sortable(pi)) ++sortable_4;
    CHECK(sortable_4 == 23);
    CHECK_THROWS_AS(sortable(Permutation::identity(kMaxSortableLength + 1)),
                    ResourceLimitError);
}

TEST_CASE("greedy word search") {
    CHECK(greedy_word(parse_permutation("24153")) == worked_word());
    CHECK(greedy_word(parse_permutation("1")) == StackWord("stp"));
    CHECK(greedy_word(Permutation::identity(2)) == StackWord("stpstp"));
    CHECK(greedy_word(parse_permutation("21")) == StackWord("ststpp"));
    CHECK_FALSE(greedy_word(parse_permutation("2341")).has_value());
}

TEST_CASE("greedy word enumeration") {
    CHECK(enumerate_greedy_words(0) == std::vector<StackWord>{StackWord("")});
    CHECK(enumerate_greedy_words(1) == std::vector<StackWord>{StackWord("stp")});
    const auto two = enumerate_greedy_words(2);
    CHECK(two == std::vector<StackWord>{StackWord("stpstp"), StackWord("ststpp")});
    CHECK(enumerate_greedy_words(4).size() == 23);
    CHECK(std::is_sorted(two.begin(), two.end()));
}

TEST_CASE("image words round trip and sort, through semilength 5") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lp : enumerate_admissible(n)) {
            const StackWord w = word_from_path(lp);
            CHECK(is_greedy_increasing_word(w));
            CHECK(w.str().find("tt") == std::string::npos);
            CHECK(w.str().find("sp") == std::string::npos);
            CHECK(path_from_word(w) == lp);
            const Permutation pi = word_to_permutation(w);
            CHECK(execute(w, pi, true).output == Permutation::identity(n).entries());
            CHECK(sortable(pi));
            CHECK(greedy_word(pi) == w);
        }
}
