#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rookpath/dyck.hpp"

using namespace rookpath;

namespace {

LabeledDyckPath lpath(const std::string& steps, std::vector<int> labels) {
    return LabeledDyckPath(DyckPath(steps), std::move(labels));
}

const LabeledDyckPath& worked_path() {
    static const LabeledDyckPath lp = lpath("UUUDDUUDDD", {0, 1, 1, 2, 1, 1, 1, 2, 1, 1, 0});
    return lp;
}

}  // namespace

TEST_CASE("Dyck path validation") {
    CHECK(DyckPath("UUDD").semilength() == 2);
    CHECK(DyckPath().semilength() == 0);
    CHECK_THROWS_AS(DyckPath("UDD"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath("DU"), std::invalid_argument);
    CHECK_THROWS_AS(DyckPath("UX"), std::invalid_argument);
    CHECK_THROWS_AS(lpath("UD", {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(lpath("UD", {0, -1, 0}), std::invalid_argument);
}

TEST_CASE("border paths of board-minimal placements") {
    CHECK(border_labeled_path(board_minimal_placement(parse_permutation("42513"))) ==
          worked_path());
    CHECK(border_labeled_path(board_minimal_placement(parse_permutation("1"))) ==
          lpath("UD", {0, 1, 0}));
    CHECK(border_labeled_path(board_minimal_placement(parse_permutation("21"))) ==
          lpath("UDUD", {0, 1, 0, 1, 0}));
}

TEST_CASE("monotone property") {
    CHECK(monotone_property(worked_path()));
    CHECK_FALSE(monotone_property(lpath("UD", {0, 2, 0})));
    CHECK_FALSE(monotone_property(lpath("UD", {1, 0, 0})));
}

TEST_CASE("zero property") {
    CHECK(zero_property(worked_path()));
    CHECK_FALSE(zero_property(lpath("UUDD", {0, 0, 1, 0, 0})));
    CHECK(zero_property(lpath("UD", {0, 1, 0})));
}

TEST_CASE("weak tunnels by direct height scan") {
    using Pairs = std::vector<std::pair<int, int>>;
    CHECK(weak_tunnel_pairs(DyckPath("UD")) == Pairs{{0, 2}});
    CHECK(weak_tunnel_pairs(DyckPath("UUDD")) == Pairs{{0, 4}, {1, 3}});
    // The segment from vertex 1 to vertex 3 of UDUD rises above the path's dip
    // to the axis, so (1,3) is not a weak tunnel.
    CHECK(weak_tunnel_pairs(DyckPath("UDUD")) == Pairs{{0, 2}, {0, 4}, {2, 4}});
    CHECK(weak_tunnel_pairs(DyckPath()).empty());
}

TEST_CASE("tunnel property") {
    CHECK(tunnel_property(worked_path()));
    // Vertices 1 and 3 are not tunnel-connected (the path dips to 0 between
    // them), so the label rise there is allowed.
    CHECK(tunnel_property(lpath("UDUD", {0, 1, 0, 2, 0})));
    CHECK_FALSE(tunnel_property(lpath("UUDUDD", {0, 1, 1, 2, 2, 1, 0})));
}

TEST_CASE("peak property") {
    CHECK(peak_property(worked_path()));
    CHECK_FALSE(peak_property(lpath("UD", {0, 0, 0})));
    CHECK(peak_property(lpath("UUDD", {0, 1, 2, 1, 0})));
}

TEST_CASE("admissibility is the conjunction of the four properties") {
    CHECK(is_admissible(worked_path()));
    CHECK(is_admissible(lpath("UD", {0, 1, 0})));
    CHECK_FALSE(is_admissible(lpath("UUDD", {0, 1, 1, 1, 0})));
}

TEST_CASE("admissible enumeration") {
    CHECK(enumerate_admissible(0) == std::vector<LabeledDyckPath>{LabeledDyckPath{}});
    CHECK(enumerate_admissible(1) == std::vector<LabeledDyckPath>{lpath("UD", {0, 1, 0})});
    CHECK(enumerate_admissible(2).size() == 2);
    CHECK(enumerate_admissible(4).size() == 23);
    for (const auto& lp : enumerate_admissible(5)) {
        CHECK(is_admissible(lp));
        CHECK(max_label(lp) <= 5);
    }
    CHECK_THROWS_AS(enumerate_admissible(kMaxAdmissibleLength + 1), ResourceLimitError);
}

TEST_CASE("admissible enumeration matches the avoider counts") {
    for (int n = 0; n <= 6; ++n)
        CHECK(enumerate_admissible(n).size() ==
              count_avoiders(n, {parse_permutation("3124")}));
}

TEST_CASE("max label") {
    CHECK(max_label(worked_path()) == 2);
    CHECK(max_label(lpath("UD", {0, 1, 0})) == 1);
    CHECK(max_label(LabeledDyckPath{}) == 0);
    for (int n = 1; n <= 6; ++n)
        for (const auto& pi : enumerate_avoiders(n, {}))
            CHECK(max_label(border_labeled_path(board_minimal_placement(pi))) == lis(pi));
}

TEST_CASE("Dyck path enumeration counts Catalan numbers in lexicographic order") {
    const int catalan[] = {1, 1, 2, 5, 14, 42};
    for (int n = 0; n <= 5; ++n) {
        const auto paths = enumerate_dyck_paths(n);
        CHECK(static_cast<int>(paths.size()) == catalan[n]);
        CHECK(std::is_sorted(paths.begin(), paths.end()));
    }
    const auto two = enumerate_dyck_paths(2);
    CHECK(two.front() == DyckPath("UUDD"));
    CHECK(two.back() == DyckPath("UDUD"));
}
