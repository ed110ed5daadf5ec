// Acceptance suite: reproduces the headline enumerative results exactly at
// desk scale, one pass/fail line per criterion. Exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <vector>

#include "rookpath/chain.hpp"
#include "rookpath/decomp.hpp"
#include "rookpath/series.hpp"

using namespace rookpath;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool passed, const std::string& detail = "") {
    std::cout << "criterion " << criterion << " [" << (passed ? "PASS" : "FAIL") << "] " << what;
    if (!passed && !detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!passed) ++failures;
}

template <typename T>
bool sets_equal(std::vector<T> lhs, std::vector<T> rhs) {
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (std::adjacent_find(lhs.begin(), lhs.end()) != lhs.end()) return false;
    if (std::adjacent_find(rhs.begin(), rhs.end()) != rhs.end()) return false;
    return lhs == rhs;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

const Permutation kP3124 = parse_permutation("3124");
const Permutation kP1342 = parse_permutation("1342");
const Permutation kP1234 = parse_permutation("1234");
const Permutation kP312 = parse_permutation("312");

void criterion_1() {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t expected[] = {0, 1, 2, 6, 23, 103, 512, 2740, 15485};
    const PowerSeries series = av1342_series(8);
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8 && ok; ++n) {
        const auto via_3124 = count_avoiders(n, {kP3124});
        const auto via_1342 = count_avoiders(n, {kP1342});
        const bool series_matches = series.coeff(n) == static_cast<long>(expected[n]);
        if (via_3124 != expected[n] || via_1342 != expected[n] || !series_matches) {
            ok = false;
            std::ostringstream s;
            s << "n=" << n << ": Av(3124)=" << via_3124 << ", Av(1342)=" << via_1342
              << ", series=" << rational_to_string(series.coeff(n)) << ", expected "
              << expected[n];
            detail = s.str();
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 120.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + "s, target is under 2 minutes";
    }
    report(1, "Av(1342) and Av(3124) counts match the class series for n = 1..8", ok, detail);
}

void criterion_2() {
    const auto start = std::chrono::steady_clock::now();
    const PowerSeries series = av3124_1234_series(10);
    bool ok = series.coeff(0) == 1;
    std::string detail = ok ? "" : "constant term is not 1";
    const std::uint64_t anchors[] = {1, 1, 2, 6, 22};
    for (int n = 1; n <= 10 && ok; ++n) {
        const auto count = count_avoiders(n, {kP3124, kP1234});
        if (series.coeff(n) != static_cast<long>(count) ||
            (n <= 4 && count != anchors[n])) {
            ok = false;
            std::ostringstream s;
            s << "n=" << n << ": count=" << count << ", series="
              << rational_to_string(series.coeff(n));
            detail = s.str();
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 300.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + "s, target is under 5 minutes";
    }
    report(2, "Av(3124,1234) counts match 1/(1-xC(xC(x))) for n = 1..10", ok, detail);
}

void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 8 && ok; ++n) {
        std::vector<Permutation> via_placements;
        for (const auto& pi : enumerate_avoiders(n, {}))
            if (!placement_contains(board_minimal_placement(pi), kP312))
                via_placements.push_back(pi);
        if (!sets_equal(via_placements, enumerate_avoiders(n, {kP3124}))) {
            ok = false;
            detail = "set mismatch at n=" + std::to_string(n);
        }
    }
    report(3, "312-avoiding board-minimal placements are exactly Av(3124) for n <= 8", ok,
           detail);
}

void criterion_4() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7 && ok; ++n) {
        std::vector<LabeledDyckPath> images;
        for (const auto& pi : enumerate_avoiders(n, {kP3124}))
            images.push_back(border_labeled_path(board_minimal_placement(pi)));
        if (!sets_equal(images, enumerate_admissible(n))) {
            ok = false;
            detail = "image set mismatch at n=" + std::to_string(n);
            break;
        }
        std::vector<LabeledDyckPath> bounded_images;
        for (const auto& pi : enumerate_avoiders(n, {kP3124, kP1234}))
            bounded_images.push_back(border_labeled_path(board_minimal_placement(pi)));
        std::vector<LabeledDyckPath> bounded;
        for (const auto& lp : enumerate_admissible(n))
            if (max_label(lp) <= 3) bounded.push_back(lp);
        if (!sets_equal(bounded_images, bounded)) {
            ok = false;
            detail = "bounded-label image mismatch at n=" + std::to_string(n);
        }
    }
    report(4, "the labeled border path map bijects onto the admissible paths for n <= 7", ok,
           detail);
}

void criterion_5() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6 && ok; ++n) {
        std::vector<LabeledDyckPath> images;
        for (int k = 0; k < n && ok; ++k)
            for (const auto& a : enumerate_family_a(k))
                for (const auto& path : enumerate_dyck_paths(n - k)) {
                    const auto c = trivial_labels(path);
                    const auto b = combine_blocks(a, c);
                    images.push_back(b);
                    const auto [a2, c2] = split_block(b);
                    if (a2 != a || c2 != c) {
                        ok = false;
                        detail = "round trip failed at n=" + std::to_string(n);
                    }
                }
        if (ok && !sets_equal(images, enumerate_family_b(n))) {
            ok = false;
            detail = "image set mismatch at n=" + std::to_string(n);
        }
        if (ok)
            for (const auto& b : enumerate_family_b(n)) {
                const auto [a, c] = split_block(b);
                if (combine_blocks(a, c) != b) {
                    ok = false;
                    detail = "reverse round trip failed at n=" + std::to_string(n);
                    break;
                }
            }
    }
    if (ok) {
        const int order = 20;
        const PowerSeries one = PowerSeries::constant(order, 1);
        const PowerSeries x = PowerSeries::monomial(order, 1, 1);
        const PowerSeries c = catalan_series(order);
        const PowerSeries a = compose(c, x * c);
        const PowerSeries b = a * (c - one);
        if (a != one + x * (a + b) * a) {
            ok = false;
            detail = "branching identity fails at order 20";
        }
        for (int n = 0; n <= 6 && ok; ++n) {
            if (a.coeff(n) != static_cast<long>(enumerate_family_a(n).size()) ||
                b.coeff(n) != static_cast<long>(enumerate_family_b(n).size())) {
                ok = false;
                detail = "family counts disagree with the series at n=" + std::to_string(n);
            }
        }
    }
    report(5, "block combination bijects A x C onto B for n <= 6, with the series identities",
           ok, detail);
}

void criterion_6() {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 7 && ok; ++n) {
        std::vector<StackWord> images;
        std::vector<Permutation> decoded;
        for (const auto& lp : enumerate_admissible(n)) {
            const StackWord w = word_from_path(lp);
            images.push_back(w);
            decoded.push_back(word_to_permutation(w));
            if (path_from_word(w) != lp) {
                ok = false;
                detail = "round trip failed for " + w.str();
                break;
            }
        }
        if (ok && !sets_equal(images, enumerate_greedy_words(n))) {
            ok = false;
            detail = "greedy word set mismatch at n=" + std::to_string(n);
        }
        if (ok) {
            std::vector<Permutation> sorted_by_machine;
            for (const auto& pi : enumerate_avoiders(n, {}))
                if (sortable(pi)) sorted_by_machine.push_back(pi);
            if (!sets_equal(decoded, sorted_by_machine)) {
                ok = false;
                detail = "sortable set mismatch at n=" + std::to_string(n);
            } else if (sorted_by_machine.size() != count_avoiders(n, {kP1342})) {
                ok = false;
                detail = "sortable count differs from |Av(1342)| at n=" + std::to_string(n);
            }
        }
    }
    report(6, "the word map bijects admissible paths onto greedy words for n <= 7", ok, detail);
}

void criterion_7() {
    const ChainReport chain = build_chain_report(parse_permutation("42513"));
    const std::string expected =
        "permutation:      42513\n"
        "in Av(3124):      yes\n"
        "in Av(3124,1234): yes\n"
        "board:            heights=5,5,5,3,3; rooks=(1,4),(2,2),(3,5),(4,1),(5,3)\n"
        "labeled path:     UUUDDUUDDD | 0,1,1,2,1,1,1,2,1,1,0\n"
        "max label:        2\n"
        "stack word:       stsstpptsstpptp\n"
        "sorts:            24153\n";
    const std::string actual = format_chain_report(chain);
    report(7, "the worked pipeline for 42513 reproduces byte-exactly", actual == expected,
           actual != expected ? "got:\n" + actual : "");
}

void criterion_8() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;

    const int order = 30;
    const PowerSeries c = catalan_series(order);
    const PowerSeries one = PowerSeries::constant(order, 1);
    const PowerSeries x = PowerSeries::monomial(order, 1, 1);
    if (c != one + x * c * c) {
        ok = false;
        detail = "catalan identity fails at order 30";
    }

    const PowerSeries f = one - PowerSeries::monomial(order, 1, 8);
    const PowerSeries root = sqrt_series(f);
    if (ok && root * root != f) {
        ok = false;
        detail = "sqrt round trip fails for 1-8x";
    }
    const PowerSeries square = (one + x) * (one + x);
    if (ok && sqrt_series(square) != one + x) {
        ok = false;
        detail = "sqrt round trip fails for (1+x)^2";
    }

    if (ok) {
        const PowerSeries gf = av1342_series(20);
        if (gf.coeff(0) != 0 || gf.coeff(1) != 1) {
            ok = false;
            detail = "class series does not start 0 + x";
        }
        for (int k = 0; k <= 20 && ok; ++k)
            if (!is_nonnegative_integer(gf.coeff(k))) {
                ok = false;
                detail = "non-integer coefficient at n=" + std::to_string(k);
            }
    }

    const double elapsed = seconds_since(start);
    if (elapsed >= 1.0) {
        ok = false;
        detail = "took " + std::to_string(elapsed) + "s, target is under 1 second";
    }
    report(8, "series self-tests pass in under a second", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    if (failures == 0)
        std::cout << "all acceptance criteria passed" << std::endl;
    else
        std::cout << failures << " acceptance criteria failed" << std::endl;
    return failures == 0 ? 0 : 1;
}
