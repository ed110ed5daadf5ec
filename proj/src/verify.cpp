#include "rookpath/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "rookpath/chain.hpp"
#include "rookpath/decomp.hpp"
#include "rookpath/dyck.hpp"
#include "rookpath/machine.hpp"
#include "rookpath/perm.hpp"
#include "rookpath/rook.hpp"
#include "rookpath/series.hpp"
#include "rookpath/textio.hpp"

namespace rookpath {

namespace {

using Check = std::function<std::optional<std::string>()>;

void run_check(std::vector<CheckResult>& out, const std::string& name, const Check& check) {
    try {
        auto failure = check();
        out.push_back({name, !failure.has_value(), failure.value_or("")});
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

// Deterministic pseudo-random numbers for the property checks.
struct Lcg {
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    std::uint64_t next() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    }
    int next_int(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

template <typename T, typename Fmt>
std::optional<std::string> set_equal(std::vector<T> lhs, std::vector<T> rhs,
                                     const std::string& context, Fmt&& fmt) {
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    for (std::size_t i = 1; i < lhs.size(); ++i)
        if (lhs[i] == lhs[i - 1])
            return context + ": duplicate on the left: " + fmt(lhs[i]);
    for (std::size_t i = 1; i < rhs.size(); ++i)
        if (rhs[i] == rhs[i - 1])
            return context + ": duplicate on the right: " + fmt(rhs[i]);
    if (lhs != rhs) {
        for (const auto& v : lhs)
            if (!std::binary_search(rhs.begin(), rhs.end(), v))
                return context + ": only on the left: " + fmt(v);
        for (const auto& v : rhs)
            if (!std::binary_search(lhs.begin(), lhs.end(), v))
                return context + ": only on the right: " + fmt(v);
    }
    return std::nullopt;
}

const std::vector<Permutation>& basis_3124() {
    static const std::vector<Permutation> basis{parse_permutation("3124")};
    return basis;
}

const std::vector<Permutation>& basis_3124_1234() {
    static const std::vector<Permutation> basis{parse_permutation("3124"),
                                                parse_permutation("1234")};
    return basis;
}

std::string fmt_perm(const Permutation& p) { return format_permutation(p); }
std::string fmt_path(const LabeledDyckPath& lp) { return format_labeled_path(lp); }
std::string fmt_word(const StackWord& w) { return w.str(); }

// All weakly decreasing height vectors with h_1 = n that dominate the rooks.
void dominating_boards(const Permutation& pi, std::size_t col, std::vector<int>& heights,
                       const std::function<void(const std::vector<int>&)>& visit) {
    const std::size_t n = static_cast<std::size_t>(pi.size());
    if (col == n) {
        visit(heights);
        return;
    }
    const int upper = col == 0 ? pi.size() : heights[col - 1];
    for (int h = pi[static_cast<int>(col)]; h <= upper; ++h) {
        if (col == 0 && h != pi.size()) continue;  // full placement: h_1 = n
        heights.push_back(h);
        dominating_boards(pi, col + 1, heights, visit);
        heights.pop_back();
    }
}

std::vector<CheckResult> pi_chi_suite(int max_n) {
    std::vector<CheckResult> out;

    run_check(out, "board-minimal placement round trip", [&]() -> std::optional<std::string> {
        for (int n = 1; n <= std::min(max_n, 8); ++n)
            for (const auto& pi : enumerate_avoiders(n, {}))
                if (read_permutation(board_minimal_placement(pi)) != pi)
                    return "failed for " + fmt_perm(pi);
        return std::nullopt;
    });

    run_check(out, "square containment matches permutation containment",
              [&]() -> std::optional<std::string> {
                  const auto patterns = {parse_permutation("312"), parse_permutation("231")};
                  for (int n = 1; n <= std::min(max_n, 6); ++n)
                      for (const auto& pi : enumerate_avoiders(n, {}))
                          for (const auto& sigma : patterns)
                              if (placement_contains(square_placement(pi), sigma) !=
                                  contains(pi, sigma))
                                  return fmt_perm(pi) + " vs pattern " + fmt_perm(sigma);
                  return std::nullopt;
              });

    run_check(out, "312-avoiding placements are exactly the 3124 avoiders",
              [&]() -> std::optional<std::string> {
                  const Permutation p312 = parse_permutation("312");
                  for (int n = 1; n <= std::min(max_n, 8); ++n) {
                      std::vector<Permutation> via_placements;
                      for (const auto& pi : enumerate_avoiders(n, {}))
                          if (!placement_contains(board_minimal_placement(pi), p312))
                              via_placements.push_back(pi);
                      auto failure = set_equal(via_placements, enumerate_avoiders(n, basis_3124()),
                                               "n=" + std::to_string(n), fmt_perm);
                      if (failure) return failure;
                  }
                  return std::nullopt;
              });

    run_check(out, "labeled border paths biject with admissible paths",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n) {
                      std::vector<LabeledDyckPath> images;
                      for (const auto& pi : enumerate_avoiders(n, basis_3124()))
                          images.push_back(border_labeled_path(board_minimal_placement(pi)));
                      auto failure = set_equal(images, enumerate_admissible(n),
                                               "n=" + std::to_string(n), fmt_path);
                      if (failure) return failure;
                  }
                  return std::nullopt;
              });

    run_check(out, "images of the doubly avoiding class have labels at most 3",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n) {
                      std::vector<LabeledDyckPath> images;
                      for (const auto& pi : enumerate_avoiders(n, basis_3124_1234()))
                          images.push_back(border_labeled_path(board_minimal_placement(pi)));
                      std::vector<LabeledDyckPath> bounded;
                      for (const auto& lp : enumerate_admissible(n))
                          if (max_label(lp) <= 3) bounded.push_back(lp);
                      auto failure =
                          set_equal(images, bounded, "n=" + std::to_string(n), fmt_path);
                      if (failure) return failure;
                  }
                  return std::nullopt;
              });

    run_check(out, "max label equals longest increasing subsequence",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n)
                      for (const auto& pi : enumerate_avoiders(n, {}))
                          if (max_label(border_labeled_path(board_minimal_placement(pi))) !=
                              lis(pi))
                              return "failed for " + fmt_perm(pi);
                  return std::nullopt;
              });

    run_check(out, "board-minimal placement has the fewest cells",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 5); ++n)
                      for (const auto& pi : enumerate_avoiders(n, {})) {
                          const auto minimal = board_minimal_placement(pi);
                          if (!is_board_minimal(minimal))
                              return "not corner-complete for " + fmt_perm(pi);
                          long best = minimal.board().total_cells();
                          std::vector<int> heights;
                          std::optional<std::string> failure;
                          dominating_boards(pi, 0, heights, [&](const std::vector<int>& h) {
                              RookPlacement candidate(FerrersBoard(h), pi.entries());
                              if (candidate.board().total_cells() < best)
                                  failure = "smaller board for " + fmt_perm(pi);
                          });
                          if (failure) return failure;
                      }
                  return std::nullopt;
              });

    return out;
}

std::vector<CheckResult> phi_suite(int max_n) {
    std::vector<CheckResult> out;

    run_check(out, "return blocks land in family A", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= std::min(max_n, 7); ++n)
            for (const auto& lp : enumerate_admissible(n)) {
                if (max_label(lp) > 3) continue;
                for (const auto& block : return_blocks(lp)) {
                    if (!is_return_block(block))
                        return "non-member block from " + fmt_path(lp);
                    if (block.label(0) != 0)
                        return "block not rooted at 0 from " + fmt_path(lp);
                }
            }
        return std::nullopt;
    });

    run_check(out, "returns decomposition counts multiply", [&]() -> std::optional<std::string> {
        const int cap = std::min(max_n, 7);
        std::vector<long> family_a_counts;  // |A_k| for k = 0..cap-1
        for (int k = 0; k < cap; ++k)
            family_a_counts.push_back(static_cast<long>(enumerate_family_a(k).size()));
        std::vector<long> composed{1};  // [x^n] 1/(1 - x A(x))
        for (int n = 1; n <= cap; ++n) {
            long total = 0;
            for (int k = 1; k <= n; ++k)
                total += family_a_counts[static_cast<std::size_t>(k - 1)] *
                         composed[static_cast<std::size_t>(n - k)];
            composed.push_back(total);
        }
        for (int n = 0; n <= cap; ++n) {
            long bounded = 0;
            for (const auto& lp : enumerate_admissible(n))
                if (max_label(lp) <= 3) ++bounded;
            if (bounded != composed[static_cast<std::size_t>(n)])
                return "n=" + std::to_string(n) + ": " + std::to_string(bounded) + " vs " +
                       std::to_string(composed[static_cast<std::size_t>(n)]);
        }
        return std::nullopt;
    });

    run_check(out, "block combination bijects onto family B", [&]() -> std::optional<std::string> {
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            std::vector<LabeledDyckPath> images;
            for (int k = 0; k < n; ++k)
                for (const auto& a : enumerate_family_a(k))
                    for (const auto& path : enumerate_dyck_paths(n - k))
                        images.push_back(combine_blocks(a, trivial_labels(path)));
            auto failure = set_equal(images, enumerate_family_b(n), "n=" + std::to_string(n),
                                     fmt_path);
            if (failure) return failure;
        }
        return std::nullopt;
    });

    run_check(out, "block bijection round trips", [&]() -> std::optional<std::string> {
        for (int n = 1; n <= std::min(max_n, 6); ++n) {
            for (int k = 0; k < n; ++k)
                for (const auto& a : enumerate_family_a(k))
                    for (const auto& path : enumerate_dyck_paths(n - k)) {
                        const auto c = trivial_labels(path);
                        const auto [a2, c2] = split_block(combine_blocks(a, c));
                        if (a2 != a || c2 != c)
                            return "pair (" + fmt_path(a) + ", " + fmt_path(c) + ")";
                    }
            for (const auto& b : enumerate_family_b(n)) {
                const auto [a, c] = split_block(b);
                if (combine_blocks(a, c) != b) return "member " + fmt_path(b);
            }
        }
        return std::nullopt;
    });

    run_check(out, "family counts match the series", [&]() -> std::optional<std::string> {
        const int order = std::min(max_n, 6);
        const PowerSeries c = catalan_series(order);
        const PowerSeries x = PowerSeries::monomial(order, 1, 1);
        const PowerSeries a = compose(c, x * c);
        const PowerSeries b = a * (c - PowerSeries::constant(order, 1));
        for (int n = 0; n <= order; ++n) {
            if (a.coeff(n) != static_cast<long>(enumerate_family_a(n).size()))
                return "family A at n=" + std::to_string(n);
            if (b.coeff(n) != static_cast<long>(enumerate_family_b(n).size()))
                return "family B at n=" + std::to_string(n);
        }
        return std::nullopt;
    });

    return out;
}

std::vector<CheckResult> words_suite(int max_n) {
    std::vector<CheckResult> out;

    run_check(out, "word images satisfy the greedy conditions and round trip",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n)
                      for (const auto& lp : enumerate_admissible(n)) {
                          const StackWord w = word_from_path(lp);
                          if (!is_greedy_increasing_word(w)) return "not greedy: " + w.str();
                          if (w.str().find("tt") != std::string::npos ||
                              w.str().find("sp") != std::string::npos)
                              return "forbidden factor in " + w.str();
                          if (path_from_word(w) != lp) return "round trip failed for " + w.str();
                      }
                  return std::nullopt;
              });

    run_check(out, "word images sort their decoded permutations",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n)
                      for (const auto& lp : enumerate_admissible(n)) {
                          const StackWord w = word_from_path(lp);
                          const Permutation pi = word_to_permutation(w);
                          const auto trace = execute_trace(w, pi, true);
                          if (trace.back().second.output != Permutation::identity(n).entries())
                              return "word " + w.str() + " fails to sort " + fmt_perm(pi);
                          // Stack 2 sizes before each push or pop (and at the
                          // end) must read off the vertex labels.
                          std::vector<int> sizes;
                          for (std::size_t k = 0; k < w.str().size(); ++k) {
                              if (w.str()[k] == 't') continue;
                              sizes.push_back(k == 0 ? 0
                                                     : static_cast<int>(
                                                           trace[k - 1].second.stack2.size()));
                          }
                          sizes.push_back(
                              static_cast<int>(trace.back().second.stack2.size()));
                          if (sizes != lp.labels())
                              return "stack sizes disagree with labels for " + w.str();
                      }
                  return std::nullopt;
              });

    run_check(out, "word images equal the enumerated greedy words",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n) {
                      std::vector<StackWord> images;
                      for (const auto& lp : enumerate_admissible(n))
                          images.push_back(word_from_path(lp));
                      auto failure = set_equal(images, enumerate_greedy_words(n),
                                               "n=" + std::to_string(n), fmt_word);
                      if (failure) return failure;
                  }
                  return std::nullopt;
              });

    run_check(out, "decoded permutations are exactly the sortable ones",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n) {
                      std::vector<Permutation> decoded;
                      for (const auto& lp : enumerate_admissible(n))
                          decoded.push_back(word_to_permutation(word_from_path(lp)));
                      std::vector<Permutation> sorted_by_machine;
                      for (const auto& pi : enumerate_avoiders(n, {}))
                          if (sortable(pi)) sorted_by_machine.push_back(pi);
                      auto failure = set_equal(decoded, sorted_by_machine,
                                               "n=" + std::to_string(n), fmt_perm);
                      if (failure) return failure;
                      const auto av1342 = count_avoiders(n, {parse_permutation("1342")});
                      if (av1342 != sorted_by_machine.size())
                          return "n=" + std::to_string(n) + ": " +
                                 std::to_string(sorted_by_machine.size()) + " sortable vs " +
                                 std::to_string(av1342) + " avoiders";
                  }
                  return std::nullopt;
              });

    run_check(out, "greedy-word search matches the image words",
              [&]() -> std::optional<std::string> {
                  for (int n = 1; n <= std::min(max_n, 7); ++n) {
                      std::vector<StackWord> via_search;
                      for (const auto& pi : enumerate_avoiders(n, {})) {
                          const auto w = greedy_word(pi);
                          if (w.has_value() != sortable(pi))
                              return "existence mismatch for " + fmt_perm(pi);
                          if (w) {
                              via_search.push_back(*w);
                              if (word_to_permutation(*w) != pi)
                                  return "greedy word of " + fmt_perm(pi) + " decodes elsewhere";
                          }
                      }
                      std::vector<StackWord> images;
                      for (const auto& lp : enumerate_admissible(n))
                          images.push_back(word_from_path(lp));
                      auto failure = set_equal(via_search, images, "n=" + std::to_string(n),
                                               fmt_word);
                      if (failure) return failure;
                  }
                  return std::nullopt;
              });

    run_check(out, "banning u-t factors and tt already bans t-u-t factors",
              [&]() -> std::optional<std::string> {
                  // Exhaustive over words of length <= 8.
                  std::function<std::optional<std::string>(std::string&)> visit =
                      [&](std::string& w) -> std::optional<std::string> {
                      if (!w.empty()) {
                          bool has_tut = false, has_ut = false;
                          const bool has_tt = w.find("tt") != std::string::npos;
                          for (std::size_t b = 0; b < w.size(); ++b) {
                              if (w[b] != 't') continue;
                              for (std::size_t a = 0; a < b; ++a) {
                                  if (w[a] == 't' && is_valid_word(StackWord(w.substr(a + 1, b - a - 1))))
                                      has_tut = true;
                                  if (b > a && is_valid_word(StackWord(w.substr(a, b - a))))
                                      has_ut = true;
                              }
                          }
                          if (!has_ut && !has_tt && has_tut) return "counterexample " + w;
                      }
                      if (w.size() == 8) return std::nullopt;
                      for (char c : {'p', 's', 't'}) {
                          w += c;
                          auto failure = visit(w);
                          w.pop_back();
                          if (failure) return failure;
                      }
                      return std::nullopt;
                  };
                  std::string w;
                  return visit(w);
              });

    return out;
}

std::vector<CheckResult> series_suite(int max_n) {
    std::vector<CheckResult> out;

    run_check(out, "catalan series satisfies its defining identity",
              [&]() -> std::optional<std::string> {
                  const int order = 30;
                  const PowerSeries c = catalan_series(order);
                  const PowerSeries x = PowerSeries::monomial(order, 1, 1);
                  if (c != PowerSeries::constant(order, 1) + x * c * c)
                      return std::string("identity fails");
                  return std::nullopt;
              });

    run_check(out, "multiplication is commutative, associative, distributive",
              [&]() -> std::optional<std::string> {
                  Lcg rng;
                  const int order = 16;
                  auto random_series = [&]() {
                      PowerSeries f(order);
                      for (int k = 0; k <= order; ++k)
                          f.set_coeff(k, Rational(rng.next_int(-9, 9)));
                      return f;
                  };
                  for (int trial = 0; trial < 50; ++trial) {
                      const auto f = random_series(), g = random_series(), h = random_series();
                      if (f * g != g * f) return std::string("commutativity fails");
                      if ((f * g) * h != f * (g * h)) return std::string("associativity fails");
                      if (f * (g + h) != f * g + f * h) return std::string("distributivity fails");
                  }
                  return std::nullopt;
              });

    run_check(out, "division round trips", [&]() -> std::optional<std::string> {
        Lcg rng;
        const int order = 12;
        for (int trial = 0; trial < 200; ++trial) {
            PowerSeries f(order), g(order);
            for (int k = 0; k <= order; ++k) {
                f.set_coeff(k, Rational(rng.next_int(-9, 9)));
                g.set_coeff(k, Rational(rng.next_int(-9, 9)));
            }
            g.set_coeff(0, Rational(1 + rng.next_int(0, 4)));
            if (g * div(f, g) != f) return std::string("round trip fails");
        }
        return std::nullopt;
    });

    run_check(out, "square roots of perfect squares", [&]() -> std::optional<std::string> {
        Lcg rng;
        const int order = 12;
        for (int trial = 0; trial < 50; ++trial) {
            PowerSeries g(order);
            g.set_coeff(0, Rational(1));
            for (int k = 1; k <= order; ++k) g.set_coeff(k, Rational(rng.next_int(-9, 9)));
            if (sqrt_series(g * g) != g) return std::string("round trip fails");
        }
        const PowerSeries f =
            PowerSeries::constant(12, 1) - PowerSeries::monomial(12, 1, 8);
        const PowerSeries root = sqrt_series(f);
        if (root * root != f) return std::string("sqrt(1-8x) fails");
        return std::nullopt;
    });

    run_check(out, "1342 class series has the promised shape",
              [&]() -> std::optional<std::string> {
                  const PowerSeries f = av1342_series(20);
                  if (f.coeff(0) != 0 || f.coeff(1) != 1)
                      return std::string("series must start 0 + x");
                  for (int k = 0; k <= 20; ++k)
                      if (!is_nonnegative_integer(f.coeff(k)))
                          return "non-integer coefficient at n=" + std::to_string(k);
                  for (int n = 1; n <= std::min(max_n, 6); ++n)
                      if (f.coeff(n) != static_cast<long>(count_avoiders(
                                            n, {parse_permutation("1342")})))
                          return "count mismatch at n=" + std::to_string(n);
                  return std::nullopt;
              });

    run_check(out, "3124,1234 class series matches brute force",
              [&]() -> std::optional<std::string> {
                  const PowerSeries f = av3124_1234_series(10);
                  if (f.coeff(0) != 1) return std::string("constant term must be 1");
                  for (int n = 1; n <= std::min(max_n, 6); ++n)
                      if (f.coeff(n) != static_cast<long>(count_avoiders(n, basis_3124_1234())))
                          return "count mismatch at n=" + std::to_string(n);
                  return std::nullopt;
              });

    run_check(out, "block-family series identities hold", [&]() -> std::optional<std::string> {
        const int order = 20;
        const PowerSeries one = PowerSeries::constant(order, 1);
        const PowerSeries x = PowerSeries::monomial(order, 1, 1);
        const PowerSeries c = catalan_series(order);
        const PowerSeries a = compose(c, x * c);
        const PowerSeries b = a * (c - one);
        if (a != one + x * (a + b) * a) return std::string("branching identity fails");
        if (b != a * (c - one)) return std::string("family-B identity fails");
        return std::nullopt;
    });

    return out;
}

}  // namespace

std::vector<CheckResult> run_verify_suite(const std::string& suite, int max_n) {
    std::vector<CheckResult> out;
    bool known = false;
    if (suite == "pi-chi" || suite == "all") {
        auto r = pi_chi_suite(max_n);
        out.insert(out.end(), r.begin(), r.end());
        known = true;
    }
    if (suite == "phi" || suite == "all") {
        auto r = phi_suite(max_n);
        out.insert(out.end(), r.begin(), r.end());
        known = true;
    }
    if (suite == "words" || suite == "all") {
        auto r = words_suite(max_n);
        out.insert(out.end(), r.begin(), r.end());
        known = true;
    }
    if (suite == "series" || suite == "all") {
        auto r = series_suite(max_n);
        out.insert(out.end(), r.begin(), r.end());
        known = true;
    }
    if (!known) throw std::invalid_argument("unknown suite: " + suite);
    return out;
}

}  // namespace rookpath
