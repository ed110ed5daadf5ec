#include "rookpath/decomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "labeling_search.hpp"

namespace rookpath {

namespace {

bool labels_at_most(const LabeledDyckPath& lp, int cap) {
    return std::all_of(lp.labels().begin(), lp.labels().end(),
                       [cap](int v) { return v <= cap; });
}

bool axis_labels_zero(const LabeledDyckPath& lp) {
    for (int j = 0; j <= lp.path().length(); ++j)
        if (lp.path().height(j) == 0 && lp.label(j) != 0) return false;
    return true;
}

// Vertex indices at height 0, in order (always includes 0 and 2n).
std::vector<int> axis_vertices(const DyckPath& path) {
    std::vector<int> axis;
    for (int j = 0; j <= path.length(); ++j)
        if (path.height(j) == 0) axis.push_back(j);
    return axis;
}

}  // namespace

bool is_return_block(const LabeledDyckPath& lp) {
    return monotone_property(lp) && tunnel_property(lp) && peak_property(lp) &&
           labels_at_most(lp, 2) && axis_labels_zero(lp);
}

bool is_leading_one_block(const LabeledDyckPath& lp) {
    return lp.semilength() > 0 && lp.label(0) == 1 && monotone_property(lp) &&
           tunnel_property(lp) && peak_property(lp) && labels_at_most(lp, 2);
}

bool is_trivially_labeled(const LabeledDyckPath& lp) {
    if (lp.semilength() == 0) return false;
    for (int j = 0; j <= lp.path().length(); ++j)
        if (lp.label(j) != (lp.path().is_peak(j) ? 2 : 1)) return false;
    return true;
}

LabeledDyckPath trivial_labels(const DyckPath& path) {
    if (path.semilength() == 0)
        throw std::invalid_argument("trivial labeling needs a nonempty path");
    std::vector<int> labels(static_cast<std::size_t>(path.length()) + 1, 1);
    for (int j = 1; j < path.length(); ++j)
        if (path.is_peak(j)) labels[static_cast<std::size_t>(j)] = 2;
    return LabeledDyckPath(path, std::move(labels));
}

std::vector<LabeledDyckPath> return_blocks(const LabeledDyckPath& lp) {
    if (!is_admissible(lp) || max_label(lp) > 3)
        throw std::invalid_argument("returns decomposition needs an admissible path with labels at most 3");
    std::vector<LabeledDyckPath> blocks;
    const auto axis = axis_vertices(lp.path());
    for (std::size_t m = 1; m < axis.size(); ++m) {
        const int lo = axis[m - 1], hi = axis[m];
        std::string steps = lp.path().steps().substr(static_cast<std::size_t>(lo) + 1,
                                                     static_cast<std::size_t>(hi - lo - 2));
        std::vector<int> labels;
        for (int j = lo + 1; j <= hi - 1; ++j) labels.push_back(lp.label(j) - 1);
        blocks.emplace_back(DyckPath(std::move(steps)), std::move(labels));
        if (!is_return_block(blocks.back()))
            throw std::logic_error("returns decomposition produced a non-member block");
    }
    return blocks;
}

namespace {

// First-return split of a nonempty path E = U E1 D E2.
struct FirstReturn {
    std::string inner;  // E1
    std::string rest;   // E2
};

FirstReturn first_return_split(const DyckPath& path) {
    int t = 1;
    while (path.height(t) != 0) ++t;
    return {path.steps().substr(1, static_cast<std::size_t>(t) - 2),
            path.steps().substr(static_cast<std::size_t>(t))};
}

// Trivial labels of a standalone path given by its step word (empty allowed:
// a lone vertex gets label 1).
std::vector<int> trivial_label_values(const std::string& steps) {
    DyckPath path{steps};
    std::vector<int> labels(static_cast<std::size_t>(path.length()) + 1, 1);
    for (int j = 1; j < path.length(); ++j)
        if (path.is_peak(j)) labels[static_cast<std::size_t>(j)] = 2;
    return labels;
}

}  // namespace

LabeledDyckPath combine_blocks(const LabeledDyckPath& a, const LabeledDyckPath& c) {
    if (!is_return_block(a)) throw std::invalid_argument("first argument must belong to family A");
    if (!is_trivially_labeled(c))
        throw std::invalid_argument("second argument must be a trivially labeled nonempty path");

    const auto [e1, e2] = first_return_split(c.path());

    if (a.semilength() == 0) {
        LabeledDyckPath result = trivial_labels(DyckPath(e2 + "U" + e1 + "D"));
        if (!is_leading_one_block(result))
            throw std::logic_error("block combination left family B");
        return result;
    }

    int i = 0;
    while (i <= a.path().length() && a.label(i) != 1) ++i;
    if (i > a.path().length() || a.path().steps().find('D') < static_cast<std::size_t>(i))
        throw std::logic_error("family-A member lacks the expected initial ascent");

    const std::string tail = a.path().steps().substr(static_cast<std::size_t>(i));
    std::string steps = e2 + std::string(static_cast<std::size_t>(i), 'U') + "U" + e1 + "D" + tail;

    std::vector<int> labels = trivial_label_values(e2);
    labels.insert(labels.end(), static_cast<std::size_t>(i), 1);
    const auto inner_labels = trivial_label_values("U" + e1 + "D");
    labels.insert(labels.end(), inner_labels.begin() + 1, inner_labels.end());
    for (int j = i + 1; j <= a.path().length(); ++j) labels.push_back(a.label(j));

    LabeledDyckPath result(DyckPath(std::move(steps)), std::move(labels));
    if (!is_leading_one_block(result)) throw std::logic_error("block combination left family B");
    return result;
}

namespace {

// Reconstruction attempt for the nonempty-A branch of split_block, given the
// suffix piece (everything after the trivially labeled prefix) and the factor
// [a0..b0] assumed to be the grafted single-return block.
bool try_reconstruct(const LabeledDyckPath& b, const std::string& prefix_steps,
                     const std::vector<int>& suffix_labels, const DyckPath& suffix_path,
                     int a0, int b0, std::pair<LabeledDyckPath, LabeledDyckPath>& out) {
    const int i = suffix_path.height(a0);
    if (a0 != i) return false;  // everything before the factor must be the U^i run
    for (int k = 1; k <= a0; ++k)
        if (suffix_path.step(k) != 'U') return false;

    const std::string e1 = suffix_path.steps().substr(static_cast<std::size_t>(a0) + 1,
                                                      static_cast<std::size_t>(b0 - a0) - 2);
    const std::string tail = suffix_path.steps().substr(static_cast<std::size_t>(b0));

    std::vector<int> a_labels(static_cast<std::size_t>(i), 0);
    a_labels.push_back(1);
    for (std::size_t j = static_cast<std::size_t>(b0) + 1; j < suffix_labels.size(); ++j)
        a_labels.push_back(suffix_labels[j]);

    try {
        LabeledDyckPath a_elem(DyckPath(std::string(static_cast<std::size_t>(i), 'U') + tail),
                               std::move(a_labels));
        if (!is_return_block(a_elem)) return false;
        LabeledDyckPath c_elem = trivial_labels(DyckPath("U" + e1 + "D" + prefix_steps));
        if (combine_blocks(a_elem, c_elem) != b) return false;
        out = {std::move(a_elem), std::move(c_elem)};
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

}  // namespace

std::pair<LabeledDyckPath, LabeledDyckPath> split_block(const LabeledDyckPath& b) {
    if (!is_leading_one_block(b)) throw std::invalid_argument("input must belong to family B");
    const auto& path = b.path();
    const int m = path.length();

    if (b.label(m) == 1) {
        // Empty A part: the final return block is the grafted piece.
        const auto axis = axis_vertices(path);
        const int t = axis[axis.size() - 2];
        LabeledDyckPath c_elem = trivial_labels(
            DyckPath(path.steps().substr(static_cast<std::size_t>(t)) +
                     path.steps().substr(0, static_cast<std::size_t>(t))));
        LabeledDyckPath a_elem;
        if (combine_blocks(a_elem, c_elem) != b)
            throw std::invalid_argument("input is not in the image of the block bijection");
        return {a_elem, c_elem};
    }

    // Split at the last axis vertex labeled 1: before it the trivially labeled
    // prefix, after it the U^i ascent, the grafted block, and the A tail.
    int v = -1;
    for (int j : axis_vertices(path))
        if (b.label(j) == 1) v = j;
    const std::string prefix_steps = path.steps().substr(0, static_cast<std::size_t>(v));
    DyckPath suffix_path(path.steps().substr(static_cast<std::size_t>(v)));
    std::vector<int> suffix_labels(b.labels().begin() + v, b.labels().end());

    // Leftmost peak of the suffix.
    int jp = 1;
    while (jp < suffix_path.length() && !suffix_path.is_peak(jp)) ++jp;

    // Largest single-return, trivially labeled factor around that peak.
    const int len = suffix_path.length();
    for (int size = len - (len % 2); size >= 2; size -= 2) {
        for (int a0 = std::max(0, jp - size + 1); a0 + size <= len && a0 < jp; ++a0) {
            const int b0 = a0 + size;
            if (b0 <= jp) continue;
            const int h = suffix_path.height(a0);
            if (suffix_path.height(b0) != h) continue;
            bool single_return = true;
            for (int k = a0 + 1; k < b0 && single_return; ++k)
                if (suffix_path.height(k) <= h) single_return = false;
            if (!single_return) continue;
            bool trivially = true;
            for (int k = a0; k <= b0 && trivially; ++k) {
                const bool inner_peak = k > a0 && k < b0 && suffix_path.is_peak(k);
                if (suffix_labels[static_cast<std::size_t>(k)] != (inner_peak ? 2 : 1))
                    trivially = false;
            }
            if (!trivially) continue;
            std::pair<LabeledDyckPath, LabeledDyckPath> out;
            if (try_reconstruct(b, prefix_steps, suffix_labels, suffix_path, a0, b0, out))
                return out;
        }
    }
    throw std::invalid_argument("input is not in the image of the block bijection");
}

namespace {

std::vector<LabeledDyckPath> enumerate_family(int n, const detail::LabelingRules& rules) {
    if (n > kMaxBlockLength)
        throw ResourceLimitError("block-family enumeration limited to semilength " +
                                 std::to_string(kMaxBlockLength));
    std::vector<LabeledDyckPath> out;
    for (const auto& path : enumerate_dyck_paths(n)) {
        auto found = detail::enumerate_labelings(path, rules);
        out.insert(out.end(), std::make_move_iterator(found.begin()),
                   std::make_move_iterator(found.end()));
    }
    return out;
}

}  // namespace

std::vector<LabeledDyckPath> enumerate_family_a(int n) {
    return enumerate_family(n, detail::LabelingRules{2, true, false, 0});
}

std::vector<LabeledDyckPath> enumerate_family_b(int n) {
    if (n == 0) return {};
    return enumerate_family(n, detail::LabelingRules{2, false, false, 1});
}

}  // namespace rookpath
