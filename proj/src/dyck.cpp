#include "rookpath/dyck.hpp"

#include <algorithm>
#include <stdexcept>

#include "labeling_search.hpp"

namespace rookpath {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
    heights_.assign(1, 0);
    heights_.reserve(steps_.size() + 1);
    int h = 0;
    for (char c : steps_) {
        if (c == 'U')
            ++h;
        else if (c == 'D')
            --h;
        else
            throw std::invalid_argument("Dyck path steps must be U or D");
        if (h < 0) throw std::invalid_argument("Dyck path prefix dips below the axis");
        heights_.push_back(h);
    }
    if (h != 0) throw std::invalid_argument("Dyck path must end on the axis");
}

LabeledDyckPath::LabeledDyckPath(DyckPath path, std::vector<int> labels)
    : path_(std::move(path)), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != path_.length() + 1)
        throw std::invalid_argument("need one label per vertex (2n + 1 labels)");
    for (int v : labels_)
        if (v < 0) throw std::invalid_argument("labels must be nonnegative");
}

LabeledDyckPath border_labeled_path(const RookPlacement& placement) {
    const int n = placement.rooks();
    const auto& board = placement.board();

    // Border from (0, n) to (n, 0): east along the top of each column, south
    // where the heights drop. For full placements this is always a Dyck path.
    std::string steps;
    std::vector<std::pair<int, int>> vertices{{0, n}};
    for (int c = 1; c <= n; ++c) {
        steps += 'U';
        vertices.emplace_back(c, board.height(c));
        const int next = (c < n) ? board.height(c + 1) : 0;
        for (int y = board.height(c) - 1; y >= next; --y) {
            steps += 'D';
            vertices.emplace_back(c, y);
        }
    }
    DyckPath path(std::move(steps));

    std::vector<int> labels;
    labels.reserve(vertices.size());
    for (const auto& [x, y] : vertices) {
        // Longest increasing sequence of rooks in the rectangle (<= x, <= y).
        std::vector<int> tails;
        for (int c = 1; c <= x; ++c) {
            const int r = placement.rook_row(c);
            if (r > y) continue;
            auto it = std::lower_bound(tails.begin(), tails.end(), r);
            if (it == tails.end())
                tails.push_back(r);
            else
                *it = r;
        }
        labels.push_back(static_cast<int>(tails.size()));
    }
    return LabeledDyckPath(std::move(path), std::move(labels));
}

bool monotone_property(const LabeledDyckPath& lp) {
    const auto& path = lp.path();
    for (int k = 1; k <= path.length(); ++k) {
        const int d = lp.label(k) - lp.label(k - 1);
        if (path.step(k) == 'U' ? (d != 0 && d != 1) : (d != 0 && d != -1)) return false;
    }
    return true;
}

bool zero_property(const LabeledDyckPath& lp) {
    const auto& path = lp.path();
    for (int j = 0; j <= path.length(); ++j)
        if ((lp.label(j) == 0) != (path.height(j) == 0)) return false;
    return true;
}

bool tunnel_property(const LabeledDyckPath& lp) {
    const auto& path = lp.path();
    const int m = path.length();
    for (int i = 0; i <= m; ++i) {
        const int h = path.height(i);
        for (int j = i + 1; j <= m && path.height(j) >= h; ++j)
            if (path.height(j) == h && lp.label(j) > lp.label(i)) return false;
    }
    return true;
}

bool peak_property(const LabeledDyckPath& lp) {
    const auto& path = lp.path();
    for (int j = 1; j < path.length(); ++j)
        if (path.is_peak(j) &&
            (lp.label(j) != lp.label(j - 1) + 1 || lp.label(j + 1) != lp.label(j - 1)))
            return false;
    return true;
}

std::vector<std::pair<int, int>> weak_tunnel_pairs(const DyckPath& path) {
    std::vector<std::pair<int, int>> pairs;
    const int m = path.length();
    for (int i = 0; i <= m; ++i) {
        const int h = path.height(i);
        for (int j = i + 1; j <= m && path.height(j) >= h; ++j)
            if (path.height(j) == h) pairs.emplace_back(i, j);
    }
    return pairs;
}

bool is_admissible(const LabeledDyckPath& lp) {
    return monotone_property(lp) && zero_property(lp) && tunnel_property(lp) &&
           peak_property(lp);
}

int max_label(const LabeledDyckPath& lp) {
    return *std::max_element(lp.labels().begin(), lp.labels().end());
}

namespace {

void extend_paths(std::string& prefix, int ups, int downs, int n, std::vector<DyckPath>& out) {
    if (static_cast<int>(prefix.size()) == 2 * n) {
        out.emplace_back(prefix);
        return;
    }
    if (ups < n) {
        prefix += 'U';
        extend_paths(prefix, ups + 1, downs, n, out);
        prefix.pop_back();
    }
    if (downs < ups) {
        prefix += 'D';
        extend_paths(prefix, ups, downs + 1, n, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck_paths(int n) {
    if (n < 0) throw std::invalid_argument("semilength must be nonnegative");
    std::vector<DyckPath> out;
    std::string prefix;
    extend_paths(prefix, 0, 0, n, out);
    return out;
}

std::vector<LabeledDyckPath> enumerate_admissible(int n) {
    if (n > kMaxAdmissibleLength)
        throw ResourceLimitError("admissible-path enumeration limited to semilength " +
                                 std::to_string(kMaxAdmissibleLength));
    std::vector<LabeledDyckPath> out;
    const detail::LabelingRules rules{n, true, true, 0};
    for (const auto& path : enumerate_dyck_paths(n)) {
        auto found = detail::enumerate_labelings(path, rules);
        out.insert(out.end(), std::make_move_iterator(found.begin()),
                   std::make_move_iterator(found.end()));
    }
    return out;
}

namespace detail {

namespace {

struct LabelingSearch {
    const DyckPath& path;
    const LabelingRules& rules;
    std::vector<std::vector<int>> tunnel_left;  // tunnel partners i < j, by right endpoint j
    std::vector<int> labels;
    std::vector<LabeledDyckPath>& out;

    void run() {
        const int m = path.length();
        tunnel_left.assign(static_cast<std::size_t>(m) + 1, {});
        for (const auto& [i, j] : weak_tunnel_pairs(path))
            tunnel_left[static_cast<std::size_t>(j)].push_back(i);

        if (!label_allowed(0, rules.first_label)) return;
        labels.assign(1, rules.first_label);
        extend(1);
    }

    bool label_allowed(int j, int value) const {
        if (value < 0 || value > rules.label_cap) return false;
        const bool axis = path.height(j) == 0;
        if (axis && rules.force_zero_on_axis && value != 0) return false;
        if (!axis && rules.forbid_zero_above_axis && value == 0) return false;
        for (int i : tunnel_left[static_cast<std::size_t>(j)])
            if (value > labels[static_cast<std::size_t>(i)]) return false;
        return true;
    }

    void extend(int j) {
        if (j > path.length()) {
            out.emplace_back(path, labels);
            return;
        }
        const int prev = labels[static_cast<std::size_t>(j - 1)];
        const int lo = path.step(j) == 'U' ? prev : prev - 1;
        for (int value = lo; value <= lo + 1; ++value) {
            if (path.is_peak(j) && value != prev + 1) continue;
            if (j >= 2 && path.is_peak(j - 1) && value != labels[static_cast<std::size_t>(j - 2)])
                continue;
            if (!label_allowed(j, value)) continue;
            labels.push_back(value);
            extend(j + 1);
            labels.pop_back();
        }
    }
};

}  // namespace

std::vector<LabeledDyckPath> enumerate_labelings(const DyckPath& path, const LabelingRules& rules) {
    std::vector<LabeledDyckPath> out;
    LabelingSearch search{path, rules, {}, {}, out};
    search.run();
    return out;
}

}  // namespace detail

}  // namespace rookpath
