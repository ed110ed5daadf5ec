#include "rookpath/perm.hpp"

#include <algorithm>
#include <numeric>

namespace rookpath {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : entries_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation entries must be a rearrangement of 1..n");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    return Permutation(std::move(e));
}

namespace {

// Depth-first subsequence match. `chosen` holds the host values picked so far;
// extending with host[i] is allowed iff its rank among the picked values equals
// the rank pattern[depth] has among pattern[0..depth].
bool match_from(const std::vector<int>& host, const std::vector<int>& pattern,
                std::vector<int>& chosen, std::size_t start) {
    const std::size_t depth = chosen.size();
    if (depth == pattern.size()) return true;
    if (host.size() - start < pattern.size() - depth) return false;

    for (std::size_t i = start; i + (pattern.size() - depth) <= host.size(); ++i) {
        bool ok = true;
        for (std::size_t k = 0; k < depth; ++k) {
            if ((chosen[k] < host[i]) != (pattern[k] < pattern[depth])) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        chosen.push_back(host[i]);
        if (match_from(host, pattern, chosen, i + 1)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

bool contains(const Permutation& host, const Permutation& pattern) {
    if (pattern.empty()) return true;
    if (pattern.size() > host.size()) return false;
    std::vector<int> chosen;
    chosen.reserve(static_cast<std::size_t>(pattern.size()));
    return match_from(host.entries(), pattern.entries(), chosen, 0);
}

bool avoids_all(const Permutation& host, const std::vector<Permutation>& basis) {
    for (const auto& sigma : basis)
        if (contains(host, sigma)) return false;
    return true;
}

namespace {

template <typename Visit>
void for_each_avoider(int n, const std::vector<Permutation>& basis, Visit&& visit) {
    if (n < 0) throw std::invalid_argument("length must be nonnegative");
    if (n > kMaxEnumerationLength)
        throw ResourceLimitError("exhaustive enumeration limited to length " +
                                 std::to_string(kMaxEnumerationLength));
    std::vector<int> e(static_cast<std::size_t>(n));
    std::iota(e.begin(), e.end(), 1);
    do {
        Permutation p(e);
        if (avoids_all(p, basis)) visit(std::move(p));
    } while (std::next_permutation(e.begin(), e.end()));
}

}  // namespace

std::vector<Permutation> enumerate_avoiders(int n, const std::vector<Permutation>& basis) {
    std::vector<Permutation> out;
    for_each_avoider(n, basis, [&](Permutation p) { out.push_back(std::move(p)); });
    return out;
}

std::uint64_t count_avoiders(int n, const std::vector<Permutation>& basis) {
    std::uint64_t count = 0;
    for_each_avoider(n, basis, [&](Permutation&&) { ++count; });
    return count;
}

int lis(const Permutation& p) {
    // Patience-style: tails[k] = smallest tail value of an increasing
    // subsequence of length k+1.
    std::vector<int> tails;
    for (int v : p.entries()) {
        auto it = std::lower_bound(tails.begin(), tails.end(), v);
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

Permutation parse_permutation(const std::string& text) {
    std::vector<int> entries;
    if (text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw ParseError("bad permutation text: " + text);
            entries.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t comma = text.find(',', pos);
            std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError("bad permutation text: " + text);
            entries.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Permutation(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + ": " + text);
    }
}

std::string format_permutation(const Permutation& p) {
    std::string out;
    const bool compact = p.size() <= 9;
    for (int i = 0; i < p.size(); ++i) {
        if (!compact && i > 0) out += ',';
        out += std::to_string(p[i]);
    }
    return out;
}

}  // namespace rookpath
