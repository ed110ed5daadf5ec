#include "rookpath/machine.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "rookpath/errors.hpp"

namespace rookpath {

StackWord::StackWord(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 's' && c != 't' && c != 'p')
            throw std::invalid_argument("stack words use the alphabet {s, t, p}");
}

MachineState initial_state(const Permutation& pi) {
    return MachineState{pi.entries(), {}, {}, {}};
}

namespace {

void apply_letter(MachineState& state, char letter, std::size_t position, bool enforce_increasing) {
    switch (letter) {
        case 's': {
            if (state.input.empty()) throw MachineError(position, "push with empty input");
            const int v = state.input.front();
            if (enforce_increasing && !state.stack1.empty() && v > state.stack1.back())
                throw MachineError(position, "push would break the increasing order of stack 1");
            state.input.erase(state.input.begin());
            state.stack1.push_back(v);
            break;
        }
        case 't': {
            if (state.stack1.empty()) throw MachineError(position, "transfer with empty stack 1");
            const int v = state.stack1.back();
            if (enforce_increasing && !state.stack2.empty() && v > state.stack2.back())
                throw MachineError(position, "transfer would break the increasing order of stack 2");
            state.stack1.pop_back();
            state.stack2.push_back(v);
            break;
        }
        case 'p': {
            if (state.stack2.empty()) throw MachineError(position, "pop with empty stack 2");
            state.output.push_back(state.stack2.back());
            state.stack2.pop_back();
            break;
        }
        default:
            throw MachineError(position, "unknown letter");
    }
}

}  // namespace

MachineState execute(const StackWord& word, const Permutation& pi, bool enforce_increasing) {
    MachineState state = initial_state(pi);
    for (std::size_t k = 0; k < word.str().size(); ++k)
        apply_letter(state, word.str()[k], k, enforce_increasing);
    return state;
}

std::vector<std::pair<char, MachineState>> execute_trace(const StackWord& word,
                                                         const Permutation& pi,
                                                         bool enforce_increasing) {
    std::vector<std::pair<char, MachineState>> trace;
    MachineState state = initial_state(pi);
    for (std::size_t k = 0; k < word.str().size(); ++k) {
        apply_letter(state, word.str()[k], k, enforce_increasing);
        trace.emplace_back(word.str()[k], state);
    }
    return trace;
}

bool is_valid_word(const StackWord& word) {
    int s = 0, t = 0, p = 0;
    for (char c : word.str()) {
        if (c == 's') ++s;
        if (c == 't') ++t;
        if (c == 'p') ++p;
        if (t > s || p > t) return false;
    }
    return s == t && t == p;
}

namespace {

// Whether the factor [a, b) of w is a valid stack word (empty counts).
bool valid_factor(const std::string& w, std::size_t a, std::size_t b) {
    int s = 0, t = 0, p = 0;
    for (std::size_t k = a; k < b; ++k) {
        if (w[k] == 's') ++s;
        if (w[k] == 't') ++t;
        if (w[k] == 'p') ++p;
        if (t > s || p > t) return false;
    }
    return s == t && t == p;
}

// Whether appending one more letter at position `end` (already present in w)
// creates a forbidden greedy factor terminating there.
bool creates_forbidden_factor(const std::string& w, std::size_t end) {
    const char c = w[end];
    if (c == 'p' && end > 0 && w[end - 1] == 's') return true;  // sp factor
    if (c == 't') {
        for (std::size_t a = 0; a < end; ++a) {
            if (w[a] == 't' && valid_factor(w, a + 1, end)) return true;  // t-valid-t
            if (valid_factor(w, a, end)) return true;  // nonempty valid then t
        }
    }
    return false;
}

}  // namespace

bool is_greedy_increasing_word(const StackWord& word) {
    if (!is_valid_word(word)) return false;
    const std::string& w = word.str();
    for (std::size_t end = 0; end < w.size(); ++end)
        if (creates_forbidden_factor(w, end)) return false;
    return true;
}

StackWord word_from_path(const LabeledDyckPath& lp) {
    if (!is_admissible(lp))
        throw std::invalid_argument("word map needs an admissible labeled path");
    std::string letters;
    const auto& path = lp.path();
    for (int k = 1; k <= path.length(); ++k) {
        const bool rises = lp.label(k) > lp.label(k - 1);
        const bool falls = lp.label(k) < lp.label(k - 1);
        if (path.step(k) == 'U')
            letters += rises ? "st" : "s";
        else
            letters += falls ? "p" : "pt";
    }
    StackWord word(std::move(letters));
    if (!is_greedy_increasing_word(word))
        throw std::logic_error("word map produced a non-greedy word");
    return word;
}

LabeledDyckPath path_from_word(const StackWord& word) {
    if (!is_greedy_increasing_word(word))
        throw std::invalid_argument("path map needs a greedy stack word");
    std::string steps;
    std::vector<int> labels;
    int transfers = 0, pops = 0;
    for (char c : word.str()) {
        if (c == 't') {
            ++transfers;
            continue;
        }
        labels.push_back(transfers - pops);  // stack 2 size before this push/pop
        steps += (c == 's') ? 'U' : 'D';
        if (c == 'p') ++pops;
    }
    labels.push_back(transfers - pops);
    LabeledDyckPath lp(DyckPath(std::move(steps)), std::move(labels));
    if (!is_admissible(lp) || word_from_path(lp) != word)
        throw std::logic_error("path map failed to invert the word map");
    return lp;
}

Permutation word_to_permutation(const StackWord& word) {
    if (!is_valid_word(word)) throw std::invalid_argument("word must be valid");
    const int n = word.size() / 3;
    std::vector<int> stack1, stack2;
    std::vector<int> value(static_cast<std::size_t>(n) + 1, 0);
    int next_entry = 1, next_value = 1;
    for (char c : word.str()) {
        if (c == 's') {
            stack1.push_back(next_entry++);
        } else if (c == 't') {
            stack2.push_back(stack1.back());
            stack1.pop_back();
        } else {
            value[static_cast<std::size_t>(stack2.back())] = next_value++;
            stack2.pop_back();
        }
    }
    std::vector<int> entries;
    entries.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) entries.push_back(value[static_cast<std::size_t>(j)]);
    return Permutation(std::move(entries));
}

namespace {

struct SortSearch {
    const std::vector<int>& values;
    std::unordered_set<std::string> failed;

    std::string encode(std::size_t next, const std::vector<int>& s1,
                       const std::vector<int>& s2) const {
        std::string key;
        key.reserve(s1.size() + s2.size() + 3);
        key += static_cast<char>(next);
        for (int v : s1) key += static_cast<char>(v);
        key += '\x7f';
        for (int v : s2) key += static_cast<char>(v);
        return key;
    }

    bool search(std::size_t next, std::vector<int>& s1, std::vector<int>& s2, int emitted) {
        // Popping the needed value is always safe: delaying it can only bury
        // it under smaller values that would block the sorted output.
        int popped = 0;
        while (!s2.empty() && s2.back() == emitted + 1) {
            s2.pop_back();
            ++emitted;
            ++popped;
        }
        bool found = false;
        if (next == values.size() && s1.empty() && s2.empty()) {
            found = true;
        } else {
            const std::string key = encode(next, s1, s2);
            if (!failed.contains(key)) {
                if (next < values.size() &&
                    (s1.empty() || values[next] < s1.back())) {
                    s1.push_back(values[next]);
                    found = search(next + 1, s1, s2, emitted);
                    s1.pop_back();
                }
                if (!found && !s1.empty() && (s2.empty() || s1.back() < s2.back())) {
                    const int v = s1.back();
                    s1.pop_back();
                    s2.push_back(v);
                    found = search(next, s1, s2, emitted);
                    s2.pop_back();
                    s1.push_back(v);
                }
                if (!found) failed.insert(key);
            }
        }
        while (popped-- > 0) s2.push_back(emitted--);
        return found;
    }
};

}  // namespace

bool sortable(const Permutation& pi) {
    if (pi.size() > kMaxSortableLength)
        throw ResourceLimitError("sortability search limited to length " +
                                 std::to_string(kMaxSortableLength));
    SortSearch search{pi.entries(), {}};
    std::vector<int> s1, s2;
    return search.search(0, s1, s2, 0);
}

namespace {

struct GreedySearch {
    const std::vector<int>& values;
    std::string word;
    std::vector<StackWord> found;

    void search(std::size_t next, std::vector<int>& s1, std::vector<int>& s2, int emitted) {
        if (found.size() > 1) return;
        if (next == values.size() && s1.empty() && s2.empty()) {
            found.emplace_back(word);
            return;
        }
        if (next < values.size() && (s1.empty() || values[next] < s1.back()) &&
            try_letter('s')) {
            s1.push_back(values[next]);
            search(next + 1, s1, s2, emitted);
            s1.pop_back();
            word.pop_back();
        }
        if (!s1.empty() && (s2.empty() || s1.back() < s2.back()) && try_letter('t')) {
            const int v = s1.back();
            s1.pop_back();
            s2.push_back(v);
            search(next, s1, s2, emitted);
            s2.pop_back();
            s1.push_back(v);
            word.pop_back();
        }
        if (!s2.empty() && s2.back() == emitted + 1 && try_letter('p')) {
            const int v = s2.back();
            s2.pop_back();
            search(next, s1, s2, emitted + 1);
            s2.push_back(v);
            word.pop_back();
        }
    }

    // Appends the letter unless it completes a forbidden factor.
    bool try_letter(char c) {
        word += c;
        if (creates_forbidden_factor(word, word.size() - 1)) {
            word.pop_back();
            return false;
        }
        return true;
    }
};

}  // namespace

std::optional<StackWord> greedy_word(const Permutation& pi) {
    if (pi.size() > kMaxSortableLength)
        throw ResourceLimitError("greedy-word search limited to length " +
                                 std::to_string(kMaxSortableLength));
    GreedySearch search{pi.entries(), {}, {}};
    std::vector<int> s1, s2;
    search.search(0, s1, s2, 0);
    if (search.found.empty()) return std::nullopt;
    if (search.found.size() > 1)
        throw std::logic_error("greediness conditions failed to pin a unique word");
    return search.found.front();
}

namespace {

struct WordSearch {
    int n;
    std::string word;
    int s = 0, t = 0, p = 0;
    std::vector<StackWord> found;

    void search() {
        if (static_cast<int>(word.size()) == 3 * n) {
            found.emplace_back(word);
            return;
        }
        for (char c : {'p', 's', 't'}) {  // lexicographic over the alphabet
            int& count = (c == 's') ? s : (c == 't') ? t : p;
            const int cap = n;
            if (count >= cap) continue;
            if (c == 't' && t >= s) continue;  // prefix dominance
            if (c == 'p' && p >= t) continue;
            word += c;
            ++count;
            if (!creates_forbidden_factor(word, word.size() - 1)) search();
            --count;
            word.pop_back();
        }
    }
};

}  // namespace

std::vector<StackWord> enumerate_greedy_words(int n) {
    if (n > kMaxSortableLength)
        throw ResourceLimitError("greedy-word enumeration limited to semilength " +
                                 std::to_string(kMaxSortableLength));
    WordSearch search{n, {}, 0, 0, 0, {}};
    search.search();
    return search.found;
}

}  // namespace rookpath
