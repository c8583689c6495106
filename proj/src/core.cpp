#include "permcode/core.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace permcode {

namespace {

void require_nonempty(Word w) {
    if (w.empty()) throw InvalidInput("empty word");
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

std::vector<int> parse_word(std::string_view text) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_space(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) ++j;
        const std::string_view token = text.substr(i, j - i);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size()) {
            throw InvalidInput("position " + std::to_string(out.size() + 1) + ": '" + std::string(token) +
                                   "' is not a decimal integer",
                               out.size() + 1);
        }
        out.push_back(value);
        i = j;
    }
    if (out.empty()) throw InvalidInput("empty word");
    return out;
}

std::string format_word(Word w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

Permutation Permutation::from(std::vector<int> entries) {
    if (entries.empty()) throw InvalidInput("empty word");
    const int n = static_cast<int>(entries.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = entries[static_cast<std::size_t>(i)];
        if (v < 1 || v > n) {
            throw InvalidInput("position " + std::to_string(i + 1) + ": value " + std::to_string(v) +
                                   " outside 1.." + std::to_string(n),
                               static_cast<std::size_t>(i + 1));
        }
        if (seen[static_cast<std::size_t>(v)]) {
            throw InvalidInput("position " + std::to_string(i + 1) + ": value " + std::to_string(v) + " repeated",
                               static_cast<std::size_t>(i + 1));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return Permutation(std::move(entries));
}

Permutation Permutation::identity(int n) {
    if (n < 1) throw InvalidInput("permutation length must be at least 1");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

SubexcedantSeq SubexcedantSeq::from(std::vector<int> entries) {
    if (entries.empty()) throw InvalidInput("empty word");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const int v = entries[i];
        if (v < 0 || v > static_cast<int>(i)) {
            throw InvalidInput("position " + std::to_string(i + 1) + ": value " + std::to_string(v) +
                                   " violates 0 <= s_i <= " + std::to_string(i),
                               i + 1);
        }
    }
    return SubexcedantSeq(std::move(entries));
}

SubexcedantSeq SubexcedantSeq::zeros(int n) {
    if (n < 1) throw InvalidInput("sequence length must be at least 1");
    return SubexcedantSeq(std::vector<int>(static_cast<std::size_t>(n), 0));
}

PositionSet::PositionSet(std::initializer_list<int> positions) : positions_(positions) {
    std::sort(positions_.begin(), positions_.end());
    positions_.erase(std::unique(positions_.begin(), positions_.end()), positions_.end());
}

PositionSet PositionSet::from_sorted(std::vector<int> positions) {
    PositionSet s;
    s.positions_ = std::move(positions);
    return s;
}

bool PositionSet::contains(int pos) const {
    return std::binary_search(positions_.begin(), positions_.end(), pos);
}

std::string PositionSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(positions_[i]);
    }
    out += '}';
    return out;
}

std::string FiveTuple::key() const {
    std::string out;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (i) out += '|';
        out += sets[i].to_string();
    }
    return out;
}

PositionSet des_set(Word w) {
    require_nonempty(w);
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i + 1));
    return PositionSet::from_sorted(std::move(out));
}

PositionSet asc_set(Word w) {
    require_nonempty(w);
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] < w[i + 1]) out.push_back(static_cast<int>(i + 1));
    return PositionSet::from_sorted(std::move(out));
}

PositionSet lrM_set(Word w) {
    require_nonempty(w);
    std::vector<int> out{1};
    int best = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] > best) {
            best = w[i];
            out.push_back(static_cast<int>(i + 1));
        }
    }
    return PositionSet::from_sorted(std::move(out));
}

PositionSet lrm_set(Word w) {
    require_nonempty(w);
    std::vector<int> out{1};
    int best = w[0];
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < best) {
            best = w[i];
            out.push_back(static_cast<int>(i + 1));
        }
    }
    return PositionSet::from_sorted(std::move(out));
}

PositionSet rlM_set(Word w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    std::vector<int> out{static_cast<int>(n)};
    int best = w[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        if (w[i] > best) {
            best = w[i];
            out.push_back(static_cast<int>(i + 1));
        }
    }
    std::reverse(out.begin(), out.end());
    return PositionSet::from_sorted(std::move(out));
}

PositionSet rlm_set(Word w) {
    require_nonempty(w);
    const std::size_t n = w.size();
    std::vector<int> out{static_cast<int>(n)};
    int best = w[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        if (w[i] < best) {
            best = w[i];
            out.push_back(static_cast<int>(i + 1));
        }
    }
    std::reverse(out.begin(), out.end());
    return PositionSet::from_sorted(std::move(out));
}

PositionSet ides_set(const Permutation& p) {
    const int n = p.size();
    // where[v] = 1-based position of value v
    std::vector<int> where(static_cast<std::size_t>(n) + 2, 0);
    for (int i = 1; i <= n; ++i) where[static_cast<std::size_t>(p.at(i))] = i;
    std::vector<int> out;
    for (int i = 2; i <= n; ++i) {
        const int v = p.at(i);
        if (v < n && where[static_cast<std::size_t>(v + 1)] < i) out.push_back(i);
    }
    return PositionSet::from_sorted(std::move(out));
}

PositionSet pos0_set(const SubexcedantSeq& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.size(); ++i)
        if (s.at(i) == 0) out.push_back(i);
    return PositionSet::from_sorted(std::move(out));
}

PositionSet max_set(const SubexcedantSeq& s) {
    std::vector<int> out;
    for (int i = 1; i <= s.size(); ++i)
        if (s.at(i) == i - 1) out.push_back(i);
    return PositionSet::from_sorted(std::move(out));
}

PositionSet row_set(const SubexcedantSeq& s) {
    const int n = s.size();
    std::vector<char> seen_right(static_cast<std::size_t>(n), 0);
    std::vector<int> out;
    for (int i = n; i >= 1; --i) {
        const auto v = static_cast<std::size_t>(s.at(i));
        if (v != 0 && !seen_right[v]) out.push_back(i);
        seen_right[v] = 1;
    }
    std::reverse(out.begin(), out.end());
    return PositionSet::from_sorted(std::move(out));
}

Permutation invert_perm(const Permutation& p) {
    std::vector<int> q(static_cast<std::size_t>(p.size()));
    for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p.at(i) - 1)] = i;
    return Permutation::from(std::move(q));
}

FiveTuple five_tuple_perm(const Permutation& p) {
    return FiveTuple{{des_set(p.word()), ides_set(p), lrM_set(p.word()), lrm_set(p.word()), rlM_set(p.word())}};
}

FiveTuple five_tuple_seq(const SubexcedantSeq& s) {
    return FiveTuple{{asc_set(s.word()), row_set(s), pos0_set(s), max_set(s), rlm_set(s.word())}};
}

}  // namespace permcode
