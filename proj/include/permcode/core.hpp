#pragma once

// Word types and the set-valued statistics on permutations and
// subexcedant sequences.
//
// Positions handed in or out of this header are 1-based. Values are the
// word's own symbols: 1..n for permutations, 0..i-1 at position i for
// subexcedant sequences.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permcode {

/// Raised for malformed or out-of-domain user input. `position()` is the
/// 1-based offending position when one can be named.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::invalid_argument(what), position_(position) {}

    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    std::optional<std::size_t> position_;
};

/// Raised when an internal invariant breaks. Valid input never triggers it.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

using Word = std::span<const int>;

/// Parses whitespace-separated decimal integers. Rejects empty input.
std::vector<int> parse_word(std::string_view text);

std::string format_word(Word w);

class Permutation {
public:
    /// Validates that `entries` is a rearrangement of 1..n, n >= 1.
    static Permutation from(std::vector<int> entries);
    static Permutation parse(std::string_view text) { return from(parse_word(text)); }
    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    /// 1-based access.
    int at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
    Word word() const noexcept { return entries_; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    explicit Permutation(std::vector<int> e) : entries_(std::move(e)) {}
    std::vector<int> entries_;
};

class SubexcedantSeq {
public:
    /// Validates 0 <= s_i <= i-1, n >= 1.
    static SubexcedantSeq from(std::vector<int> entries);
    static SubexcedantSeq parse(std::string_view text) { return from(parse_word(text)); }
    static SubexcedantSeq zeros(int n);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    int at(int pos) const { return entries_[static_cast<std::size_t>(pos - 1)]; }
    Word word() const noexcept { return entries_; }
    const std::vector<int>& entries() const noexcept { return entries_; }

    bool operator==(const SubexcedantSeq&) const = default;
    auto operator<=>(const SubexcedantSeq&) const = default;

private:
    explicit SubexcedantSeq(std::vector<int> e) : entries_(std::move(e)) {}
    std::vector<int> entries_;
};

/// Strictly increasing set of 1-based positions.
class PositionSet {
public:
    PositionSet() = default;
    /// Sorts and deduplicates.
    PositionSet(std::initializer_list<int> positions);
    static PositionSet from_sorted(std::vector<int> positions);

    std::size_t size() const noexcept { return positions_.size(); }
    bool empty() const noexcept { return positions_.empty(); }
    bool contains(int pos) const;
    const std::vector<int>& positions() const noexcept { return positions_; }

    /// Canonical text form, e.g. "{1 4 5 6}" or "{}".
    std::string to_string() const;

    bool operator==(const PositionSet&) const = default;
    auto operator<=>(const PositionSet&) const = default;

private:
    std::vector<int> positions_;
};

/// (Des,Ides,LrM,Lrm,RlM) of a permutation or (Asc,Row,Pos0,Max,Rlm) of a
/// subexcedant sequence, in that order.
struct FiveTuple {
    std::array<PositionSet, 5> sets;

    /// Canonical key: the five set strings joined by '|'.
    std::string key() const;

    bool operator==(const FiveTuple&) const = default;
    auto operator<=>(const FiveTuple&) const = default;
};

inline constexpr std::array<std::string_view, 5> kPermTupleNames{"Des", "Ides", "LrM", "Lrm", "RlM"};
inline constexpr std::array<std::string_view, 5> kSeqTupleNames{"Asc", "Row", "Pos0", "Max", "Rlm"};

// Word statistics. All throw InvalidInput on an empty word.
PositionSet des_set(Word w);
PositionSet asc_set(Word w);
PositionSet lrM_set(Word w);
PositionSet lrm_set(Word w);
PositionSet rlM_set(Word w);
PositionSet rlm_set(Word w);

PositionSet ides_set(const Permutation& p);
PositionSet pos0_set(const SubexcedantSeq& s);
PositionSet max_set(const SubexcedantSeq& s);
PositionSet row_set(const SubexcedantSeq& s);

Permutation invert_perm(const Permutation& p);

FiveTuple five_tuple_perm(const Permutation& p);
FiveTuple five_tuple_seq(const SubexcedantSeq& s);

}  // namespace permcode
