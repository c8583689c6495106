#pragma once

// Exhaustive generators, distribution tables and the verifiers that check
// the statistic-transport identities of b over all of S_n / the symmetric
// group.
//
// Every verifier accepts `jobs`: the n! inputs are cut into `jobs`
// contiguous lexicographic blocks, each block is processed on its own
// thread, and per-block results are merged by pointwise addition. Results
// do not depend on `jobs`.

#include "permcode/core.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace permcode {

inline constexpr int kDefaultCap = 10;

/// Throws InvalidInput unless 1 <= n <= cap.
void check_enumeration_size(int n, int cap = kDefaultCap);

std::uint64_t factorial(int n);

/// All permutations of 1..n in lexicographic order.
class PermutationStream {
public:
    explicit PermutationStream(int n, int cap = kDefaultCap);
    std::optional<Permutation> next();

private:
    std::vector<int> current_;
    bool done_ = false;
};

/// All subexcedant sequences of length n, by mixed-radix counting with
/// the last position varying fastest.
class SubexcedantStream {
public:
    explicit SubexcedantStream(int n, int cap = kDefaultCap);
    std::optional<SubexcedantSeq> next();

private:
    std::vector<int> current_;
    bool done_ = false;
};

/// Lexicographic rank <-> permutation, rank in [0, n!).
Permutation unrank_permutation(int n, std::uint64_t rank);
/// Mixed-radix rank <-> sequence, consistent with SubexcedantStream order.
SubexcedantSeq unrank_subexcedant(int n, std::uint64_t rank);
std::uint64_t rank_subexcedant(const SubexcedantSeq& s);

template <class Key>
struct DistTable {
    int n = 0;
    std::map<Key, std::uint64_t> counts;

    void add(const Key& key, std::uint64_t count = 1) { counts[key] += count; }

    void merge(const DistTable& other) {
        for (const auto& [key, count] : other.counts) counts[key] += count;
    }

    std::uint64_t total() const {
        std::uint64_t sum = 0;
        for (const auto& entry : counts) sum += entry.second;
        return sum;
    }

    bool operator==(const DistTable&) const = default;
};

using PairTable = DistTable<std::pair<int, int>>;
using TupleTable = DistTable<std::string>;

enum class Side { Perms, Seqs };

/// (des, ides) over permutations or (asc, row) over sequences; raw
/// exponents, no +1 shift.
PairTable double_eulerian(int n, Side side, int jobs = 1, int cap = kDefaultCap);

/// Distribution of FiveTuple keys over one side.
TupleTable five_tuple_table(int n, Side side, int jobs = 1, int cap = kDefaultCap);

/// Dense (d, e) matrix of a pair table, rows d = 0..n-1, columns e = 0..n-1.
std::vector<std::vector<std::uint64_t>> dense_matrix(const PairTable& table);

/// Polynomial with the u^{d+1} v^{e+1} convention, terms ordered by (d, e).
std::string format_polynomial(const PairTable& table);

struct CheckDetail {
    std::string name;
    bool pass = true;
    std::optional<std::string> counterexample;
};

struct Report {
    int n = 0;
    std::string check;
    bool pass = true;
    std::optional<std::string> counterexample;
    std::uint64_t cases = 0;
    std::vector<CheckDetail> details;
    std::optional<PairTable> table;
};

/// Pointwise five-tuple transport under b, for every permutation.
Report verify_theorem2(int n, int jobs = 1, int cap = kDefaultCap);

/// b is injective on permutations (hence onto S_n), and both round trips
/// through b_decode are identities.
Report verify_bijection(int n, int jobs = 1, int cap = kDefaultCap);

/// (Asc,Row) against (Row,Asc) over S_n, both as multisets and per element
/// through the witness t = b(inverse(b_decode(s))). Checked with set values
/// and with cardinalities; `pass` is the set-valued claim, each level is
/// also reported as a detail.
Report verify_corollary2(int n, int jobs = 1, int cap = kDefaultCap);

/// des and ides over permutations, asc and row over sequences, and Dumont's
/// statistic over permutations share a single distribution.
Report eulerian_check(int n, int jobs = 1, int cap = kDefaultCap);

/// Per-statistic value counts from eulerian_check, index = statistic value.
struct EulerianMarginals {
    std::vector<std::uint64_t> des, ides, asc, row, dumont;
};
EulerianMarginals eulerian_marginals(int n, int jobs = 1, int cap = kDefaultCap);

}  // namespace permcode
