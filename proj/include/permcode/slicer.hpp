#pragma once

// Slices, profiles and the forward code b.
//
// The i-th slice of a permutation is a decreasing sequence of labeled
// intervals covering the values still unused after i steps, together with
// the sentinel 0. Each step removes one value from the interval that holds
// it; how the interval and the labels change depends on the position's
// class (split, trim top, trim bottom, remove). b_i is the label of the
// interval holding p_i just before step i.

#include "permcode/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace permcode {

/// Position class. The numeric value is
/// [p_i = n or p_i+1 left of p_i] + 2 [p_i-1 left of p_i], where the
/// trailing sentinel 0 always sits to the right.
enum class LambdaClass : std::uint8_t {
    Split = 0,       ///< value strictly inside its interval
    TrimTop = 1,     ///< value is the top of its interval
    TrimBottom = 2,  ///< value is the bottom of its interval
    Remove = 3,      ///< value is a singleton interval
};

inline int to_int(LambdaClass c) { return static_cast<int>(c); }
LambdaClass lambda_from_int(int v);

std::vector<LambdaClass> lambda_perm(const Permutation& p);

/// Same classes read off a code word alone: bit 0 is "s_i does not occur
/// in s_{i+1..n}", bit 1 is "the symbol i-1 does not occur in s".
std::vector<LambdaClass> lambda_seq(const SubexcedantSeq& s);

std::string format_lambdas(const std::vector<LambdaClass>& classes);

struct Interval {
    int lo = 0;
    int hi = 0;

    int size() const { return hi - lo + 1; }
    bool contains(int v) const { return lo <= v && v <= hi; }
    bool operator==(const Interval&) const = default;
};

struct LabeledInterval {
    int lo = 0;
    int hi = 0;
    int label = 0;

    bool contains(int v) const { return lo <= v && v <= hi; }
    bool operator==(const LabeledInterval&) const = default;
};

struct Slice {
    int step = 0;
    std::vector<LabeledInterval> intervals;  ///< top (largest values) first

    bool operator==(const Slice&) const = default;
};

struct Profile {
    int step = 0;
    std::vector<Interval> intervals;  ///< top first

    int cardinality() const;
    bool operator==(const Profile&) const = default;
};

/// Slices U_0 .. U_{n-1} together with the code they induce.
struct SliceTrace {
    std::vector<Slice> slices;
    SubexcedantSeq code = SubexcedantSeq::zeros(1);
};

SliceTrace trace_slices(const Permutation& p);
std::vector<Slice> slices(const Permutation& p);

/// Profiles for steps 1 .. n-1.
std::vector<Profile> profiles(const Permutation& p);
Profile profile_of(const Slice& slice, int n);

SubexcedantSeq b_encode(const Permutation& p);

/// Checks every structural property a slice of `p` must have after its
/// step, including the Lehmer-entry formula. Returns a description of the
/// first violation, or nullopt.
std::optional<std::string> check_slice(const Slice& slice, const Permutation& p);

/// "([7,8],0),([0,5],1)"
std::string format_slice(const Slice& slice);
/// "[5,6],[2,2]"
std::string format_profile(const Profile& profile);

/// Full step-by-step dump: U_0, then U_i and X_i for i = 1..n-1.
std::string format_trace(const Permutation& p);

}  // namespace permcode
