#pragma once

// Inverse of the code b.
//
// Decoding never reconstructs actual interval endpoints. It tracks, from
// the code word alone, the top-to-bottom alternation of slice intervals
// (by label) and profile intervals (by cardinality). Before step i the
// profile cardinalities above the slice interval labeled s_i add up to the
// i-th Lehmer entry, so the permutation falls out of lehmer_decode.

#include "permcode/core.hpp"
#include "permcode/slicer.hpp"

#include <vector>

namespace permcode {

struct Segment {
    enum class Kind : std::uint8_t { Slice, Profile };

    Kind kind = Kind::Slice;
    int label = 0;        ///< Slice segments only
    int cardinality = 0;  ///< Profile segments only

    bool operator==(const Segment&) const = default;
};

/// Alternating chain of slice and profile segments, top (value n) first.
/// The last segment is always the slice segment holding 0.
class SegmentChain {
public:
    /// Chain before step 1 of a length-n word: one slice segment, label 0.
    SegmentChain();

    const std::vector<Segment>& segments() const noexcept { return segments_; }

    /// Whether the largest value is already used (top segment is a profile).
    bool top_is_profile() const;

    /// Index into segments() of the slice segment carrying `label`; throws
    /// InternalError if there is none.
    std::size_t find_label(int label) const;

    /// Sum of the profile cardinalities above segment `index`.
    int profile_mass_above(std::size_t index) const;

    /// Applies step `step` whose value lies in the slice segment labeled
    /// `label` and whose class is `cls`.
    void apply(int step, int label, LambdaClass cls);

    std::vector<int> slice_labels() const;
    std::vector<int> profile_cardinalities() const;

    /// Throws InternalError if alternation, label order or last-segment
    /// shape is broken; `step` is the number of steps applied.
    void check(int step) const;

private:
    std::vector<Segment> segments_;
};

/// Chain states before each step, plus the Lehmer code produced.
struct DecodeTrace {
    std::vector<SegmentChain> chains;  ///< chains[i] is the state after i steps, i = 0..n-1
    SubexcedantSeq lehmer = SubexcedantSeq::zeros(1);
    Permutation result = Permutation::identity(1);
};

DecodeTrace trace_b_decode(const SubexcedantSeq& s);
Permutation b_decode(const SubexcedantSeq& s);

bool roundtrip_check(const Permutation& p);

}  // namespace permcode
