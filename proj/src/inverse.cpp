#include "permcode/inverse.hpp"

#include "permcode/lehmer.hpp"

#include <algorithm>

namespace permcode {

namespace {

using Kind = Segment::Kind;

Segment slice_segment(int label) { return Segment{Kind::Slice, label, 0}; }
Segment profile_segment(int cardinality) { return Segment{Kind::Profile, 0, cardinality}; }

bool is_profile(const std::vector<Segment>& chain, std::size_t idx) {
    return idx < chain.size() && chain[idx].kind == Kind::Profile;
}

}  // namespace

SegmentChain::SegmentChain() : segments_{slice_segment(0)} {}

bool SegmentChain::top_is_profile() const { return segments_.front().kind == Kind::Profile; }

std::size_t SegmentChain::find_label(int label) const {
    for (std::size_t j = 0; j < segments_.size(); ++j)
        if (segments_[j].kind == Kind::Slice && segments_[j].label == label) return j;
    throw InternalError("no slice segment carries label " + std::to_string(label));
}

int SegmentChain::profile_mass_above(std::size_t index) const {
    int total = 0;
    for (std::size_t j = 0; j < index; ++j)
        if (segments_[j].kind == Kind::Profile) total += segments_[j].cardinality;
    return total;
}

void SegmentChain::apply(int step, int label, LambdaClass cls) {
    const std::size_t v = find_label(label);
    auto& chain = segments_;
    const bool last = v + 1 == chain.size();

    // New labels, positionally: split appends the step; a top trim drops the
    // hit label and appends the step; a bottom trim overwrites the last label;
    // a removal drops the hit label and overwrites the last one.
    std::vector<int> labels = slice_labels();
    const auto rank = static_cast<std::ptrdiff_t>(
        std::count_if(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(v),
                      [](const Segment& seg) { return seg.kind == Kind::Slice; }));

    switch (cls) {
        case LambdaClass::Split:
            chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(v) + 1, {profile_segment(1), slice_segment(0)});
            labels.push_back(step);
            break;
        case LambdaClass::TrimTop:
            if (v > 0 && is_profile(chain, v - 1)) {
                ++chain[v - 1].cardinality;
            } else {
                chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(v), profile_segment(1));
            }
            labels.erase(labels.begin() + rank);
            labels.push_back(step);
            break;
        case LambdaClass::TrimBottom:
            if (last || !is_profile(chain, v + 1)) throw InternalError("bottom trim without a profile below");
            ++chain[v + 1].cardinality;
            labels.back() = step;
            break;
        case LambdaClass::Remove:
            if (last || !is_profile(chain, v + 1)) throw InternalError("removal without a profile below");
            if (v > 0 && is_profile(chain, v - 1)) {
                chain[v - 1].cardinality += 1 + chain[v + 1].cardinality;
                chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(v),
                            chain.begin() + static_cast<std::ptrdiff_t>(v) + 2);
            } else {
                ++chain[v + 1].cardinality;
                chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(v));
            }
            labels.erase(labels.begin() + rank);
            labels.back() = step;
            break;
    }

    std::size_t next = 0;
    for (auto& seg : chain) {
        if (seg.kind != Kind::Slice) continue;
        if (next == labels.size()) throw InternalError("slice segment count out of step with labels");
        seg.label = labels[next++];
    }
    if (next != labels.size()) throw InternalError("slice segment count out of step with labels");
}

std::vector<int> SegmentChain::slice_labels() const {
    std::vector<int> out;
    for (const auto& seg : segments_)
        if (seg.kind == Kind::Slice) out.push_back(seg.label);
    return out;
}

std::vector<int> SegmentChain::profile_cardinalities() const {
    std::vector<int> out;
    for (const auto& seg : segments_)
        if (seg.kind == Kind::Profile) out.push_back(seg.cardinality);
    return out;
}

void SegmentChain::check(int step) const {
    const auto& chain = segments_;
    if (chain.empty() || chain.back().kind != Kind::Slice) throw InternalError("chain must end in a slice segment");
    int mass = 0;
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (j + 1 < chain.size() && chain[j].kind == chain[j + 1].kind)
            throw InternalError("adjacent segments of the same kind at step " + std::to_string(step));
        if (chain[j].kind == Kind::Profile) {
            if (chain[j].cardinality < 1) throw InternalError("empty profile segment");
            mass += chain[j].cardinality;
        }
    }
    if (mass != step) throw InternalError("profile mass differs from step " + std::to_string(step));
    const auto labels = slice_labels();
    for (std::size_t j = 0; j + 1 < labels.size(); ++j)
        if (labels[j] >= labels[j + 1]) throw InternalError("slice labels not increasing");
    if (labels.back() != step) throw InternalError("last slice label differs from step");
}

DecodeTrace trace_b_decode(const SubexcedantSeq& s) {
    const int n = s.size();
    const auto classes = lambda_seq(s);

    DecodeTrace trace;
    trace.chains.reserve(static_cast<std::size_t>(n));
    trace.chains.emplace_back();

    // zero_from[i] = whether 0 occurs in s_i..s_n
    std::vector<char> zero_from(static_cast<std::size_t>(n) + 2, 0);
    for (int i = n; i >= 1; --i) zero_from[static_cast<std::size_t>(i)] = zero_from[static_cast<std::size_t>(i + 1)] || s.at(i) == 0;

    std::vector<int> lehmer(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const SegmentChain& chain = trace.chains.back();
        chain.check(i - 1);
        if (chain.top_is_profile() == bool(zero_from[static_cast<std::size_t>(i)]))
            throw InternalError("top profile flag disagrees with zeros of the code suffix at step " + std::to_string(i));
        const std::size_t where = chain.find_label(s.at(i));
        lehmer[static_cast<std::size_t>(i - 1)] = chain.profile_mass_above(where);
        if (i == n) break;
        SegmentChain next = chain;
        next.apply(i, s.at(i), classes[static_cast<std::size_t>(i - 1)]);
        trace.chains.push_back(std::move(next));
    }
    trace.lehmer = SubexcedantSeq::from(std::move(lehmer));
    trace.result = lehmer_decode(trace.lehmer);
    return trace;
}

Permutation b_decode(const SubexcedantSeq& s) {
    const int n = s.size();
    const auto classes = lambda_seq(s);
    SegmentChain chain;
    std::vector<int> lehmer(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        lehmer[static_cast<std::size_t>(i - 1)] = chain.profile_mass_above(chain.find_label(s.at(i)));
        if (i < n) chain.apply(i, s.at(i), classes[static_cast<std::size_t>(i - 1)]);
    }
    return lehmer_decode(SubexcedantSeq::from(std::move(lehmer)));
}

bool roundtrip_check(const Permutation& p) { return b_decode(b_encode(p)) == p; }

}  // namespace permcode
