#include "permcode/slicer.hpp"

#include <algorithm>
#include <cassert>

namespace permcode {

LambdaClass lambda_from_int(int v) {
    if (v < 0 || v > 3) throw InvalidInput("lambda class must be in 0..3, got " + std::to_string(v));
    return static_cast<LambdaClass>(v);
}

std::vector<LambdaClass> lambda_perm(const Permutation& p) {
    const int n = p.size();
    std::vector<int> where(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) where[static_cast<std::size_t>(p.at(i))] = i;

    std::vector<LambdaClass> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int v = p.at(i);
        const bool succ_left = v == n || where[static_cast<std::size_t>(v + 1)] < i;
        // v-1 = 0 is the sentinel appended on the right.
        const bool pred_left = v > 1 && where[static_cast<std::size_t>(v - 1)] < i;
        out.push_back(static_cast<LambdaClass>(int(succ_left) + 2 * int(pred_left)));
    }
    return out;
}

std::vector<LambdaClass> lambda_seq(const SubexcedantSeq& s) {
    const int n = s.size();
    std::vector<char> occurs(static_cast<std::size_t>(n), 0);
    for (int v : s.word()) occurs[static_cast<std::size_t>(v)] = 1;

    std::vector<LambdaClass> out(static_cast<std::size_t>(n));
    std::vector<char> in_suffix(static_cast<std::size_t>(n), 0);
    for (int i = n; i >= 1; --i) {
        const auto v = static_cast<std::size_t>(s.at(i));
        const bool r1 = in_suffix[v];
        const bool r2 = occurs[static_cast<std::size_t>(i - 1)];
        out[static_cast<std::size_t>(i - 1)] = static_cast<LambdaClass>(int(!r1) + 2 * int(!r2));
        in_suffix[v] = 1;
    }
    return out;
}

std::string format_lambdas(const std::vector<LambdaClass>& classes) {
    std::string out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(to_int(classes[i]));
    }
    return out;
}

int Profile::cardinality() const {
    int total = 0;
    for (const auto& x : intervals) total += x.size();
    return total;
}

namespace {

// Applies step `step` (value `value`) to `prev`, returning the label of the
// interval that held the value.
int advance(const Slice& prev, int value, Slice& next) {
    const auto& in = prev.intervals;
    const std::size_t k = in.size();
    std::size_t v = 0;
    while (v < k && !in[v].contains(value)) ++v;
    if (v == k) {
        throw InternalError("value " + std::to_string(value) + " lies in no interval of slice " +
                            std::to_string(prev.step));
    }
    const LabeledInterval hit = in[v];
    const int step = prev.step + 1;

    next.step = step;
    next.intervals.clear();
    next.intervals.reserve(k + 1);

    // Geometry first; labels are reassigned positionally afterwards.
    for (std::size_t j = 0; j < v; ++j) next.intervals.push_back(in[j]);
    std::vector<int> labels;
    labels.reserve(k + 1);
    for (std::size_t j = 0; j < k; ++j) labels.push_back(in[j].label);

    if (hit.lo < value && value < hit.hi) {
        next.intervals.push_back({value + 1, hit.hi, 0});
        next.intervals.push_back({hit.lo, value - 1, 0});
        labels.push_back(step);
    } else if (hit.lo < value && value == hit.hi) {
        next.intervals.push_back({hit.lo, value - 1, 0});
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
        labels.push_back(step);
    } else if (hit.lo == value && value < hit.hi) {
        next.intervals.push_back({value + 1, hit.hi, 0});
        labels.back() = step;
    } else {
        // Singleton. 0 is never a value, so this is never the last interval.
        assert(v + 1 < k);
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
        labels.back() = step;
    }
    for (std::size_t j = v + 1; j < k; ++j) next.intervals.push_back(in[j]);

    assert(labels.size() == next.intervals.size());
    for (std::size_t j = 0; j < labels.size(); ++j) next.intervals[j].label = labels[j];
    return hit.label;
}

}  // namespace

SliceTrace trace_slices(const Permutation& p) {
    const int n = p.size();
    SliceTrace trace;
    trace.slices.reserve(static_cast<std::size_t>(n));
    trace.slices.push_back(Slice{0, {{0, n, 0}}});

    std::vector<int> code(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const Slice& prev = trace.slices.back();
        if (i < n) {
            Slice next;
            code[static_cast<std::size_t>(i - 1)] = advance(prev, p.at(i), next);
            trace.slices.push_back(std::move(next));
        } else {
            // U_n is not part of the trace; only the label is needed.
            Slice scratch;
            code[static_cast<std::size_t>(i - 1)] = advance(prev, p.at(i), scratch);
        }
    }
    trace.code = SubexcedantSeq::from(std::move(code));
    return trace;
}

std::vector<Slice> slices(const Permutation& p) { return trace_slices(p).slices; }

SubexcedantSeq b_encode(const Permutation& p) { return trace_slices(p).code; }

Profile profile_of(const Slice& slice, int n) {
    Profile out;
    out.step = slice.step;
    // Gaps between consecutive slice intervals (and above the first) are the
    // used values, already maximal since slice intervals are disjoint.
    int top = n;
    for (const auto& iv : slice.intervals) {
        if (iv.hi < top) out.intervals.push_back({iv.hi + 1, top});
        top = iv.lo - 1;
    }
    return out;
}

std::vector<Profile> profiles(const Permutation& p) {
    const auto all = slices(p);
    std::vector<Profile> out;
    out.reserve(all.size());
    for (std::size_t i = 1; i < all.size(); ++i) out.push_back(profile_of(all[i], p.size()));
    return out;
}

std::optional<std::string> check_slice(const Slice& slice, const Permutation& p) {
    const int n = p.size();
    const int i = slice.step;
    const auto& iv = slice.intervals;
    auto fail = [&](const std::string& what) {
        return std::optional<std::string>("slice " + std::to_string(i) + " of " + format_word(p.word()) + ": " +
                                          what + " in " + format_slice(slice));
    };
    if (iv.empty()) return fail("no intervals");
    for (std::size_t j = 0; j < iv.size(); ++j) {
        if (iv[j].lo > iv[j].hi) return fail("empty interval");
        if (iv[j].label < 0 || iv[j].label > i) return fail("label outside [0,step]");
        if (j + 1 < iv.size()) {
            if (!(iv[j + 1].hi < iv[j].lo)) return fail("intervals not decreasing");
            if (!(iv[j].label < iv[j + 1].label)) return fail("labels not increasing");
        }
    }
    if (iv.back().label != i) return fail("last label differs from step");
    if (!iv.back().contains(0)) return fail("0 not in last interval");

    std::vector<char> covered(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& x : iv) {
        if (x.lo < 0 || x.hi > n) return fail("interval leaves [0,n]");
        for (int v = x.lo; v <= x.hi; ++v) covered[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> expected(static_cast<std::size_t>(n) + 1, 0);
    expected[0] = 1;
    for (int j = i + 1; j <= n; ++j) expected[static_cast<std::size_t>(p.at(j))] = 1;
    if (covered != expected) return fail("union differs from unused values and 0");

    if (i < n) {
        const int next = p.at(i + 1);
        int outside = 0;
        for (int v = next; v <= n; ++v)
            if (!covered[static_cast<std::size_t>(v)]) ++outside;
        int larger_left = 0;
        for (int j = 1; j <= i; ++j)
            if (p.at(j) > next) ++larger_left;
        if (outside != larger_left) return fail("Lehmer entry formula fails");
    }
    return std::nullopt;
}

std::string format_slice(const Slice& slice) {
    std::string out;
    for (std::size_t j = 0; j < slice.intervals.size(); ++j) {
        const auto& x = slice.intervals[j];
        if (j) out += ',';
        out += "([" + std::to_string(x.lo) + ',' + std::to_string(x.hi) + "]," + std::to_string(x.label) + ')';
    }
    return out;
}

std::string format_profile(const Profile& profile) {
    std::string out;
    for (std::size_t j = 0; j < profile.intervals.size(); ++j) {
        const auto& x = profile.intervals[j];
        if (j) out += ',';
        out += '[' + std::to_string(x.lo) + ',' + std::to_string(x.hi) + ']';
    }
    return out;
}

std::string format_trace(const Permutation& p) {
    const auto all = slices(p);
    std::string out;
    for (const auto& u : all) {
        out += "U_" + std::to_string(u.step) + '=' + format_slice(u) + '\n';
        if (u.step > 0) out += "X_" + std::to_string(u.step) + '=' + format_profile(profile_of(u, p.size())) + '\n';
    }
    return out;
}

}  // namespace permcode
