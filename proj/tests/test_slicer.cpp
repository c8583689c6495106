#include "oracles.hpp"
#include "permcode/lehmer.hpp"
#include "permcode/slicer.hpp"

#include <doctest.h>

using namespace permcode;

namespace {

const Permutation kPi = Permutation::parse("6 2 5 8 7 3 1 4");

std::vector<int> as_ints(const std::vector<LambdaClass>& v) {
    std::vector<int> out;
    for (auto c : v) out.push_back(to_int(c));
    return out;
}

}  // namespace

TEST_CASE("lambda_perm") {
    CHECK(as_ints(lambda_perm(kPi)) == std::vector<int>{0, 0, 1, 1, 3, 2, 1, 3});
    CHECK(as_ints(lambda_perm(Permutation::parse("1"))) == std::vector<int>{1});
    CHECK(format_lambdas(lambda_perm(kPi)) == "0 0 1 1 3 2 1 3");
}

TEST_CASE("lambda at the first and last positions") {
    for (int n = 2; n <= 6; ++n) {
        for (const auto& e : oracle::all_perms(n)) {
            const auto cls = as_ints(lambda_perm(Permutation::from(e)));
            CHECK(cls.front() == (e.front() == n ? 1 : 0));
            // p_n = 1: the successor 2 is to the left, the predecessor is the
            // sentinel 0 on the right, so only the first bracket fires.
            CHECK(cls.back() == (e.back() == 1 ? 1 : 3));
        }
    }
}

TEST_CASE("lambda_perm matches the P1/P2 case table") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& e : oracle::all_perms(n)) REQUIRE(as_ints(lambda_perm(Permutation::from(e))) == oracle::lambda_cases(e));
}

TEST_CASE("lambda_seq") {
    CHECK(as_ints(lambda_seq(SubexcedantSeq::parse("0 1 1 0 2 3 6 3"))) == std::vector<int>{0, 0, 1, 1, 3, 2, 1, 3});
    CHECK(as_ints(lambda_seq(SubexcedantSeq::parse("0"))) == std::vector<int>{1});
    CHECK(lambda_seq(SubexcedantSeq::parse("0 0 0 0")).front() == LambdaClass::Split);
    CHECK_THROWS_AS(lambda_from_int(4), InvalidInput);
}

TEST_CASE("slices of the worked example") {
    const std::vector<std::string> expected{
        "([0,8],0)",
        "([7,8],0),([0,5],1)",
        "([7,8],0),([3,5],1),([0,1],2)",
        "([7,8],0),([3,4],2),([0,1],3)",
        "([7,7],2),([3,4],3),([0,1],4)",
        "([3,4],3),([0,1],5)",
        "([4,4],3),([0,1],6)",
        "([4,4],3),([0,0],7)",
    };
    const auto all = slices(kPi);
    REQUIRE(all.size() == expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].step == static_cast<int>(i));
        CHECK(format_slice(all[i]) == expected[i]);
    }
    CHECK(all[1].intervals == std::vector<LabeledInterval>{{7, 8, 0}, {0, 5, 1}});
    CHECK(all[4].intervals == std::vector<LabeledInterval>{{7, 7, 2}, {3, 4, 3}, {0, 1, 4}});
    CHECK(all[7].intervals == std::vector<LabeledInterval>{{4, 4, 3}, {0, 0, 7}});
}

TEST_CASE("profiles of the worked example") {
    const std::vector<std::string> expected{
        "[6,6]", "[6,6],[2,2]", "[5,6],[2,2]", "[8,8],[5,6],[2,2]", "[5,8],[2,2]", "[5,8],[2,3]", "[5,8],[1,3]",
    };
    const auto all = profiles(kPi);
    REQUIRE(all.size() == expected.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].step == static_cast<int>(i + 1));
        CHECK(format_profile(all[i]) == expected[i]);
        CHECK(all[i].cardinality() == static_cast<int>(i + 1));
    }
    CHECK(all[2].intervals == std::vector<Interval>{{5, 6}, {2, 2}});
}

TEST_CASE("b_encode") {
    CHECK(b_encode(kPi) == SubexcedantSeq::parse("0 1 1 0 2 3 6 3"));
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> up, down, zeros(static_cast<std::size_t>(n), 0), stairs;
        for (int i = 1; i <= n; ++i) {
            up.push_back(i);
            down.push_back(n + 1 - i);
            stairs.push_back(i - 1);
        }
        CHECK(b_encode(Permutation::from(up)).entries() == zeros);
        CHECK(b_encode(Permutation::from(down)).entries() == stairs);
    }
}

TEST_CASE("trace text") {
    const std::string text = format_trace(kPi);
    CHECK(text.rfind("U_0=([0,8],0)\nU_1=([7,8],0),([0,5],1)\nX_1=[6,6]\n", 0) == 0);
    CHECK(text.find("X_7=[5,8],[1,3]\n") != std::string::npos);
    CHECK(format_trace(Permutation::parse("1")) == "U_0=([0,1],0)\n");
}

TEST_CASE("check_slice catches broken slices") {
    auto all = slices(kPi);
    CHECK_FALSE(check_slice(all[3], kPi).has_value());
    Slice bad = all[3];
    bad.intervals[0].label = 9;
    CHECK(check_slice(bad, kPi).has_value());
    bad = all[3];
    std::swap(bad.intervals[0], bad.intervals[1]);
    CHECK(check_slice(bad, kPi).has_value());
    bad = all[3];
    bad.intervals.back().lo = 1;
    CHECK(check_slice(bad, kPi).has_value());
    bad = all[3];
    bad.intervals[1].hi = 5;  // 5 is already used
    CHECK(check_slice(bad, kPi).has_value());
}

TEST_CASE("slice invariants and transport identities, exhaustive n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        CAPTURE(n);
        for (const auto& e : oracle::all_perms(n)) {
            const auto p = Permutation::from(e);
            const auto trace = trace_slices(p);
            REQUIRE(trace.slices.size() == static_cast<std::size_t>(n));
            for (const auto& u : trace.slices) {
                const auto problem = check_slice(u, p);
                REQUIRE_MESSAGE(!problem, problem.value_or(""));
            }
            // The geometric case at each step is the position class.
            const auto cls = lambda_perm(p);
            for (int i = 1; i <= n; ++i) {
                const auto& prev = trace.slices[static_cast<std::size_t>(i - 1)];
                const int v = p.at(i);
                for (const auto& iv : prev.intervals) {
                    if (!iv.contains(v)) continue;
                    // top of the interval -> bit 0, bottom -> bit 1
                    const int geometric = int(v == iv.hi) + 2 * int(v == iv.lo);
                    REQUIRE(geometric == to_int(cls[static_cast<std::size_t>(i - 1)]));
                }
            }
            // Profiles: cardinality = step and union = prefix values.
            for (int i = 1; i < n; ++i) {
                const auto prof = profile_of(trace.slices[static_cast<std::size_t>(i)], n);
                REQUIRE(prof.cardinality() == i);
                std::vector<char> in_profile(static_cast<std::size_t>(n) + 1, 0);
                for (std::size_t j = 0; j < prof.intervals.size(); ++j) {
                    const auto& x = prof.intervals[j];
                    if (j + 1 < prof.intervals.size()) REQUIRE(prof.intervals[j + 1].hi + 1 < x.lo);
                    for (int val = x.lo; val <= x.hi; ++val) in_profile[static_cast<std::size_t>(val)] = 1;
                }
                for (int j = 1; j <= i; ++j) REQUIRE(in_profile[static_cast<std::size_t>(p.at(j))]);
            }

            const auto& b = trace.code;
            REQUIRE(lambda_perm(p) == lambda_seq(b));
            REQUIRE(des_set(p.word()) == asc_set(b.word()));
            REQUIRE(ides_set(p) == row_set(b));
            REQUIRE(lrM_set(p.word()) == pos0_set(b));
            REQUIRE(lrm_set(p.word()) == max_set(b));
            REQUIRE(rlM_set(p.word()) == rlm_set(b.word()));
        }
    }
}
