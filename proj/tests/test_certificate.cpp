#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "trigzero/certificate.hpp"

using namespace trigzero;

namespace {

std::vector<double> dyadic_vector(std::mt19937_64& rng, int K, double p_zero) {
    std::vector<double> v(static_cast<std::size_t>(K + 1));
    do {
        for (auto& x : v) x = oracle::dyadic_entry(rng, p_zero);
    } while (oracle::abs_sum(v) == 0.0);
    return v;
}

int z_exact(const CoeffVector& a) { return count_cosine_exact(a).count; }

/// Calls f on every vector in {lo..hi}^{len}.
template <class F>
void for_each_integer_vector(int len, int lo, int hi, F&& f) {
    std::vector<int> digits(static_cast<std::size_t>(len), lo);
    while (true) {
        f(digits);
        std::size_t i = 0;
        while (i < digits.size() && digits[i] == hi) digits[i++] = lo;
        if (i == digits.size()) return;
        ++digits[i];
    }
}

}  // namespace

TEST(GridValues, Examples) {
    auto g = grid_values(CoeffVector::parse("0,1"));
    EXPECT_EQ(g.K, 1);
    EXPECT_EQ(g.lambda, (std::vector<double>{2, 2, 2}));
    EXPECT_EQ(g.samples, (std::vector<double>{1, -1, 1}));
    EXPECT_EQ(grid_values(CoeffVector::parse("1,0")).lambda, (std::vector<double>{2, -2, 2}));
    EXPECT_EQ(grid_values(CoeffVector::parse("1,1")).lambda, (std::vector<double>{4, 0, 4}));
    EXPECT_THROW(grid_values(CoeffVector::parse("3")), InvalidSpec);

    auto g3 = grid_values(CoeffVector::parse("1,2,3,4"));
    ASSERT_EQ(g3.theta.size(), 7u);
    // j = 0, 3, 6 hit multiples of pi and are exact; the rest are not quarter points
    EXPECT_TRUE(g3.exact[0] && g3.exact[3] && g3.exact[6]);
    EXPECT_FALSE(g3.exact[1]);
}

TEST(GridValues, MatchReversedCosineSum) {
    // lambda_j = 2 C_rev(a)(theta_j), computed term by term in long double
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> Kd(1, 50);
    for (int trial = 0; trial < 500; ++trial) {
        const int K = Kd(rng);
        auto v = oracle::normal_vector(rng, static_cast<std::size_t>(K + 1));
        std::vector<double> rev(v.rbegin(), v.rend());
        auto g = grid_values(CoeffVector::from_doubles(v));
        ASSERT_EQ(g.lambda.size(), static_cast<std::size_t>(2 * K + 1));
        for (int j = 0; j <= 2 * K; ++j) {
            const double theta = std::numbers::pi * j / K;
            const double expect = 2.0 * static_cast<double>(oracle::cos_sum(rev, theta));
            EXPECT_NEAR(g.lambda[j], expect, 1e-10 * oracle::abs_sum(v)) << K << " " << j;
        }
    }
}

TEST(SignChanges, Examples) {
    EXPECT_EQ(paper_sign_changes({1.0, -1.0, 1.0}), 2);
    EXPECT_EQ(paper_sign_changes({1.0, 0.0, 1.0}), 2);
    EXPECT_EQ(paper_sign_changes({1.0, 2.0}), 0);
    EXPECT_THROW(paper_sign_changes(std::vector<double>{1.0}), InvalidSpec);

    EXPECT_EQ(robust_sign_changes({1.0, 0.0, 1.0}), 1);
    EXPECT_EQ(robust_sign_changes({1.0, 0.0, -1.0}), 1);
    EXPECT_EQ(robust_sign_changes({1.0, -1.0, 1.0, -1.0}), 3);
    EXPECT_EQ(robust_sign_changes({1.0, 0.0, 0.0, -1.0}), 2);
    // the first sample is the same point as the last one
    EXPECT_EQ(robust_sign_changes({0.0, 1.0, 0.0}), 1);
    EXPECT_THROW(robust_sign_changes({0.0, 0.0}), AllZero);
}

TEST(SignChanges, AlternationIdentityExhaustive) {
    for (int K = 1; K <= 3; ++K) {
        for_each_integer_vector(2 * K + 1, -1, 1, [&](const std::vector<int>& d) {
            std::vector<double> v(d.begin(), d.end());
            EXPECT_TRUE(alternation_identity_holds(std::span<const double>(v)));
        });
    }
}

TEST(SignChanges, AlternationIdentityRandom) {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> len(2, 40);
    std::bernoulli_distribution zero(0.15);
    std::normal_distribution<double> nd;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<double> v(static_cast<std::size_t>(len(rng)));
        for (auto& x : v) x = zero(rng) ? 0.0 : nd(rng);
        EXPECT_TRUE(alternation_identity_holds(std::span<const double>(v)));
    }
}

TEST(SignChanges, RobustNeverExceedsZerosOfSampledFunction) {
    // sample sin(k x) on a grid that hits its zeros exactly in some cases
    for (int k = 1; k <= 6; ++k)
        for (int n : {2 * k, 4 * k, 7 * k + 1}) {
            std::vector<double> v;
            for (int j = 0; j <= n; ++j) {
                int q = 2 * k * j;  // k x / pi * n, with x = 2 pi j / n
                v.push_back(q % n == 0 ? 0.0 : std::sin(2 * std::numbers::pi * k * j / n));
            }
            if (std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) continue;
            EXPECT_LE(robust_sign_changes(v), 2 * k) << k << " " << n;
        }
}

TEST(PairBound, Examples) {
    auto b = certified_pair_bound(CoeffVector::parse("0,1"));
    EXPECT_EQ(b.lb_forward, 2);
    EXPECT_EQ(b.lb_reverse, 0);
    EXPECT_THROW(certified_pair_bound(CoeffVector::parse("0,0")), IdenticallyZero);
}

TEST(PairBound, Soundness) {
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<int> Kd(1, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        auto a = CoeffVector::from_doubles(dyadic_vector(rng, Kd(rng), 0.2));
        auto b = certified_pair_bound(a);
        EXPECT_LE(b.lb_forward, z_exact(a)) << a.to_string();
        auto r = reverse(a);
        if (!r.is_zero()) EXPECT_LE(b.lb_reverse, z_exact(r)) << a.to_string();
    }
}

TEST(Proposition, Examples) {
    auto r = verify_proposition(CoeffVector::parse("2,1"));
    EXPECT_EQ(r.z_forward, 0);
    EXPECT_EQ(r.z_reverse, 2);
    EXPECT_EQ(r.sum, 2);
    EXPECT_EQ(r.bound, 2);
    EXPECT_TRUE(r.holds);
    auto p = verify_proposition(CoeffVector::parse("1,2,3,4,5"));
    EXPECT_TRUE(p.holds);
    EXPECT_EQ(p.bound, 8);
    EXPECT_THROW(verify_proposition(CoeffVector::parse("0,0")), IdenticallyZero);
}

TEST(Proposition, ExhaustiveSmallIntegerVectors) {
    for (int K = 1; K <= 3; ++K) {
        for_each_integer_vector(K + 1, -2, 2, [&](const std::vector<int>& d) {
            std::vector<double> v(d.begin(), d.end());
            if (oracle::abs_sum(v) == 0.0) return;
            auto r = verify_proposition(CoeffVector::from_doubles(v));
            EXPECT_TRUE(r.holds) << CoeffVector::from_doubles(v).to_string();
        });
    }
}

TEST(Proposition, NumericPathAgrees) {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = CoeffVector::from_doubles(oracle::normal_vector(rng, 9));
        auto e = verify_proposition(a);
        auto n = verify_proposition(a, Method::numeric());
        EXPECT_EQ(e.z_forward, n.z_forward);
        EXPECT_EQ(e.z_reverse, n.z_reverse);
        EXPECT_TRUE(n.holds);
    }
}

TEST(Corollary, LeadingZerosForceZeros) {
    std::mt19937_64 rng(79);
    std::uniform_int_distribution<int> Ld(1, 4);
    for (int trial = 0; trial < 1000; ++trial) {
        const int L = Ld(rng);
        std::uniform_int_distribution<int> Kd(2 * L, 10);
        const int K = Kd(rng);
        std::vector<double> v;
        do {
            v = dyadic_vector(rng, K, 0.2);
            for (int k = 0; k <= L; ++k) v[k] = 0.0;
        } while (oracle::abs_sum(v) == 0.0);
        EXPECT_GE(z_exact(CoeffVector::from_doubles(v)), 2 * L);
    }
}

TEST(VerifyGeneral, Examples) {
    auto r = verify_general(CoeffVector::parse("0,1"), 1.0);
    EXPECT_EQ(r.z_forward, 2);
    EXPECT_EQ(r.z_reverse, 0);
    EXPECT_EQ(r.sum, 2);
    EXPECT_TRUE(r.holds);

    // X = inf: the reverse of (0,1) is the constant 1 whose sine part vanishes
    auto d = verify_general(CoeffVector::parse("0,1"), INFINITY);
    EXPECT_TRUE(d.degenerate_reverse);
    EXPECT_FALSE(d.degenerate_forward);
    EXPECT_EQ(d.z_forward, 2);
    EXPECT_EQ(d.z_reverse, -1);
    EXPECT_FALSE(d.holds);

    auto s = verify_general(CoeffVector::parse("0,1,1"), INFINITY);
    EXPECT_FALSE(s.degenerate());
    EXPECT_TRUE(s.holds);
}

TEST(VerifyGeneral, ZeroPhaseMatchesProposition) {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 100; ++trial) {
        auto a = CoeffVector::from_doubles(oracle::normal_vector(rng, 7));
        auto g = verify_general(a, 0.0);
        auto p = verify_proposition(a, Method::numeric());
        EXPECT_EQ(g.z_forward, p.z_forward);
        EXPECT_EQ(g.z_reverse, p.z_reverse);
        EXPECT_EQ(g.holds, p.holds);
    }
}

TEST(VerifyGeneral, HoldsForRandomPhases) {
    std::mt19937_64 rng(89);
    std::uniform_real_distribution<double> Xd(-4.0, 4.0);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = CoeffVector::from_doubles(oracle::normal_vector(rng, 7));
        auto r = verify_general(a, Xd(rng));
        EXPECT_TRUE(r.holds) << a.to_string();
    }
}
