/*
   Copyright 2026 The weilfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include "weil/chebyshev.hpp"

namespace weil {
namespace {

TEST(Chebyshev, Recurrence) {
    EXPECT_EQ(chebyshev_T(0), IntPoly({Int(1)}));
    EXPECT_EQ(chebyshev_T(2), IntPoly({Int(-1), Int(0), Int(2)}));
    EXPECT_EQ(chebyshev_T(3), IntPoly({Int(0), Int(-3), Int(0), Int(4)}));
    // T_k(cos t) = cos(k t) at t = pi/3: T_6(1/2) = cos(2 pi) = 1
    EXPECT_EQ(chebyshev_T(6).eval(make_rat(1, 2)), 1);
}

TEST(Chebyshev, AttainedInterval) {
    const auto [lo, hi] = attained_interval(Int(2));
    // tau(5/2 - sqrt 2) = 1.50879020609..., tau(1/2 + sqrt 2) = 3.54645544468... (mpmath)
    EXPECT_NEAR(lo.lo.get_d(), 1.50879020609, 1e-9);
    EXPECT_NEAR(hi.lo.get_d(), 3.54645544468, 1e-9);
    EXPECT_LT(hi.hi - lo.lo, Rat(3));
}

// d = 54, eps = 1/10: mu ~ 1.4765e-4 against q^{-d/4} ~ 8.632e-5 (mpmath, 4000-point circle scan)
TEST(Chebyshev, SeedInvariants) {
    const ChebySeed s = build_P(Int(2), 54, make_rat(1, 10));
    EXPECT_TRUE(s.unitAtZero);
    EXPECT_TRUE(s.positiveOnR);
    EXPECT_TRUE(s.disk.nonvanishing);
    EXPECT_TRUE(s.diskBound);
    EXPECT_TRUE(s.certified());
    EXPECT_NEAR(s.disk.mu.get_d(), 1.4765e-4, 2e-7);
    EXPECT_EQ(s.P.degree(), 54);
    // endpoints, same oracle
    EXPECT_NEAR(s.leftEnd.lo.get_d(), 1.537631309, 1e-8);
    EXPECT_NEAR(s.rightEnd.lo.get_d(), 3.310940969, 1e-8);
    EXPECT_THROW(build_P(Int(2), 53, make_rat(1, 10)), std::invalid_argument);
    EXPECT_THROW(build_P(Int(2), 54, Rat(1)), std::invalid_argument);
}

TEST(Chebyshev, EndpointConvergence) {
    const auto [lo, hi] = attained_interval(Int(2));
    const ChebySeed s = build_P(Int(2), 200, make_rat(1, 1000), false);
    EXPECT_TRUE(s.unitAtZero);
    EXPECT_LT(abs(s.leftEnd.lo - lo.lo), make_rat(1, 20));
    EXPECT_LT(abs(s.rightEnd.lo - hi.lo), make_rat(1, 20));
    // the d = 54 pair lies further inside
    const ChebySeed s54 = build_P(Int(2), 54, make_rat(1, 1000), false);
    EXPECT_GT(s54.leftEnd.lo, s.leftEnd.hi);
    EXPECT_GT(s.leftEnd.lo, lo.hi);
    EXPECT_LT(s.rightEnd.hi, hi.lo);
}

TEST(Chebyshev, ShapeAndQChoice) {
    EXPECT_EQ(ledger_shape(Int(2), 60, 54).ell, 33);
    EXPECT_EQ(ledger_shape(Int(2), 60, 54).b, 1);
    EXPECT_EQ(ledger_shape(Int(2), 90, 54).ell, 36);
    EXPECT_EQ(ledger_shape(Int(2), 90, 54).b, 2);
    EXPECT_THROW(ledger_shape(Int(2), 20, 54), std::invalid_argument);

    const ChebySeed s = build_P(Int(2), 54, make_rat(1, 10), false);
    // planted s = 0: q^n P(0) + P(0) = q^n + 1
    const Int qn = pow_int(Int(2), 60);
    const QChoice c0 = choose_Q(s, 60, qn + 1, 1);
    EXPECT_LE(c0.s.lo, 0);
    EXPECT_GE(c0.s.hi, 0);
    // planted s = 1/2
    const RatInterval v = RatInterval(Rat(qn)) * s.P.eval(QuadNum(make_rat(1, 4))).enclose(200) +
                          s.P.eval(QuadNum(make_rat(1, 2))).enclose(200);
    const QChoice c1 = choose_Q(s, 60, floor_rat(v.lo), 1);
    EXPECT_LT(abs(c1.sMid - make_rat(1, 2)), make_rat(1, 100000000));
    EXPECT_THROW(choose_Q(s, 60, Int(1), 1), ConstructionFailed);
}

// The analytic hypotheses need d >= 54; with d = 54 the first stages overshoot at desk-scale n.
TEST(Ledger, StageDiagnosticAtD54) {
    const ChebySeed s = build_P(Int(2), 54, make_rat(1, 10), false);
    const Int m = pow_int(Int(2), 60);
    const auto r = run_ledger(s, 60, m, ledger_target(assemble_target(Int(2), 60, m)));
    EXPECT_FALSE(r.success);
    EXPECT_EQ(r.failedStage.rfind("c:", 0), 0u) << r.failedStage;
    ASSERT_EQ(r.a.size(), 53u);
    for (double a : r.a) {
        EXPECT_GE(a, 0);
        EXPECT_LT(a, 4526522.0 / r.shape.b);
    }
    EXPECT_GT(r.cPrime, 1e20);
}

// Small d keeps c' = O(1); the ledger then runs to the end and the result certifies.
TEST(Ledger, RunsThroughWithSmallDegreeSeed) {
    const ChebySeed s = build_P(Int(2), 4, make_rat(1, 10), false);
    const Int m = pow_int(Int(2), 40);
    const auto r = run_ledger(s, 40, m, trivial_target(40));
    ASSERT_TRUE(r.success) << r.failedStage;
    EXPECT_EQ(r.fHat.eval(Int(1)), m);
    EXPECT_TRUE(is_q_symmetric(r.fHat, Int(2), 40));
    EXPECT_TRUE(r.certificate.rootsOnCircle);
    EXPECT_LT(r.maxDrift, 1e-50);
    EXPECT_GE(r.c, 0);
    EXPECT_LE(r.c, r.cPrime * (1 + 1e-12));
    EXPECT_GT(r.qTildeAtOne, 0);
    EXPECT_GT(r.qTildeAtInvQ, 0);
    for (double v : r.r) {
        EXPECT_GE(v, 0);
        EXPECT_LT(v, 1);
    }
    for (double v : r.s) EXPECT_GE(v, 0);
}

TEST(Ledger, EnforcesCongruences) {
    const ChebySeed s = build_P(Int(2), 4, make_rat(1, 10), false);
    const int n = 100;
    // g = x^{2n} + x^{n+1} + 2^{n-1} x^{n-1} + 2^n mod 3, q-symmetric mod 3
    LedgerTarget t{Int(3), std::vector<Int>(2 * n + 1, Int(0))};
    t.g[2 * n] = 1;
    t.g[n + 1] = 1;
    t.g[n - 1] = pow_int(Int(2), n - 1) % 3;
    t.g[0] = pow_int(Int(2), n) % 3;
    const Int m = pow_int(Int(2), n) + 4;  // == g(1) mod 3
    const auto r = run_ledger(s, n, m, t);
    ASSERT_TRUE(r.success) << r.failedStage;
    EXPECT_TRUE(r.congruent);
    EXPECT_EQ(r.certificate.hondaTate, HondaTate::VerifiedOrdinary);
    for (int i = 0; i <= 2 * n; ++i) {
        Int diff = (r.fHat[static_cast<std::size_t>(i)] - t.g[static_cast<std::size_t>(i)]) % 3;
        EXPECT_EQ(diff, 0) << i;
    }
    EXPECT_EQ(r.fHat.eval(Int(1)), m);
}

}  // namespace
}  // namespace weil
