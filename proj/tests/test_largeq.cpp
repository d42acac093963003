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

#include <random>
#include <set>

#include "weil/arith.hpp"
#include "weil/enumerate.hpp"
#include "weil/largeq.hpp"

using namespace weil;

namespace {

std::set<Int> orders_n2(long q) {
    std::set<Int> s;
    for (const auto& r : enum_weil(EnumTask{Int(q), 2, EnumMode::Any, {}})) s.insert(r.cert.order);
    return s;
}

double e2(const std::vector<double>& r) {
    double acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) acc += r[i] * r[j];
    return acc;
}

}  // namespace

TEST(BProfile, SmallValues) {
    // roots {2, -2} give -4, equal roots at 1 give 1, at 0 give 0
    EXPECT_EQ(b_max(2, QuadNum(2)), QuadNum(1));
    EXPECT_EQ(b_min(2, QuadNum(0)), QuadNum(-4));
    EXPECT_EQ(b_diff(2, QuadNum(0)), QuadNum(4));
    EXPECT_EQ(lambda1(2), QuadNum(2));
    // 4 - 2 sqrt 2 = 4 - sqrt 8
    EXPECT_EQ(lambda2(2), QuadNum(Rat(4), Rat(-1), Int(8)));
    EXPECT_EQ((QuadNum(4) - lambda2(2)) * (QuadNum(4) - lambda2(2)), QuadNum(8));
    for (int n = 2; n <= 10; ++n) {
        // a = -2n forces every root to 2
        EXPECT_EQ(b_min(n, QuadNum(-2 * n)), QuadNum(2 * n * (n - 1)));
        EXPECT_EQ(b_max(n, QuadNum(-2 * n)), QuadNum(2 * n * (n - 1)));
        EXPECT_EQ(b_diff(n, QuadNum(2 * n)), QuadNum(0));
        EXPECT_EQ(b_diff(n, lambda1(n)), QuadNum(1));
        EXPECT_EQ(b_diff(n, lambda2(n)), QuadNum(2));
    }
}

TEST(BProfile, DiffNearTheEnd) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 0; k <= 32; ++k) {
            const Rat t = make_rat(Int(k), Int(8));
            const QuadNum want(make_rat(Int(n - 1), Int(2 * n)) * t * t);
            EXPECT_EQ(b_diff(n, QuadNum(Rat(2 * n) - t)), want) << n << " " << t;
            EXPECT_EQ(b_diff(n, QuadNum(t - Rat(2 * n))), want) << n << " " << t;
        }
}

TEST(BProfile, BoundsRandomConfigurations) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 2; n <= 6; ++n)
        for (int trial = 0; trial < 2000; ++trial) {
            std::vector<double> r(static_cast<std::size_t>(n));
            double a = 0;
            for (double& x : r) a -= (x = u(rng));
            const QuadNum aq{Rat(a)};
            const double b = e2(r);
            EXPECT_LE(b_min(n, aq).a.get_d(), b + 1e-9);
            EXPECT_GE(b_max(n, aq).a.get_d(), b - 1e-9);
        }
    // the extremal configuration attains b_min
    for (int n = 2; n <= 6; ++n)
        for (int k = -40; k <= 40; ++k) {
            const double a = n * k / 20.0;
            const std::vector<double> r = b_min_roots(n, a);
            double s = 0;
            for (double x : r) {
                EXPECT_LE(std::fabs(x), 2 + 1e-12);
                s += x;
            }
            EXPECT_NEAR(s, -a, 1e-12);
            EXPECT_NEAR(e2(r), b_min(n, QuadNum(Rat(a))).a.get_d(), 1e-9);
        }
}

TEST(GapInterval, Q1009) {
    const GapInterval g = gap_interval(Int(1009), 2, Rat(3), make_rat(1, 8));
    // r = floor(3 sqrt 1009) = 95; B_max(3) = 9/4, B_min(3) = 2
    EXPECT_EQ(g.r, 95);
    EXPECT_EQ(g.lo, Rat(1020100 + 95 * 1010) + make_rat(19, 8) * 1009);
    EXPECT_EQ(g.hi, Rat(1020100 + 96 * 1010) + make_rat(15, 8) * 1009);
    ASSERT_FALSE(g.empty);
    EXPECT_EQ(g.first, 1118447);
    EXPECT_EQ(g.last, 1118951);
    EXPECT_EQ(gap_interval(Int(1009), 2, Rat(-3), make_rat(1, 8)).empty, false);
}

TEST(GapInterval, Preconditions) {
    EXPECT_THROW(gap_interval(Int(1009), 2, Rat(2), make_rat(1, 8)), std::invalid_argument);
    EXPECT_THROW(gap_interval(Int(1009), 2, Rat(4), make_rat(1, 8)), std::invalid_argument);
    EXPECT_THROW(gap_interval(Int(1009), 2, Rat(3), make_rat(3, 8)), std::invalid_argument);
    EXPECT_THROW(gap_interval(Int(1009), 2, Rat(3), Rat(0)), std::invalid_argument);
    // lambda1(3) = 6 - sqrt 3 = 4.27
    EXPECT_THROW(gap_interval(Int(1009), 3, make_rat(21, 5), make_rat(1, 8)), std::invalid_argument);
    EXPECT_NO_THROW(gap_interval(Int(1009), 3, make_rat(11, 2), make_rat(1, 8)));
}

TEST(GapInterval, SmallQStillAbsent) {
    // width at n = 2 is 1 + q (1 - B_diff - 2 eps) > 1, so q = 25 is not empty; the
    // enumerator confirms none of its integers is an order
    const GapInterval g = gap_interval(Int(25), 2, Rat(3), make_rat(1, 8));
    ASSERT_FALSE(g.empty);
    EXPECT_EQ(g.first, 1126);
    EXPECT_EQ(g.last, 1138);
    const std::set<Int> s = orders_n2(25);
    for (Int m = g.first; m <= g.last; ++m) EXPECT_EQ(s.count(m), 0u) << m;
}

TEST(GapInterval, Q1009AbsentFromEnumeration) {
    const GapInterval g = gap_interval(Int(1009), 2, Rat(3), make_rat(1, 8));
    const std::set<Int> s = orders_n2(1009);
    EXPECT_GT(s.size(), 100000u);
    for (Int m = g.first; m <= g.last; ++m) EXPECT_EQ(s.count(m), 0u) << m;
    // orders resume within q/2 on both sides
    int left = 0, right = 0;
    for (Int d = 1; d < 505; ++d) {
        left += static_cast<int>(s.count(g.first - d));
        right += static_cast<int>(s.count(g.last + d));
    }
    EXPECT_GT(left, 0);
    EXPECT_GT(right, 0);
}

TEST(ConstructLargeQ, CubeAndFourth) {
    const Int q(1009);
    for (int n : {3, 4}) {
        const Int m = pow_int(q, static_cast<unsigned long>(n));
        const LargeQResult r = construct_large_q(q, n, m);
        EXPECT_EQ(r.G.degree(), n);
        EXPECT_EQ(r.G.eval(Int(q + 1)), m);
        EXPECT_EQ(r.f.eval(Int(1)), m);
        EXPECT_EQ(r.certificate.hondaTate, HondaTate::VerifiedOrdinary);
        EXPECT_TRUE(r.certificate.rootsOnCircle);
        EXPECT_FALSE(mpz_divisible_p(r.G[0].get_mpz_t(), q.get_mpz_t()));
    }
}

TEST(ConstructLargeQ, PrimeN2Sampled) {
    const Int q(1009);
    // |m - q^2| <= 1.9 q^{3/2}
    const Int w = sqrt(Int(361 * q * q * q / 100));
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<long> u(-w.get_si(), w.get_si());
    int ok = 0;
    for (int i = 0; i < 50; ++i) {
        const Int m = q * q + u(rng);
        const LargeQResult r = construct_large_q(q, 2, m);
        EXPECT_EQ(r.G.eval(Int(q + 1)), m);
        EXPECT_EQ(r.certificate.order, m);
        EXPECT_NE(r.certificate.hondaTate, HondaTate::Failed);
        ok += r.certificate.rootsOnCircle;
    }
    EXPECT_EQ(ok, 50);
}

TEST(ConstructLargeQ, ErrorsAndDiagnostics) {
    const Int q(1009);
    EXPECT_THROW(construct_large_q(Int(9), 2, Int(81)), std::invalid_argument);
    EXPECT_THROW(construct_large_q(q, 3, q * q * q + 3 * q * q * 32), std::invalid_argument);
    LargeQOptions bad;
    bad.lambda = Rat(5);  // above lambda1(3)
    EXPECT_THROW(construct_large_q(q, 3, q * q * q, bad), std::invalid_argument);
    // q = 2 is far from large: rounding leaves the root range
    try {
        construct_large_q(Int(2), 4, Int(16));
        FAIL() << "expected a diagnosed failure";
    } catch (const ConstructionFailed& e) {
        EXPECT_EQ(e.stage(), "root-containment");
    }
}

TEST(Eisenstein, Q9AgainstEnumeration) {
    const std::vector<Int> scan = eisenstein_scan(Int(9));
    const std::set<Int> s = orders_n2(9);
    ASSERT_FALSE(scan.empty());
    for (const Int& m : scan) EXPECT_EQ(s.count(m), 0u) << m;
    EXPECT_EQ(scan, (std::vector<Int>{Int(43), Int(163), Int(166)}));
    // 163 = 10^2 + 6*10 + 3, with x^2 + 6x + 3 Eisenstein at 3 and 6 in (lambda2, 4) * 3
    const EisensteinReport rep = eisenstein_obstruction(Int(9), Int(163));
    EXPECT_TRUE(rep.obstructed);
    EXPECT_EQ(rep.candidates, 1);
    EXPECT_EQ(*rep.onlyG, (IntPoly{Int(3), Int(6), Int(1)}));
    // 20 has the single candidate (x-5)(x-6), not Eisenstein, and is realized
    EXPECT_FALSE(eisenstein_obstruction(Int(9), Int(20)).obstructed);
    EXPECT_EQ(s.count(Int(20)), 1u);
}

TEST(Eisenstein, Vacuous) {
    for (long m = 1; m < 300; ++m) EXPECT_FALSE(eisenstein_obstruction(Int(11), Int(m)).obstructed);
    EXPECT_TRUE(eisenstein_scan(Int(7)).empty());
    // c2 not divisible by p: 10^2 + 6*10 + 4
    EXPECT_FALSE(eisenstein_obstruction(Int(9), Int(164)).obstructed);
}
