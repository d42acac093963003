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

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "weil/cert.hpp"
#include "weil/ffpoly.hpp"
#include "weil/quad.hpp"

using namespace weil;

namespace {

IntPoly P(std::initializer_list<long> v) {
    std::vector<Int> c;
    for (long x : v) c.emplace_back(x);
    return IntPoly(std::move(c));
}

Certificate cert_of(const IntPoly& f, long q) { return certify(make_candidate(f, Int(q), "test")); }

}  // namespace

TEST(Hat, Examples) {
    EXPECT_EQ(hat(P({1}), 1, Int(2)), P({2, 0, 1}));
    EXPECT_EQ(hat(P({1, 1}), 1, Int(2)), P({2, 2, 1}));
    IntPoly f = hat(P({1}), 3, Int(3));
    EXPECT_EQ(f, P({27, 0, 0, 0, 0, 0, 1}));
    EXPECT_EQ(f.eval(Int(1)), 28);
    EXPECT_THROW(hat(P({1, 0, 1}), 1, Int(2)), std::invalid_argument);
}

TEST(Hat, AlwaysSymmetric) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + trial % 8;
        const long q = std::vector<long>{2, 3, 4, 5, 7, 8, 9}[static_cast<std::size_t>(trial % 7)];
        std::vector<Rat> v;
        const int deg = static_cast<int>(rng() % static_cast<unsigned>(2 * n));
        for (int i = 0; i <= deg; ++i) v.push_back(make_rat(c(rng), 1 + static_cast<long>(rng() % 2)));
        v[0] = 1;
        RatPoly h(v);
        RatPoly hh = hat(h, n, Int(q));
        EXPECT_EQ(hh.degree(), 2 * n);
        EXPECT_TRUE(hh.is_monic());
        EXPECT_EQ(hh.eval(Rat(1)), h.eval(Rat(1)) + pow_rat(Rat(q), n) * h.eval(make_rat(1, q)));
        // symmetric identity over Q
        for (int i = 0; i < n; ++i)
            EXPECT_EQ(hh[static_cast<std::size_t>(i)], pow_rat(Rat(q), n - i) * hh[static_cast<std::size_t>(2 * n - i)]);
        if (is_integral(hh)) EXPECT_TRUE(is_q_symmetric(to_int(hh), Int(q), n));
    }
}

TEST(Symmetry, Examples) {
    EXPECT_TRUE(is_q_symmetric(P({2, 2, 1}), Int(2), 1));
    EXPECT_FALSE(is_q_symmetric(P({1, 1, 1}), Int(2), 1));
    EXPECT_THROW(is_q_symmetric(P({1, 1, 1}), Int(2), 2), std::invalid_argument);
}

TEST(Companion, Examples) {
    EXPECT_EQ(to_companion(P({2, 2, 1}), Int(2)), P({2, 1}));
    EXPECT_EQ(to_companion(P({121, 0, 22, 0, 1}), Int(11)), P({0, 0, 1}));
    EXPECT_EQ(to_companion(P({2, 0, 1}), Int(2)), P({0, 1}));
    EXPECT_THROW(to_companion(P({1, 1, 1}), Int(2)), std::invalid_argument);
}

TEST(Companion, RoundTrip) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 7;
        const long q = 2 + trial % 11;
        std::vector<Int> g;
        for (int i = 0; i < n; ++i) g.emplace_back(c(rng));
        g.emplace_back(1);
        IntPoly G(g);
        IntPoly f = from_companion(G, Int(q));
        ASSERT_TRUE(is_q_symmetric(f, Int(q), n));
        ASSERT_EQ(to_companion(f, Int(q)), G);
    }
}

TEST(Circle, Examples) {
    EXPECT_TRUE(roots_on_circle(P({2, 2, 1}), Int(2)));
    // x^2 - 3x + 2 is not 2-symmetric in the required sense? 2 = 2 * 1, so it is; G = x - 3.
    EXPECT_EQ(to_companion(P({2, -3, 1}), Int(2)), P({-3, 1}));
    EXPECT_FALSE(roots_on_circle(P({2, -3, 1}), Int(2)));
    for (auto [q, n] : std::vector<std::pair<long, int>>{{2, 3}, {3, 2}, {5, 4}}) {
        std::vector<Int> v(static_cast<std::size_t>(2 * n) + 1, Int(0));
        v[0] = pow_int(Int(q), static_cast<unsigned long>(n));
        v[static_cast<std::size_t>(n)] = -1;
        v.back() = 1;
        IntPoly f(v);
        EXPECT_TRUE(roots_on_circle(f, Int(q))) << q << ' ' << n;
        EXPECT_TRUE(oracle::on_circle(f, static_cast<double>(q)));
    }
}

TEST(Circle, MultipleRootsAndEndpoints) {
    // (x^2 + 2)^2: double roots on the circle; G = x^2
    IntPoly f = P({2, 0, 1}) * P({2, 0, 1});
    EXPECT_TRUE(roots_on_circle(f, Int(2)));
    EXPECT_FALSE(cert_of(f, 2).squarefree);
    // (x - 2)^2 over q = 4: G = x - 4 has its root at the endpoint 2 sqrt 4
    EXPECT_TRUE(roots_on_circle(P({4, -4, 1}), Int(4)));
    // (x^2 - 2)^2 over q = 2: G = x^2 - 8 with roots at +-2 sqrt 2
    IntPoly g = P({-2, 0, 1}) * P({-2, 0, 1});
    EXPECT_EQ(to_companion(g, Int(2)), P({-8, 0, 1}));
    EXPECT_TRUE(roots_on_circle(g, Int(2)));
    EXPECT_FALSE(cert_of(g, 2).squarefree);
}

TEST(Circle, AgreesWithFloatingOracle) {
    std::mt19937_64 rng(17);
    int on = 0, off = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const long q = std::vector<long>{2, 3, 4, 5, 7, 9, 11, 13, 16, 25}[static_cast<std::size_t>(trial % 10)];
        const int n = 1 + trial % 6;
        IntPoly g = oracle::planted_companion(rng, q, n, 0.15);
        IntPoly f = from_companion(g, Int(q));
        const bool exact = roots_on_circle(f, Int(q));
        ASSERT_EQ(exact, oracle::on_circle(f, static_cast<double>(q))) << f.str() << " q=" << q;
        (exact ? on : off)++;
    }
    EXPECT_GT(on, 100);
    EXPECT_GT(off, 100);
}

TEST(Certify, Examples) {
    Certificate a = cert_of(P({2, 2, 1}), 2);
    EXPECT_TRUE(a.qSymmetric && a.rootsOnCircle);
    EXPECT_FALSE(a.ordinary);
    EXPECT_EQ(a.hondaTate, HondaTate::VerifiedPrimeQ);
    EXPECT_EQ(a.pRank, 0);
    EXPECT_EQ(a.order, 5);

    Certificate b = cert_of(P({2, -1, 1}), 2);
    EXPECT_TRUE(b.ordinary);
    EXPECT_EQ(b.hondaTate, HondaTate::VerifiedOrdinary);
    EXPECT_EQ(b.pRank, 1);
    EXPECT_EQ(b.order, 2);

    Certificate c = cert_of(P({121, 0, 22, 0, 1}), 11);
    EXPECT_FALSE(c.ordinary);
    EXPECT_EQ(c.hondaTate, HondaTate::VerifiedPrimeQ);
    EXPECT_EQ(c.order, 144);

    EXPECT_EQ(certify(make_candidate(P({2, 2, 1}), Int(2), "t"), true).hondaTate, HondaTate::Failed);
    EXPECT_EQ(cert_of(P({2, -3, 1}), 2).hondaTate, HondaTate::Failed);
    EXPECT_EQ(cert_of(P({1, 1, 1}), 2).hondaTate, HondaTate::Failed);
}

TEST(Certify, NewtonPolygonVerdicts) {
    // q = 4: (x - 2)^2 is supersingular, multiplicity 2 clears the half slope
    Certificate s = cert_of(P({4, -4, 1}), 4);
    EXPECT_EQ(s.hondaTate, HondaTate::VerifiedNewton);
    EXPECT_EQ(s.pRank, 0);
    // x^2 + 4 over q = 4: residual (y + 1)^2 mod 2; refining around 2 shows x^2 + 4 is Q_2-irreducible,
    // so the degree-2 factor carries valuation 1 = v(q) / 2 * 2
    EXPECT_EQ(cert_of(P({4, 0, 1}), 4).hondaTate, HondaTate::VerifiedNewton);
    // G = x^2 - 2 over q = 4 is Eisenstein at 2: slopes 1/4 and 3/4 with length 2
    IntPoly f = from_companion(P({-2, 0, 1}), Int(4));
    EXPECT_EQ(f, P({16, 0, 6, 0, 1}));
    auto segs = newton_polygon(f, Int(2));
    ASSERT_EQ(segs.size(), 2U);
    EXPECT_EQ(segs[0].slope, make_rat(3, 2));
    EXPECT_EQ(segs[1].slope, make_rat(1, 2));
    EXPECT_EQ(cert_of(f, 4).hondaTate, HondaTate::Failed);
    // x^4 + 4x^2 + 16 over q = 4: residual (y^2 + y + 1)^2 mod 2 repeats a non-linear factor, which
    // integer translation cannot separate
    EXPECT_EQ(cert_of(P({16, 0, 4, 0, 1}), 4).hondaTate, HondaTate::Unknown);
    // mixed p-rank: (x^2 - x + 4)(x^2 + 4) over q = 4 has one unit root
    IntPoly m = P({4, -1, 1}) * P({4, 0, 1});
    EXPECT_EQ(cert_of(m, 4).pRank, 1);
}

TEST(Certify, PRankMatchesOrdinarity) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const long q = std::vector<long>{2, 3, 4, 5, 8, 9}[static_cast<std::size_t>(trial % 6)];
        const int n = 1 + trial % 4;
        IntPoly f = from_companion(oracle::planted_companion(rng, q, n, 0.0), Int(q));
        Certificate c = cert_of(f, q);
        if (!c.rootsOnCircle) continue;
        EXPECT_EQ(c.pRank == n, c.ordinary);
        EXPECT_EQ(c.order, f.eval(Int(1)));
        if (c.hondaTate == HondaTate::VerifiedOrdinary) EXPECT_TRUE(c.ordinary);
    }
}

TEST(IntervalReport, Examples) {
    IntervalReport r2 = interval_report(Int(2), 1);
    // mpmath at 30 digits: 1.508790206090644238..., 3.546455444684995244...
    EXPECT_NEAR(r2.attainedLo.to_double(), 1.5087902060906442, 1e-12);
    EXPECT_NEAR(r2.attainedHi.to_double(), 3.5464554446849952, 1e-12);
    EXPECT_LT(r2.attainedLo.width(), make_rat(1, 10000));
    EXPECT_LT(r2.attainedHi.width(), make_rat(1, 10000));
    IntervalReport r4 = interval_report(Int(4), 5);
    EXPECT_EQ(r4.hasseWeilLo, RatInterval(1));
    EXPECT_EQ(r4.hasseWeilHi, RatInterval(Int(59049)));
    IntervalReport r7 = interval_report(Int(7), 2);
    EXPECT_EQ(r7.outerHi, 13);
    EXPECT_EQ(r7.outerLo, 7 - 6 + 2);
    EXPECT_EQ(r7.innerLo, 7 - 5 + 3);
    // nesting: attained inside outer inside Weil, per dimension
    for (long q : {2L, 3L, 5L, 7L, 9L, 16L, 101L}) {
        IntervalReport r = interval_report(Int(q), 1);
        EXPECT_LT(r.weilLo.hi, r.outerLo);
        EXPECT_LT(r.outerLo, r.attainedLo.lo);
        EXPECT_LT(r.attainedHi.hi, r.outerHi);
        EXPECT_LT(r.outerHi, r.weilHi.lo);
    }
}

TEST(Newton, PlantedQpFactorDegrees) {
    // Products of factors with known Q_p-factorization: Eisenstein (ramified, degree d), lifts of
    // irreducibles mod p scaled by p^a (unramified), and close pairs around a common center.
    std::mt19937_64 rng(23);
    int cases = 0, decided = 0;
    for (long p : {2L, 3L, 5L}) {
        const Int P(p);
        for (int trial = 0; trial < 60; ++trial) {
            std::vector<int> expect;
            IntPoly f{Int(1)};
            std::uniform_int_distribution<int> kind(0, 4), small(0, static_cast<int>(p) - 1);
            const int parts = 1 + trial % 3;
            for (int k = 0; k < parts; ++k) {
                const Int c = Int(1 + small(rng) % (p - 1)) + P * (10 * trial + k);  // unit center, distinct per part
                switch (kind(rng)) {
                    case 0:  // x - c
                        f = f * IntPoly{-c, Int(1)};
                        expect.push_back(1);
                        break;
                    case 1:  // Eisenstein x^2 + p x + p(1 + p)
                        f = f * IntPoly{P * (1 + P), P, Int(1)};
                        expect.push_back(2);
                        break;
                    case 2: {  // (x - c)^2 - p: ramified, degree 2, clustered at c
                        f = f * IntPoly{c * c - P, -2 * c, Int(1)};
                        expect.push_back(2);
                        break;
                    }
                    case 3: {  // (x - c)^2 - p^2 u with u a non-square unit: unramified degree 2 for odd p
                        if (p == 2) {
                            f = f * IntPoly{c * c + 4 * 3, -2 * c, Int(1)};  // (x-c)^2 + 12: 2^2 * (-3), -3 = 5 mod 8 non-square
                            expect.push_back(2);
                            break;
                        }
                        long u = 1;
                        while (pow_mod(u, static_cast<unsigned long>((p - 1) / 2), p) == 1) ++u;
                        f = f * IntPoly{c * c - P * P * u, -2 * c, Int(1)};
                        expect.push_back(2);
                        break;
                    }
                    default: {  // (x - c)(x - c - p^3): two linear factors in one cluster
                        const Int d = c + P * P * P;
                        f = f * IntPoly{c * d, -(c + d), Int(1)};
                        expect.push_back(1);
                        expect.push_back(1);
                        break;
                    }
                }
            }
            if (!is_squarefree(f)) continue;
            std::vector<int> got;
            bool determined = true;
            for (const auto& s : newton_polygon(f, P)) {
                const auto d = segment_factor_degrees(f, s, P);
                determined = determined && !d.empty();
                got.insert(got.end(), d.begin(), d.end());
            }
            ++cases;
            if (!determined) continue;  // e.g. two ramified factors sharing slope and residue
            ++decided;
            std::sort(got.begin(), got.end());
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(got, expect) << f.str() << " p=" << p;
        }
    }
    EXPECT_GE(decided * 5, cases * 4) << decided << " of " << cases;
}

// Wider range than above: q up to 49 and n up to 7 produce roots at +-2 sqrt q and clusters,
// where eigenvalues of f itself lose accuracy; the oracle then works through G.
TEST(Circle, AgreesWithCompanionOracle) {
    std::mt19937_64 rng(29);
    const std::vector<long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49};
    int on = 0, off = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const long q = qs[static_cast<std::size_t>(trial) % qs.size()];
        const int n = 1 + trial % 7;
        const IntPoly g = oracle::planted_companion(rng, q, n, 0.15);
        const bool exact = roots_on_circle(from_companion(g, Int(q)), Int(q));
        ASSERT_EQ(exact, oracle::on_circle_via_companion(g, static_cast<double>(q))) << g.str() << " q=" << q;
        (exact ? on : off)++;
    }
    EXPECT_GT(on, 300);
    EXPECT_GT(off, 300);
}
