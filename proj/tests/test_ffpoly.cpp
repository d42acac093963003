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

#include "weil/ffpoly.hpp"

using namespace weil;

TEST(FFPoly, Arithmetic) {
    const FFPoly a(5, {1, 2, 3}), b(5, {4, 0, 1});
    EXPECT_EQ(a + b, FFPoly(5, {0, 2, 4}));
    EXPECT_EQ((a * b) % b, FFPoly(5, {}));
    auto [q, r] = divmod(a * b + FFPoly(5, {2}), b);
    EXPECT_EQ(q, a);
    EXPECT_EQ(r, FFPoly(5, {2}));
    EXPECT_EQ(gcd(a * b, FFPoly(5, {-1, 1}) * b), b.monic());
    EXPECT_EQ(FFPoly(7, {1, 0, 3}).reciprocal(2, 2), FFPoly(7, {5, 0, 1}));  // x^2 + 12
    EXPECT_EQ(inv_mod(3, 7), 5);
    EXPECT_THROW(inv_mod(14, 7), std::domain_error);
}

TEST(FFPoly, FactorDegreeExamples) {
    // x^2 + 1 over F_3 is irreducible; over F_5 it splits
    EXPECT_TRUE(is_irreducible(FFPoly(3, {1, 0, 1})));
    EXPECT_EQ(factor_degrees(FFPoly(5, {1, 0, 1})), (std::vector<int>{1, 1}));
    // x^4 + x + 1 is irreducible over F_2
    EXPECT_TRUE(is_irreducible(FFPoly(2, {1, 1, 0, 0, 1})));
    // x^p - x splits into p linear factors
    std::vector<long> v(8, 0);
    v[1] = -1;
    v[7] = 1;
    EXPECT_EQ(factor_degrees(FFPoly(7, v)), std::vector<int>(7, 1));
    EXPECT_FALSE(is_squarefree(FFPoly(3, {1, 2, 1})));
    EXPECT_EQ(roots(FFPoly(7, {-2, 0, 1})), (std::vector<long>{3, 4}));
}

TEST(FFPoly, DegreesOfPlantedProducts) {
    // Irreducible factors are found by exhaustive search over monic polynomials of small degree.
    for (long p : {2L, 3L, 5L}) {
        std::vector<FFPoly> irr[4];
        for (int d = 1; d <= 3; ++d) {
            long total = 1;
            for (int i = 0; i < d; ++i) total *= p;
            for (long code = 0; code < total; ++code) {
                std::vector<long> c;
                long x = code;
                for (int i = 0; i < d; ++i, x /= p) c.push_back(x % p);
                c.push_back(1);
                FFPoly f(p, c);
                // degree <= 3 without roots is irreducible
                if (d == 1 || roots(f).empty()) irr[d].push_back(f);
            }
        }
        std::mt19937_64 rng(static_cast<unsigned long>(p));
        for (int trial = 0; trial < 200; ++trial) {
            FFPoly prod = FFPoly::constant(p, 1);
            std::vector<int> expect;
            const int parts = 1 + trial % 4;
            for (int k = 0; k < parts; ++k) {
                const int d = 1 + static_cast<int>(rng() % 3);
                prod = prod * irr[d][rng() % irr[d].size()];
                expect.push_back(d);
            }
            if (!is_squarefree(prod)) continue;
            std::sort(expect.begin(), expect.end());
            EXPECT_EQ(factor_degrees(prod), expect) << prod.str();
            EXPECT_EQ(is_irreducible(prod), parts == 1);
        }
    }
}
