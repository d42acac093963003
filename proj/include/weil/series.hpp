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

#ifndef WEIL_SERIES_HPP
#define WEIL_SERIES_HPP

#include <vector>

#include "weil/interval.hpp"
#include "weil/poly.hpp"

namespace weil {

// e(z) = sum_k poly[k] z^k + geom * sum_{k >= geomStart} z^k, with poly[0] == 0.
struct ExponentSeries {
    std::vector<Rat> poly;
    Rat geom = 0;
    int geomStart = 0;

    Rat coeff(int k) const;
    // Closed form at 0 <= x < 1.
    Rat value(const Rat& x) const;
    ExponentSeries majorant() const;
};

// Exact coefficients of exp(e(z)) through degree n, with a certified bound on the tail.
class TruncSeries {
   public:
    ExponentSeries exponent;
    std::vector<Rat> coeffs;   // degrees 0..n
    std::vector<Rat> majCoeffs;  // coefficients of exp(|e|)(z), dominate |coeffs| termwise

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    RatPoly truncation() const { return RatPoly(coeffs); }
    Rat partial_sum(const Rat& x) const;
    // Upper bound on sum_{i>n} |c_i| x^i, for every x in the interval; requires 0 <= x.lo, x.hi < 1.
    Rat tail_bound(const RatInterval& x, long bits = 96) const;
    // Enclosure of exp(e(x)) itself, for series with nonnegative coefficients.
    RatInterval value(const RatInterval& x, long bits = 96) const;
};

TruncSeries series_exp(const ExponentSeries& e, int n);

// Coefficients of exp(a(z)) through degree n for a polynomial exponent with a(0) = 0.
std::vector<Rat> exp_coefficients(const std::vector<Rat>& a, int n);

}  // namespace weil

#endif
