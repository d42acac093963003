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

#include "weil/series.hpp"

#include <stdexcept>

namespace weil {

Rat ExponentSeries::coeff(int k) const {
    Rat r = 0;
    if (k >= 0 && static_cast<std::size_t>(k) < poly.size()) r += poly[static_cast<std::size_t>(k)];
    if (geom != 0 && k >= geomStart && k >= 1) r += geom;
    return r;
}

Rat ExponentSeries::value(const Rat& x) const {
    if (x < 0 || x >= 1) throw std::domain_error("ExponentSeries::value: x outside [0,1)");
    Rat r = RatPoly(poly).eval(x);
    if (geom != 0) r += geom * pow_rat(x, std::max(geomStart, 1)) / (1 - x);
    return r;
}

ExponentSeries ExponentSeries::majorant() const {
    ExponentSeries m;
    m.poly.reserve(poly.size());
    for (const auto& a : poly) m.poly.push_back(abs(a));
    m.geom = abs(geom);
    m.geomStart = geomStart;
    return m;
}

std::vector<Rat> exp_coefficients(const std::vector<Rat>& a, int n) {
    ExponentSeries e;
    e.poly = a;
    return series_exp(e, n).coeffs;
}

TruncSeries series_exp(const ExponentSeries& e, int n) {
    if (n < 0) throw std::invalid_argument("series_exp: negative order");
    if (e.coeff(0) != 0) throw std::invalid_argument("series_exp: exponent must vanish at 0");
    auto expand = [n](const ExponentSeries& ex) {
        // k J_k = sum_{j=1..k} j e_j J_{k-j}
        std::vector<Rat> ec(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) ec[static_cast<std::size_t>(k)] = ex.coeff(k);
        std::vector<Rat> j(static_cast<std::size_t>(n) + 1, Rat(0));
        j[0] = 1;
        for (int k = 1; k <= n; ++k) {
            Rat s = 0;
            for (int i = 1; i <= k; ++i) {
                const auto& ei = ec[static_cast<std::size_t>(i)];
                if (ei != 0) s += Rat(i) * ei * j[static_cast<std::size_t>(k - i)];
            }
            j[static_cast<std::size_t>(k)] = s / k;
        }
        return j;
    };
    TruncSeries t;
    t.exponent = e;
    t.coeffs = expand(e);
    const ExponentSeries m = e.majorant();
    bool same = true;
    for (int k = 0; k <= n; ++k) same = same && m.coeff(k) == e.coeff(k);
    t.majCoeffs = same && m.geom == e.geom ? t.coeffs : expand(m);
    return t;
}

Rat TruncSeries::partial_sum(const Rat& x) const { return RatPoly(coeffs).eval(x); }

Rat TruncSeries::tail_bound(const RatInterval& x, long bits) const {
    if (x.lo < 0 || x.hi >= 1) throw std::domain_error("tail_bound: evaluation point outside [0,1)");
    // Termwise: |c_i| <= M_i where M = exp(|e|); sum_{i>n} M_i x^i is increasing in x.
    const ExponentSeries m = exponent.majorant();
    const Rat top = exp_enclosure(m.value(x.hi), bits).hi;
    const Rat head = RatPoly(majCoeffs).eval(x.hi);
    const Rat t = top - head;
    return t > 0 ? t : Rat(0);
}

RatInterval TruncSeries::value(const RatInterval& x, long bits) const {
    if (x.lo < 0 || x.hi >= 1) throw std::domain_error("TruncSeries::value: x outside [0,1)");
    return {exp_enclosure(exponent.value(x.lo), bits).lo, exp_enclosure(exponent.value(x.hi), bits).hi};
}

}  // namespace weil
