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

#include "weil/sturm.hpp"

#include <stdexcept>

namespace weil {

namespace {

// Positive rescaling of a rational polynomial into Z[x] with unit content; sign kept.
IntPoly scale_to_int(const RatPoly& p) {
    if (p.is_zero()) return {};
    Int l = 1;
    for (const auto& a : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Int> v;
    v.reserve(p.c.size());
    for (const auto& a : p.c) v.push_back(Int(a * l));
    return primitive(IntPoly(std::move(v)));
}

// Bound (a,b]: convert a nonsquarefree input once.
int count_half_open(const IntPoly& g, const QuadNum& a, const QuadNum& b) {
    if (g.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (!(a < b)) throw std::invalid_argument("sturm_count: empty interval");
    if (g.degree() == 0) return 0;
    const auto chain = sturm_chain(squarefree_part(g));
    return sign_variations(chain, a) - sign_variations(chain, b);
}

}  // namespace

std::vector<IntPoly> sturm_chain(const IntPoly& s) {
    std::vector<IntPoly> chain;
    if (s.is_zero()) return chain;
    chain.push_back(primitive(s));
    if (s.degree() == 0) return chain;
    chain.push_back(primitive(s.derivative()));
    while (chain.back().degree() > 0) {
        const auto& a = chain[chain.size() - 2];
        const auto& b = chain.back();
        RatPoly r = divmod(to_rat(a), to_rat(b)).second;
        if (r.is_zero()) break;
        chain.push_back(scale_to_int(-r));
    }
    return chain;
}

int sign_variations(const std::vector<IntPoly>& chain, const QuadNum& x) {
    int v = 0, last = 0;
    for (const auto& p : chain) {
        const int s = sign_at(p, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int sturm_count(const IntPoly& g, const QuadNum& a, const QuadNum& b) { return count_half_open(g, a, b); }

int sturm_count(const RatPoly& g, const QuadNum& a, const QuadNum& b) {
    return count_half_open(scale_to_int(g), a, b);
}

int count_roots_closed(const IntPoly& g, const QuadNum& a, const QuadNum& b) {
    return sturm_count(g, a, b) + (sign_at(g, a) == 0 ? 1 : 0);
}

int count_real_roots(const IntPoly& g) {
    if (g.degree() <= 0) return 0;
    // Cauchy bound: every real root lies in (-B, B].
    Rat m = 0;
    for (const auto& c : g.c) m = std::max(m, Rat(Rat(abs(c)) / Rat(abs(g.lead()))));
    const QuadNum bound(m + 1);
    return sturm_count(g, -bound, bound);
}

}  // namespace weil
