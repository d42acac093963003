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

#include "weil/quad.hpp"

namespace weil {

void QuadNum::normalize() {
    if (b == 0) return;
    if (is_square(d)) {
        a += b * Rat(isqrt_floor(d));
        b = 0;
    }
}

void QuadNum::adopt(const QuadNum& o) {
    if (o.b == 0) return;
    if (b == 0) {
        d = o.d;
        return;
    }
    if (d != o.d) throw std::domain_error("QuadNum: mismatched radicands");
}

int QuadNum::sign() const {
    const int sa = sgn(a), sb = sgn(b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    const Rat lhs = a * a, rhs = b * b * d;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

RatInterval QuadNum::enclose(long bits) const {
    if (b == 0) return RatInterval(a);
    return RatInterval(a) + RatInterval(b) * sqrt_q(d, bits + 8);
}

QuadNum& QuadNum::operator+=(const QuadNum& o) {
    adopt(o);
    a += o.a;
    b += o.b;
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o) {
    adopt(o);
    a -= o.a;
    b -= o.b;
    return *this;
}

QuadNum& QuadNum::operator*=(const QuadNum& o) {
    adopt(o);
    const Rat na = a * o.a + b * o.b * d;
    b = a * o.b + b * o.a;
    a = na;
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o) {
    const Rat n = o.norm();
    if (n == 0) throw std::domain_error("QuadNum: division by zero");
    QuadNum c = o.conj();
    *this *= c;
    a /= n;
    b /= n;
    return *this;
}

QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
QuadNum operator-(const QuadNum& x) { return {-x.a, -x.b, x.d}; }
bool operator==(const QuadNum& x, const QuadNum& y) { return x.a == y.a && x.b == y.b; }
bool operator<(const QuadNum& x, const QuadNum& y) { return (y - x).sign() > 0; }

int sign_at(const RatPoly& p, const QuadNum& x) {
    if (x.b == 0) return sgn(p.eval(x.a));
    if (x.a == 0) {
        // p(b sqrt d) = E + O sqrt d with E from even and O from odd powers.
        Rat e = 0, o = 0, t2 = x.b * x.b * x.d;
        Rat pw = 1;
        for (std::size_t i = 0; i < p.c.size(); i += 2) {
            e += p.c[i] * pw;
            if (i + 1 < p.c.size()) o += p.c[i + 1] * pw * x.b;
            pw *= t2;
        }
        return QuadNum(e, o, x.d).sign();
    }
    QuadNum r(0);
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) r = r * x + QuadNum(*it);
    return r.sign();
}

int sign_at(const IntPoly& p, const QuadNum& x) { return sign_at(to_rat(p), x); }

RatPoly rational_part(const QuadPoly& p) {
    std::vector<Rat> v;
    v.reserve(p.c.size());
    for (const auto& a : p.c) {
        if (a.b != 0) throw std::domain_error("rational_part: irrational coefficient");
        v.push_back(a.a);
    }
    return RatPoly(std::move(v));
}

QuadPoly to_quad(const RatPoly& p) {
    std::vector<QuadNum> v(p.c.begin(), p.c.end());
    return QuadPoly(std::move(v));
}

ComplexBox eval_box(const QuadPoly& h, const ComplexBox& w, long bits) {
    ComplexBox r(0);
    for (auto it = h.c.rbegin(); it != h.c.rend(); ++it) {
        r = r * w + ComplexBox(it->enclose(bits + 16));
        if (bits > 0) r = r.rounded(bits);
    }
    return r;
}

RatPoly approximate(const QuadPoly& p, long bits) {
    std::vector<Rat> v;
    v.reserve(p.c.size());
    for (const auto& a : p.c) v.push_back(a.b == 0 ? a.a : floor_dyadic(a.enclose(bits + 8).mid(), bits));
    return RatPoly(std::move(v));
}

}  // namespace weil
