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

#ifndef WEIL_QUAD_HPP
#define WEIL_QUAD_HPP

#include <stdexcept>

#include "weil/arith.hpp"
#include "weil/interval.hpp"
#include "weil/poly.hpp"

namespace weil {

// a + b*sqrt(d). Invariant: b == 0 whenever d is a perfect square (folded into a).
class QuadNum {
   public:
    Rat a, b;
    Int d;

    QuadNum() = default;
    QuadNum(long x) : a(x) {}         // NOLINT(google-explicit-constructor)
    QuadNum(const Rat& x) : a(x) {}   // NOLINT(google-explicit-constructor)
    QuadNum(const Int& x) : a(x) {}   // NOLINT(google-explicit-constructor)
    QuadNum(const Rat& x, const Rat& y, const Int& radicand) : a(x), b(y), d(radicand) { normalize(); }

    static QuadNum sqrt_of(const Int& radicand) { return {Rat(0), Rat(1), radicand}; }

    bool is_rational() const { return b == 0; }
    int sign() const;
    QuadNum conj() const { return {a, -b, d}; }
    Rat norm() const { return a * a - b * b * d; }
    RatInterval enclose(long bits) const;

    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);

   private:
    void normalize();
    void adopt(const QuadNum& o);
};

QuadNum operator+(QuadNum x, const QuadNum& y);
QuadNum operator-(QuadNum x, const QuadNum& y);
QuadNum operator*(QuadNum x, const QuadNum& y);
QuadNum operator/(QuadNum x, const QuadNum& y);
QuadNum operator-(const QuadNum& x);
bool operator==(const QuadNum& x, const QuadNum& y);
bool operator<(const QuadNum& x, const QuadNum& y);
inline bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }

using QuadPoly = Poly<QuadNum>;

// Exact sign of p at x, p rational.
int sign_at(const RatPoly& p, const QuadNum& x);
int sign_at(const IntPoly& p, const QuadNum& x);

// Enclosure of a Q(sqrt d) polynomial as an interval-coefficient evaluation helper.
RatPoly rational_part(const QuadPoly& p);
QuadPoly to_quad(const RatPoly& p);
ComplexBox eval_box(const QuadPoly& h, const ComplexBox& w, long bits);
// Each coefficient replaced by the midpoint of a 2^-bits enclosure.
RatPoly approximate(const QuadPoly& p, long bits);

}  // namespace weil

#endif
