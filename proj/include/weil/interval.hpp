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

#ifndef WEIL_INTERVAL_HPP
#define WEIL_INTERVAL_HPP

#include <string>

#include "weil/arith.hpp"
#include "weil/poly.hpp"

namespace weil {

// Closed interval [lo, hi] with exact rational endpoints.
// Every operation returns an enclosure of the exact result set.
class RatInterval {
   public:
    Rat lo, hi;

    RatInterval() = default;
    RatInterval(const Rat& x) : lo(x), hi(x) {}  // NOLINT(google-explicit-constructor)
    RatInterval(const Int& x) : lo(x), hi(x) {}  // NOLINT(google-explicit-constructor)
    RatInterval(long x) : lo(x), hi(x) {}        // NOLINT(google-explicit-constructor)
    RatInterval(const Rat& a, const Rat& b);

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains(const RatInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool positive() const { return lo > 0; }
    bool negative() const { return hi < 0; }
    bool contains_zero() const { return lo <= 0 && hi >= 0; }
    double to_double() const { return mid().get_d(); }
    std::string str() const;

    // Outward rounding onto the grid 2^-bits; keeps denominators bounded.
    RatInterval rounded(long bits) const;

    RatInterval& operator+=(const RatInterval& o);
    RatInterval& operator-=(const RatInterval& o);
    RatInterval& operator*=(const RatInterval& o);
    RatInterval& operator/=(const RatInterval& o);
};

RatInterval operator+(RatInterval a, const RatInterval& b);
RatInterval operator-(RatInterval a, const RatInterval& b);
RatInterval operator*(RatInterval a, const RatInterval& b);
RatInterval operator/(RatInterval a, const RatInterval& b);
RatInterval operator-(const RatInterval& a);
bool operator==(const RatInterval& a, const RatInterval& b);

RatInterval abs(const RatInterval& a);
RatInterval sqr(const RatInterval& a);
RatInterval pow(const RatInterval& a, unsigned long k);
RatInterval hull(const RatInterval& a, const RatInterval& b);
RatInterval intersect(const RatInterval& a, const RatInterval& b);

Rat floor_dyadic(const Rat& x, long bits);
Rat ceil_dyadic(const Rat& x, long bits);

// Enclosures of elementary functions, width about 2^-bits relative to the magnitude.
RatInterval sqrt_enclosure(const Rat& x, long bits);
RatInterval sqrt(const RatInterval& x, long bits);
RatInterval exp_enclosure(const Rat& x, long bits);
RatInterval exp(const RatInterval& x, long bits);
RatInterval log_enclosure(const Rat& x, long bits);
RatInterval log(const RatInterval& x, long bits);  // requires x.lo > 0
// x^(a/b) for x > 0.
RatInterval pow_frac(const RatInterval& x, const Rat& e, long bits);

// Enclosure of log(m / q^n) of width <= 2^-precision; exact when m = q^n.
RatInterval log_enclosure(const Int& m, const Int& q, long n, long precision);

// Enclosures of sqrt(q) and powers q^(k/2).
RatInterval sqrt_q(const Int& q, long bits);
RatInterval q_half_power(const Int& q, long k, long bits);

// Axis-aligned complex box.
class ComplexBox {
   public:
    RatInterval re, im;

    ComplexBox() = default;
    ComplexBox(const RatInterval& r, const RatInterval& i = RatInterval(0)) : re(r), im(i) {}  // NOLINT
    ComplexBox(const Rat& r) : re(r), im(0) {}                                                 // NOLINT
    ComplexBox(const Int& r) : re(r), im(0) {}                                                 // NOLINT
    ComplexBox(long r) : re(r), im(0) {}                                                       // NOLINT

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    // Upper bound on |z|^2 and lower bound on |z|^2 over the box.
    Rat abs2_hi() const;
    Rat abs2_lo() const;
    ComplexBox rounded(long bits) const { return {re.rounded(bits), im.rounded(bits)}; }
};

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b);
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);

// Horner evaluation in box arithmetic; bits > 0 rounds intermediates outward.
ComplexBox eval_box(const RatPoly& h, const ComplexBox& w, long bits = 0);

}  // namespace weil

#endif
