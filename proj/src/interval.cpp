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

#include "weil/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace weil {

namespace {

// RAII holder; all transcendental enclosures go through correctly rounded MPFR calls.
struct Mpfr {
    mpfr_t v;
    explicit Mpfr(long prec) { mpfr_init2(v, static_cast<mpfr_prec_t>(std::max(prec, 32L))); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
    Rat get() const {
        Rat r;
        mpfr_get_q(r.get_mpq_t(), v);
        return r;
    }
};

long magnitude_bits(const Rat& x) {
    if (x == 0) return 0;
    Int a = abs(floor_rat(x)) + 1;
    return static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 2));
}

}  // namespace

RatInterval::RatInterval(const Rat& a, const Rat& b) : lo(a), hi(b) {
    if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

std::string RatInterval::str() const {
    std::ostringstream os;
    os.precision(12);
    os << '[' << lo.get_d() << ", " << hi.get_d() << ']';
    return os.str();
}

Rat floor_dyadic(const Rat& x, long bits) {
    Int s = 1;
    s <<= static_cast<mp_bitcnt_t>(bits);
    return make_rat(floor_rat(x * s), s);
}

Rat ceil_dyadic(const Rat& x, long bits) {
    Int s = 1;
    s <<= static_cast<mp_bitcnt_t>(bits);
    return make_rat(ceil_rat(x * s), s);
}

RatInterval RatInterval::rounded(long bits) const {
    RatInterval r;
    r.lo = lo.get_den() == 1 ? lo : floor_dyadic(lo, bits);
    r.hi = hi.get_den() == 1 ? hi : ceil_dyadic(hi, bits);
    return r;
}

RatInterval& RatInterval::operator+=(const RatInterval& o) {
    lo += o.lo;
    hi += o.hi;
    return *this;
}

RatInterval& RatInterval::operator-=(const RatInterval& o) {
    Rat nlo = lo - o.hi;
    hi -= o.lo;
    lo = nlo;
    return *this;
}

RatInterval& RatInterval::operator*=(const RatInterval& o) {
    if (lo == hi && o.lo == o.hi) {
        lo *= o.lo;
        hi = lo;
        return *this;
    }
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    lo = std::min({a, b, c, d});
    hi = std::max({a, b, c, d});
    return *this;
}

RatInterval& RatInterval::operator/=(const RatInterval& o) {
    if (o.contains_zero()) throw std::domain_error("RatInterval: division by interval containing zero");
    RatInterval inv(1 / o.hi, 1 / o.lo);
    return *this *= inv;
}

RatInterval operator+(RatInterval a, const RatInterval& b) { return a += b; }
RatInterval operator-(RatInterval a, const RatInterval& b) { return a -= b; }
RatInterval operator*(RatInterval a, const RatInterval& b) { return a *= b; }
RatInterval operator/(RatInterval a, const RatInterval& b) { return a /= b; }
RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }
bool operator==(const RatInterval& a, const RatInterval& b) { return a.lo == b.lo && a.hi == b.hi; }

RatInterval abs(const RatInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    return {Rat(0), std::max(Rat(-a.lo), a.hi)};
}

RatInterval sqr(const RatInterval& a) {
    RatInterval m = abs(a);
    return {m.lo * m.lo, m.hi * m.hi};
}

RatInterval pow(const RatInterval& a, unsigned long k) {
    if (k == 0) return RatInterval(1);
    if (k % 2 == 0) {
        RatInterval m = abs(a);
        return {pow_rat(m.lo, static_cast<long>(k)), pow_rat(m.hi, static_cast<long>(k))};
    }
    return {pow_rat(a.lo, static_cast<long>(k)), pow_rat(a.hi, static_cast<long>(k))};
}

RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RatInterval intersect(const RatInterval& a, const RatInterval& b) {
    Rat l = std::max(a.lo, b.lo), h = std::min(a.hi, b.hi);
    if (l > h) throw std::logic_error("intersect: disjoint enclosures");
    return {l, h};
}

RatInterval sqrt_enclosure(const Rat& x, long bits) {
    if (x < 0) throw std::domain_error("sqrt_enclosure: negative argument");
    Int s = 1;
    s <<= static_cast<mp_bitcnt_t>(bits);
    Rat scaled = x * s * s;
    Int lo = isqrt_floor(floor_rat(scaled));
    Int hiInt = isqrt_floor(ceil_rat(scaled));
    if (hiInt * hiInt < ceil_rat(scaled)) hiInt += 1;
    RatInterval r(make_rat(lo, s), make_rat(hiInt, s));
    if (x.get_den() == 1 && is_square(x.get_num())) return RatInterval(Rat(isqrt_floor(x.get_num())));
    return r;
}

RatInterval sqrt(const RatInterval& x, long bits) {
    if (x.lo < 0) throw std::domain_error("sqrt: interval reaches below zero");
    return {sqrt_enclosure(x.lo, bits).lo, sqrt_enclosure(x.hi, bits).hi};
}

RatInterval exp_enclosure(const Rat& x, long bits) {
    if (x == 0) return RatInterval(1);
    const long prec = bits + 64 + 2 * magnitude_bits(x);
    Mpfr a(prec), b(prec);
    mpfr_set_q(a.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_exp(a.v, a.v, MPFR_RNDD);
    mpfr_set_q(b.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_exp(b.v, b.v, MPFR_RNDU);
    return {a.get(), b.get()};
}

RatInterval exp(const RatInterval& x, long bits) {
    return {exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi};
}

RatInterval log_enclosure(const Rat& x, long bits) {
    if (x <= 0) throw std::domain_error("log_enclosure: nonpositive argument");
    if (x == 1) return RatInterval(0);
    const long prec = bits + 64 + magnitude_bits(x) + magnitude_bits(1 / x);
    Mpfr a(prec), b(prec);
    mpfr_set_q(a.v, x.get_mpq_t(), MPFR_RNDD);
    mpfr_log(a.v, a.v, MPFR_RNDD);
    mpfr_set_q(b.v, x.get_mpq_t(), MPFR_RNDU);
    mpfr_log(b.v, b.v, MPFR_RNDU);
    return {a.get(), b.get()};
}

RatInterval log(const RatInterval& x, long bits) {
    return {log_enclosure(x.lo, bits).lo, log_enclosure(x.hi, bits).hi};
}

RatInterval pow_frac(const RatInterval& x, const Rat& e, long bits) {
    if (x.lo <= 0) throw std::domain_error("pow_frac: base must be positive");
    RatInterval l = log(x, bits + 16) * RatInterval(e);
    return exp(l.rounded(bits + 16), bits);
}

RatInterval log_enclosure(const Int& m, const Int& q, long n, long precision) {
    if (m < 1) throw std::domain_error("log_enclosure: m < 1");
    const Int qn = pow_int(q, static_cast<unsigned long>(std::max(n, 0L)));
    if (n >= 0 && m == qn) return RatInterval(0);
    const long grid = precision + 2;
    for (long work = precision + 64 + 2 * static_cast<long>(std::log2(std::abs(n) + 2.0));; work += 64) {
        RatInterval lm = log_enclosure(Rat(m), work);
        RatInterval lq = log_enclosure(Rat(q), work);
        RatInterval v = lm - lq * RatInterval(n);
        RatInterval r = v.rounded(grid);
        Rat limit = make_rat(1, Int(1) << static_cast<mp_bitcnt_t>(precision));
        if (r.width() <= limit) return r;
    }
}

RatInterval sqrt_q(const Int& q, long bits) { return sqrt_enclosure(Rat(q), bits); }

RatInterval q_half_power(const Int& q, long k, long bits) {
    const long a = k >= 0 ? k : -k;
    RatInterval r(Rat(pow_int(q, static_cast<unsigned long>(a / 2))));
    if (a % 2) r *= sqrt_q(q, bits + static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) * (a / 2 + 1));
    if (k < 0) r = RatInterval(1) / r;
    return r;
}

Rat ComplexBox::abs2_hi() const {
    RatInterval a = sqr(re), b = sqr(im);
    return a.hi + b.hi;
}

Rat ComplexBox::abs2_lo() const {
    RatInterval a = sqr(re), b = sqr(im);
    return a.lo + b.lo;
}

ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) { return {a.re + b.re, a.im + b.im}; }
ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) { return {a.re - b.re, a.im - b.im}; }
ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox eval_box(const RatPoly& h, const ComplexBox& w, long bits) {
    ComplexBox r(0);
    for (auto it = h.c.rbegin(); it != h.c.rend(); ++it) {
        r = r * w + ComplexBox(*it);
        if (bits > 0) r = r.rounded(bits);
    }
    return r;
}

}  // namespace weil
