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

#include "weil/disk.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <stdexcept>

namespace weil {

namespace {

// Fixed-point interval [lo, hi] * 2^-B. Products are rounded outward by shifting.
struct FI {
    Int lo, hi;
};

struct CI {
    FI re, im;
};

class Fixed {
   public:
    explicit Fixed(long bits) : B_(static_cast<mp_bitcnt_t>(bits)) { one_ = Int(1) << B_; }

    const Int& one() const { return one_; }
    mp_bitcnt_t bits() const { return B_; }

    FI from(const RatInterval& x) const {
        return {floor_rat(x.lo * Rat(one_)), ceil_rat(x.hi * Rat(one_))};
    }

    Rat to_rat(const Int& v) const { return make_rat(v, one_); }

    // x * k for an exact fixed-point k
    FI mul_point(const FI& x, const Int& k) const {
        Int a = x.lo * k, b = x.hi * k;
        if (k < 0) std::swap(a, b);
        return {floor_shift(a), ceil_shift(b)};
    }

    Int floor_shift(const Int& v) const {
        Int r;
        mpz_fdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), B_);
        return r;
    }

    Int ceil_shift(const Int& v) const {
        Int r;
        mpz_cdiv_q_2exp(r.get_mpz_t(), v.get_mpz_t(), B_);
        return r;
    }

    // lower and upper bounds on |x| (fixed point)
    static Int mag_lo(const FI& x) {
        if (x.lo > 0) return x.lo;
        if (x.hi < 0) return -x.hi;
        return 0;
    }
    static Int mag_hi(const FI& x) { return std::max(Int(abs(x.lo)), Int(abs(x.hi))); }

    // |z| bounds, fixed point, via integer square roots of the squared scale-2^{2B} value
    static Int abs_lo(const CI& z) {
        const Int a = mag_lo(z.re), b = mag_lo(z.im);
        return isqrt_floor(a * a + b * b);
    }
    static Int abs_hi(const CI& z) {
        const Int a = mag_hi(z.re), b = mag_hi(z.im);
        const Int s = a * a + b * b;
        Int r = isqrt_floor(s);
        if (r * r < s) r += 1;
        return r;
    }

   private:
    mp_bitcnt_t B_;
    Int one_;
};

struct Box {
    Int cx, cy, w;  // center and half-side, fixed point
    int depth = 0;
    Int lower;      // certified lower bound on |h| over the box (fixed point), valid once evaluated
    Int centerHi;   // upper bound on |h(center)|
};

class DiskRunner {
   public:
    DiskRunner(const std::vector<RatInterval>& coeffs, const Rat& rho2, const DiskOptions& opt)
        : fx_(opt.bits), opt_(opt), rhoNum_(rho2.get_num()), rhoDen_(rho2.get_den()) {
        for (const auto& c : coeffs) coeffs_.push_back(fx_.from(c));
        one2_ = fx_.one() * fx_.one();
        // sqrt(2) <= 1449/1024: the centered-form disk around the center covers the box
        diagNum_ = 1449;
    }

    DiskCertificate run();

   private:
    bool outside(const Box& b) const {
        const Int dx = std::max(Int(abs(b.cx) - b.w), Int(0)), dy = std::max(Int(abs(b.cy) - b.w), Int(0));
        return (dx * dx + dy * dy) * rhoDen_ > rhoNum_ * one2_;
    }
    bool touches_boundary(const Box& b) const {
        const Int ax = abs(b.cx) + b.w, ay = abs(b.cy) + b.w;
        return (ax * ax + ay * ay) * rhoDen_ >= rhoNum_ * one2_;
    }
    // Centered form: |h(c + d)| >= |t_0| - sum_{k>=1} |t_k| r^k with r >= |d| over the box.
    void evaluate(Box& b) const;
    std::vector<Box> split(const Box& b) const {
        const Int h = b.w / 2;
        std::vector<Box> out;
        for (int sx : {-1, 1})
            for (int sy : {-1, 1}) {
                Box c;
                c.cx = b.cx + sx * h;
                c.cy = b.cy + sy * h;
                c.w = h;
                c.depth = b.depth + 1;
                out.push_back(std::move(c));
            }
        return out;
    }

    Fixed fx_;
    DiskOptions opt_;
    Int rhoNum_, rhoDen_, one2_;
    std::vector<FI> coeffs_;
    long diagNum_;
    mutable long examined_ = 0;
};

void DiskRunner::evaluate(Box& b) const {
    ++examined_;
    std::vector<CI> t;
    t.reserve(coeffs_.size());
    for (const auto& c : coeffs_) t.push_back({c, FI{Int(0), Int(0)}});
    const std::size_t d = t.size() - 1;
    // repeated synthetic division by (z - c) yields Taylor coefficients at c
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t j = d; j-- > k;) {
            const CI& u = t[j + 1];
            FI a = fx_.mul_point(u.re, b.cx), bb = fx_.mul_point(u.im, b.cy);
            FI c = fx_.mul_point(u.re, b.cy), e = fx_.mul_point(u.im, b.cx);
            t[j].re.lo += a.lo - bb.hi;
            t[j].re.hi += a.hi - bb.lo;
            t[j].im.lo += c.lo + e.lo;
            t[j].im.hi += c.hi + e.hi;
        }
    }
    // fixed-point r = w * 1449/1024, rounded up
    Int r, num = b.w * diagNum_;
    mpz_cdiv_q_2exp(r.get_mpz_t(), num.get_mpz_t(), 10);
    Int s = 0;
    for (std::size_t k = d; k >= 1; --k) {
        s = fx_.ceil_shift((s + Fixed::abs_hi(t[k])) * r);
        if (k == 1) break;
    }
    b.lower = Fixed::abs_lo(t[0]) - s;
    b.centerHi = Fixed::abs_hi(t[0]);
}

DiskCertificate DiskRunner::run() {
    DiskCertificate cert;
    if (coeffs_.empty() || (coeffs_[0].lo <= 0 && coeffs_[0].hi >= 0))
        throw std::invalid_argument("certify_nonvanishing: h(0) may vanish");
    // bounding square of the upper half disk, half-side a power of two >= radius
    Int R = fx_.one();
    while (R * R * rhoDen_ < rhoNum_ * one2_) R *= 2;
    std::deque<Box> work;
    for (int sx : {-1, 1}) {
        Box b;
        b.cx = sx * (R / 2);
        b.cy = R / 2;
        b.w = R / 2;
        work.push_back(std::move(b));
    }
    std::vector<Box> boundary;
    while (!work.empty()) {
        Box b = std::move(work.front());
        work.pop_front();
        if (outside(b)) continue;
        evaluate(b);
        cert.subdivisionDepth = std::max(cert.subdivisionDepth, b.depth);
        if (b.lower > 0) {
            if (touches_boundary(b)) boundary.push_back(std::move(b));
            continue;
        }
        if (b.depth >= opt_.maxDepth) {
            cert.boxesExamined = examined_;
            cert.mu = 0;
            return cert;  // inconclusive
        }
        for (auto& c : split(b)) work.push_back(std::move(c));
    }
    // sharpen mu: refine the boundary box with the smallest lower bound
    auto worse = [](const Box& x, const Box& y) { return x.lower > y.lower; };
    std::priority_queue<Box, std::vector<Box>, decltype(worse)> pq(worse, std::move(boundary));
    long budget = opt_.refineBudget;
    const Rat tol = opt_.relTol;
    while (!pq.empty() && budget > 0) {
        const Box& top = pq.top();
        if (Rat(top.centerHi - top.lower) <= tol * Rat(top.lower) || top.depth >= opt_.maxDepth + 8) break;
        Box b = top;
        pq.pop();
        for (auto& c : split(b)) {
            if (outside(c) || !touches_boundary(c)) continue;
            evaluate(c);
            --budget;
            // the parent bound stays valid on the child
            if (c.lower < b.lower) c.lower = b.lower;
            cert.subdivisionDepth = std::max(cert.subdivisionDepth, c.depth);
            pq.push(std::move(c));
        }
    }
    cert.nonvanishing = true;
    cert.mu = pq.empty() ? Rat(fx_.to_rat(coeffs_[0].lo)) : fx_.to_rat(pq.top().lower);
    cert.boxesExamined = examined_;
    return cert;
}

}  // namespace

DiskCertificate certify_nonvanishing(const std::vector<RatInterval>& coeffs, const Rat& rho2, const DiskOptions& opt) {
    if (rho2 <= 0) throw std::invalid_argument("certify_nonvanishing: radius must be positive");
    return DiskRunner(coeffs, rho2, opt).run();
}

DiskCertificate certify_nonvanishing(const RatPoly& h, const Int& q, int maxDepth) {
    if (h.is_zero() || h[0] == 0) throw std::invalid_argument("certify_nonvanishing: h(0) = 0");
    std::vector<RatInterval> c(h.c.begin(), h.c.end());
    DiskOptions opt;
    opt.maxDepth = maxDepth;
    return certify_nonvanishing(c, make_rat(1, q), opt);
}

DiskCertificate certify_nonvanishing(const QuadPoly& h, const Int& q, int maxDepth) {
    if (h.is_zero() || h[0] == 0) throw std::invalid_argument("certify_nonvanishing: h(0) = 0");
    DiskOptions opt;
    opt.maxDepth = maxDepth;
    std::vector<RatInterval> c;
    for (const auto& a : h.c) c.push_back(a.enclose(opt.bits + 16));
    return certify_nonvanishing(c, make_rat(1, q), opt);
}

Rat mu_ord(const Rat& mu, const Int& q, int n) {
    const RatInterval a = q_half_power(q, -(n - 1), 96);
    const RatInterval b = q_half_power(q, -n, 96) * RatInterval(make_rat(q + 1, 2));
    return mu - a.hi - b.hi;
}

}  // namespace weil
