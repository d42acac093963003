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

#include "weil/largeq.hpp"

#include <cmath>
#include <stdexcept>

#include "weil/arith.hpp"
#include "weil/interval.hpp"

namespace weil {

namespace {

void check_a(int n, const QuadNum& a) {
    if (n < 2) throw std::invalid_argument("B profile: n >= 2");
    if (a < QuadNum(-2 * n) || QuadNum(2 * n) < a) throw std::invalid_argument("B profile: a outside [-2n, 2n]");
}

// e_2 of the roots, from the power sums
double e2(const std::vector<double>& r) {
    double s = 0, s2 = 0;
    for (double x : r) {
        s += x;
        s2 += x * x;
    }
    return (s * s - s2) / 2;
}

// roots at parameter t in [0, 2]: b_min configuration -> arithmetic progression -> all equal
std::vector<double> path(int n, double a, double t) {
    const std::vector<double> r0 = b_min_roots(n, a);
    const double mid = -a / n;
    const double w = 2 - std::fabs(mid);
    std::vector<double> r1(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r1[static_cast<std::size_t>(i)] = mid + w * (-0.5 + static_cast<double>(i) / (n - 1));
    std::vector<double> out(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (t <= 1)
            out[i] = (1 - t) * r0[i] + t * r1[i];
        else
            out[i] = (2 - t) * r1[i] + (t - 1) * mid;
    }
    return out;
}

Rat to_rat(long double x) {
    Rat r(static_cast<double>(x));
    r += Rat(static_cast<double>(x - static_cast<long double>(static_cast<double>(x))));
    return r;
}

}  // namespace

QuadNum b_max(int n, const QuadNum& a) {
    check_a(n, a);
    // C(n,2) (a/n)^2
    return QuadNum(make_rat(Int(n - 1), Int(2 * n))) * a * a;
}

QuadNum b_min(int n, const QuadNum& a) {
    check_a(n, a);
    int k = 0;
    while (k < n - 1 && QuadNum(4 * k - 2 * n + 4) < a) ++k;
    return QuadNum(4 * k - 2 * n + 2) * a + QuadNum(-8L * k * k + 8L * k * (n - 1) - 2L * (n - 1) * n);
}

QuadNum b_diff(int n, const QuadNum& a) { return b_max(n, a) - b_min(n, a); }

QuadNum lambda1(int n) {
    // sqrt(2n/(n-1)) = sqrt(2n(n-1)) / (n-1)
    return QuadNum(2 * n) - QuadNum(Rat(0), make_rat(Int(1), Int(n - 1)), Int(2L * n * (n - 1)));
}

QuadNum lambda2(int n) { return QuadNum(2 * n) - QuadNum(Rat(0), make_rat(Int(1), Int(n - 1)), Int(4L * n * (n - 1))); }

std::vector<double> b_min_roots(int n, double a) {
    if (std::fabs(a) > 2 * n) throw std::invalid_argument("b_min_roots: a outside [-2n, 2n]");
    int k = static_cast<int>(std::floor((a + 2 * n) / 4));
    if (k > n - 1) k = n - 1;
    if (k < 0) k = 0;
    // k roots at -2, one at x, n - k - 1 at 2
    std::vector<double> r(static_cast<std::size_t>(k), -2.0);
    r.push_back(-a - 2 * n + 4 * k + 2);
    r.insert(r.end(), static_cast<std::size_t>(n - k - 1), 2.0);
    return r;
}

GapInterval gap_interval(const Int& q, int n, const Rat& lambda, const Rat& eps) {
    const QuadNum lam(lambda);
    const QuadNum absLam(abs(lambda));
    if (!(lambda1(n) < absLam) || !(absLam < QuadNum(2 * n)))
        throw std::invalid_argument("gap_interval: need lambda1 < |lambda| < 2n");
    if (eps <= 0) throw std::invalid_argument("gap_interval: eps > 0");
    const QuadNum bd = b_diff(n, lam);
    if (!(bd < QuadNum(1 - 2 * eps))) throw std::invalid_argument("gap_interval: need b_diff(lambda) < 1 - 2 eps");
    GapInterval g;
    // r = floor(lambda sqrt q), exact
    const QuadNum x = lam * QuadNum::sqrt_of(q);
    const RatInterval e = x.enclose(64);
    g.r = floor_rat(e.lo);
    while (!(x < QuadNum(Int(g.r + 1)))) ++g.r;
    while (x < QuadNum(g.r)) --g.r;
    const Int q1 = q + 1;
    const Rat qn1(pow_int(q, static_cast<unsigned long>(n - 1)));
    const Int base = pow_int(q1, static_cast<unsigned long>(n));
    const Int step = pow_int(q1, static_cast<unsigned long>(n - 1));
    g.lo = Rat(base + g.r * step) + (b_max(n, lam).a + eps) * qn1;
    g.hi = Rat(base + (g.r + 1) * step) + (b_min(n, lam).a - eps) * qn1;
    if (g.hi - g.lo <= 1) return g;
    g.first = ceil_rat(g.lo);
    g.last = floor_rat(g.hi);
    g.empty = g.first > g.last;
    return g;
}

LargeQResult construct_large_q(const Int& q, int n, const Int& m, const LargeQOptions& opt) {
    const PrimePower pp = prime_power(q);
    if (n < 2 || (n == 2 && pp.e != 1)) throw std::invalid_argument("construct_large_q: n >= 3, or n = 2 with q prime");
    if (!(QuadNum(opt.lambda) < lambda1(n)) || opt.lambda <= 0)
        throw std::invalid_argument("construct_large_q: need 0 < lambda < lambda1");
    const Int qn = pow_int(q, static_cast<unsigned long>(n));
    const RatInterval aEnc = RatInterval(Rat(m - qn)) * q_half_power(q, -(2 * n - 1), 96);
    if (aEnc.hi > opt.lambda || aEnc.lo < -opt.lambda) throw std::invalid_argument("construct_large_q: m outside q^n +- lambda q^{n-1/2}");
    LargeQResult res;
    res.a = Rat((aEnc.lo + aEnc.hi) / 2).get_d();
    const Rat aRat = (aEnc.lo + aEnc.hi) / 2;
    const Int q1 = q + 1;
    const Rat y = Rat(m - pow_int(q1, static_cast<unsigned long>(n))) / Rat(pow_int(q1, static_cast<unsigned long>(n - 1)));
    Rat eps = opt.eps;
    for (int attempt = 0; attempt <= opt.retries; ++attempt, eps /= 2) {
        const Rat lo = b_min(n, QuadNum(aRat)).a + eps, hi = b_max(n, QuadNum(aRat)).a - eps;
        if (hi - lo < 1) continue;  // window infeasible at this shrink
        const Int c1 = floor_rat(y - (lo + hi) / 2 + make_rat(1, 2));
        const Rat b = y - Rat(c1);
        if (b < lo || b > hi) continue;
        // homotopy parameter with e2 = b, by bisection on [0, 2]
        const double bd = b.get_d();
        double t0 = 0, t1 = 2;
        for (int it = 0; it < 200; ++it) {
            const double tm = (t0 + t1) / 2;
            (e2(path(n, res.a, tm)) < bd ? t0 : t1) = tm;
        }
        const std::vector<double> roots = path(n, res.a, (t0 + t1) / 2);
        // G = prod (x - sqrt q r_i)
        std::vector<long double> gc{1.0L};
        const long double sq = std::sqrt(static_cast<long double>(q.get_d()));
        for (double r : roots) {
            std::vector<long double> next(gc.size() + 1, 0.0L);
            for (std::size_t i = 0; i < gc.size(); ++i) {
                next[i + 1] += gc[i];
                next[i] -= gc[i] * sq * r;
            }
            gc = std::move(next);
        }
        // Gc[j] = coefficient of x^{n-j}
        std::vector<Rat> Greal(static_cast<std::size_t>(n + 1));
        for (int j = 0; j <= n; ++j) Greal[static_cast<std::size_t>(j)] = to_rat(gc[static_cast<std::size_t>(n - j)]);
        std::vector<Int> c(static_cast<std::size_t>(n + 1));
        c[0] = 1;
        c[1] = c1;
        for (int i = 2; i <= n; ++i) {
            Rat known(pow_int(q1, static_cast<unsigned long>(n)));
            for (int j = 1; j < i; ++j) known += Rat(c[static_cast<std::size_t>(j)] * pow_int(q1, static_cast<unsigned long>(n - j)));
            for (int j = i + 1; j <= n; ++j) known += Greal[static_cast<std::size_t>(j)] * Rat(pow_int(q1, static_cast<unsigned long>(n - j)));
            c[static_cast<std::size_t>(i)] = ceil_rat((Rat(m) - known) / Rat(pow_int(q1, static_cast<unsigned long>(n - i))));
        }
        res.adjusted = false;
        if (n >= 3 && mpz_divisible_p(c[static_cast<std::size_t>(n)].get_mpz_t(), pp.p.get_mpz_t())) {
            c[static_cast<std::size_t>(n - 1)] += 1;
            c[static_cast<std::size_t>(n)] -= q1;
            res.adjusted = true;
        }
        std::vector<Int> asc(c.rbegin(), c.rend());
        res.G = IntPoly(std::move(asc));
        res.b = b;
        res.eps = eps;
        res.homotopy = (t0 + t1) / 2;
        res.roots = roots;
        if (res.G.eval(q1) != m) throw std::logic_error("construct_large_q: G(q+1) != m after rounding");
        if (!companion_roots_in_range(res.G, q))
            throw ConstructionFailed("root-containment", "rounded companion leaves [-2 sqrt q, 2 sqrt q]; q too small for this n");
        res.f = from_companion(res.G, q);
        res.certificate = certify(make_candidate(res.f, q, "largeq"), n >= 3);
        const bool ok = n >= 3 ? res.certificate.hondaTate == HondaTate::VerifiedOrdinary
                               : (res.certificate.hondaTate != HondaTate::Failed && res.certificate.hondaTate != HondaTate::Unknown);
        if (!ok || res.certificate.order != m) throw ConstructionFailed("weil-cert", "certificate rejected: " + res.certificate.note);
        return res;
    }
    throw ConstructionFailed("window", "no c_1 with b inside the shrunken region");
}

EisensteinReport eisenstein_obstruction(const Int& q, const Int& m) {
    EisensteinReport rep;
    const PrimePower pp = prime_power(q);
    if (pp.e < 2) return rep;
    const Int q1 = q + 1;
    // |r| <= 4 sqrt q
    Int rMax = sqrt(Int(16 * q));
    for (Int r = -rMax; r <= rMax; ++r) {
        const Int c2 = m - q1 * q1 - r * q1;
        const IntPoly G{c2, r, Int(1)};
        if (!companion_roots_in_range(G, q)) continue;
        ++rep.candidates;
        rep.onlyG = G;
    }
    if (rep.candidates != 1) {
        rep.onlyG.reset();
        return rep;
    }
    // Eisenstein at p: p | r, p | c2, p^2 does not divide c2
    const Int& c2 = (*rep.onlyG)[0];
    const Int& r = (*rep.onlyG)[1];
    const Int p2 = pp.p * pp.p;
    rep.obstructed = mpz_divisible_p(r.get_mpz_t(), pp.p.get_mpz_t()) && c2 != 0 && mpz_divisible_p(c2.get_mpz_t(), pp.p.get_mpz_t()) && !mpz_divisible_p(c2.get_mpz_t(), p2.get_mpz_t());
    return rep;
}

std::vector<Int> eisenstein_scan(const Int& q) {
    std::vector<Int> out;
    const PrimePower pp = prime_power(q);
    if (pp.e < 2) return out;
    const Int q1 = q + 1;
    const Int rMax = sqrt(Int(16 * q));
    const QuadNum l2 = lambda2(2) * QuadNum::sqrt_of(q);
    for (Int r = -rMax; r <= rMax; ++r) {
        if (!mpz_divisible_p(r.get_mpz_t(), pp.p.get_mpz_t())) continue;
        if (!(l2 < QuadNum(Int(abs(r))))) continue;
        const Int lo = q1 * q1 + (r - 1) * q1, hi = q1 * q1 + (r + 1) * q1;
        for (Int m = lo; m <= hi; ++m)
            if (eisenstein_obstruction(q, m).obstructed) out.push_back(m);
    }
    return out;
}

}  // namespace weil
