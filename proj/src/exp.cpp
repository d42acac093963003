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

#include "weil/exp.hpp"

#include <cmath>
#include <stdexcept>

#include "weil/series.hpp"

namespace weil {

namespace {

// Enclosure of 3 sqrt q log q - 1/2.
RatInterval three_root_q_log_q(const Int& q, long bits) {
    return RatInterval(3) * sqrt_q(q, bits) * log_enclosure(Rat(q), bits) - RatInterval(make_rat(1, 2));
}

long log2_ceil(const Int& q) { return static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)); }

ExponentSeries j_exponent(const Int& s, const Int& q) {
    ExponentSeries e;
    e.poly = {Rat(0), Rat(s)};
    e.geom = make_rat(q + 1, 2);
    e.geomStart = 2;
    return e;
}

}  // namespace

Int compute_s(const Int& q) {
    if (q < 2) throw std::invalid_argument("compute_s: q >= 2");
    for (long bits = 64;; bits *= 2) {
        const RatInterval v = RatInterval(make_rat(q, 2)) * log_enclosure(Rat(q), bits) + RatInterval(make_rat(1, 2));
        const Int lo = floor_rat(v.lo), hi = floor_rat(v.hi);
        if (lo == hi) return lo;
    }
}

bool valid(const ExpParams& p) {
    if (p.q < 2 || p.n < 2 || p.m < 1) return false;
    const Int m2 = p.m * p.m;
    return m2 >= pow_int(p.q, static_cast<unsigned long>(2 * p.n - 1)) &&
           m2 < pow_int(p.q, static_cast<unsigned long>(2 * p.n + 1));
}

ExpCoefficients choose_coefficients(const ExpParams& p, long bits) {
    if (!valid(p)) throw std::invalid_argument("choose_coefficients: need q^{n-1/2} <= m < q^{n+1/2}, n >= 2");
    const int n = p.n;
    const Rat q(p.q);
    const Int s = compute_s(p.q);
    for (long prec = bits + n * log2_ceil(p.q) + 16;; prec *= 2) {
        const RatInterval L = log_enclosure(p.m, p.q, n, prec);
        ExpCoefficients out;
        out.b = {Int(1)};
        std::vector<Rat> expo{Rat(0)};  // c_1 .. c_{i-1} as exponent coefficients
        RatInterval eps = L;               // eps_{i-1}
        bool decided = true;
        Rat qi = 1;
        for (int i = 1; i < n && decided; ++i) {
            qi *= q;
            const Rat P = exp_coefficients(expo, i)[static_cast<std::size_t>(i)];
            // b_i is the unique integer in (x - 1/2, x + 1/2], x = q^i eps_{i-1} + P_i
            const RatInterval x = RatInterval(qi) * eps + RatInterval(P + make_rat(1, 2));
            const Int lo = floor_rat(x.lo), hi = floor_rat(x.hi);
            if (lo != hi) {
                decided = false;
                break;
            }
            const Rat c = Rat(lo) - P;
            out.b.push_back(lo);
            out.c.push_back(c);
            out.cEnc.emplace_back(c);
            expo.push_back(c);
            eps = eps - RatInterval(c / qi);
        }
        if (!decided) continue;
        out.cEnc.push_back(RatInterval(qi * q) * eps);  // c_n = q^n eps_{n-1}
        // window bounds on every c_i
        if (n >= 2 && abs(out.c.empty() ? Rat(0) : out.c[0]) > Rat(s)) throw std::logic_error("choose_coefficients: |c_1| > s");
        for (std::size_t i = 1; i < out.c.size(); ++i)
            if (abs(out.c[i]) > make_rat(p.q + 1, 2)) throw std::logic_error("choose_coefficients: |c_i| > (q+1)/2");
        const RatInterval& cn = out.cEnc.back();
        if (cn.lo > make_rat(p.q, 2) || cn.hi < -make_rat(p.q, 2)) throw std::logic_error("choose_coefficients: |c_n| > q/2");
        return out;
    }
}

ExpResult assemble_candidate(const ExpParams& p) {
    ExpResult r;
    r.params = p;
    r.coeffs = choose_coefficients(p);
    const int n = p.n;
    const PrimePower pp = prime_power(p.q);
    std::vector<Rat> h(r.coeffs.b.begin(), r.coeffs.b.end());
    // hat(h)(1) = sum_{i<n} (1 + q^{n-i}) b_i + 2 h_n must equal m
    Int rest = p.m;
    for (int i = 0; i < n; ++i) rest -= (1 + pow_int(p.q, static_cast<unsigned long>(n - i))) * r.coeffs.b[static_cast<std::size_t>(i)];
    Rat hn = make_rat(rest, 2);
    if (mpz_divisible_p(rest.get_mpz_t(), pp.p.get_mpz_t())) {
        h[static_cast<std::size_t>(n - 1)] += 1;
        hn -= make_rat(p.q + 1, 2);
        r.adjusted = true;
    }
    h.push_back(hn);
    r.hInt = RatPoly(std::move(h));
    r.fHat = to_int(hat(r.hInt, n, p.q));
    return r;
}

ExpResult build_candidate(const ExpParams& p) {
    ExpResult r = assemble_candidate(p);
    r.certificate = certify(make_candidate(r.fHat, p.q, "exp"), true);
    r.disk = certify_nonvanishing(r.hInt, p.q);
    if (!r.disk.nonvanishing) throw ConstructionFailed("disk-cert", "h not certified nonvanishing on |z| <= q^{-1/2}");
    if (r.certificate.hondaTate != HondaTate::VerifiedOrdinary || r.certificate.order != p.m)
        throw ConstructionFailed("weil-cert", "certificate rejected: " + r.certificate.note);
    return r;
}

FeasibilityReport check_feasible(const Int& q, int n) {
    if (n < 2) throw std::invalid_argument("check_feasible: n >= 2");
    FeasibilityReport f;
    f.q = q;
    f.n = n;
    f.s = compute_s(q);
    const long bits = 128 + 2 * n * log2_ceil(q);
    const TruncSeries J = series_exp(j_exponent(f.s, q), n);
    const RatInterval x1 = q_half_power(q, -1, bits);  // q^{-1/2}
    f.tailHalf = J.tail_bound(x1, bits);
    f.tailFull = J.tail_bound(RatInterval(make_rat(1, q)), bits);
    f.headAtOne = 0;
    for (const auto& c : J.coeffs) f.headAtOne += c;
    const Rat qn2 = q_half_power(q, n, bits).hi, qmn2 = q_half_power(q, -n, bits).hi;
    const Rat sq = sqrt_q(q, bits).hi;
    f.correction = (Rat(q) + 2 * sq + 1) / 2 * qmn2;
    f.lhs = f.tailHalf + qn2 / 2 * f.tailFull + qmn2 / 2 * f.headAtOne + f.correction;
    const Rat jHalf = J.value(x1, bits).hi;
    f.rhs = 1 / jHalf;
    f.main = f.lhs < f.rhs;
    const Rat j34 = J.value(RatInterval(make_rat(3, 4)), bits).hi;
    f.simplerLhs = (1 + x1.hi / 2) * f.tailHalf + pow_rat(make_rat(4, 3) * x1.hi, n) / 2 * j34 + f.correction;
    f.simpler = f.simplerLhs < f.rhs;
    if (q >= 7) {
        const RatInterval x2 = RatInterval(2) * x1;
        const Rat prod = jHalf * J.value(x2, bits).hi;
        f.q7 = pow_rat(Rat(2), n - 1) > prod;
    }
    if (q >= 16) {
        for (long b = 64;; b *= 2) {
            const RatInterval t = three_root_q_log_q(q, b);
            if (Rat(n) > t.hi) { f.q16 = true; break; }
            if (Rat(n) < t.lo) break;
        }
    }
    return f;
}

N0Result find_n0(const Int& q, int scanLimit) {
    N0Result r;
    r.q = q;
    int nStar = 0;
    for (int n = 2; n <= scanLimit; ++n)
        if (check_feasible(q, n).simpler) {
            nStar = n;
            break;
        }
    if (nStar == 0) throw std::runtime_error("find_n0: weakened inequality not reached within the scan limit");
    r.nStar = nStar;
    std::vector<FeasibilityReport> down;
    int n0 = nStar;
    down.push_back(check_feasible(q, nStar));
    while (n0 > 2) {
        FeasibilityReport f = check_feasible(q, n0 - 1);
        down.push_back(f);
        if (!f.main) break;
        --n0;
    }
    r.n0 = n0;
    r.transcript.assign(down.rbegin(), down.rend());
    for (long b = 64;; b *= 2) {
        const RatInterval t = three_root_q_log_q(q, b);
        if (t.lo > Rat(n0)) { r.beatsThreeRootQLogQ = true; break; }
        if (t.hi < Rat(n0)) break;
    }
    return r;
}

}  // namespace weil
