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

#include "weil/interval_pipeline.hpp"

#include <stdexcept>

#include "weil/interval.hpp"

namespace weil {

namespace {

Int weight(const Int& q, int n, int j) { return pow_int(q, static_cast<unsigned long>(n - j)) + 1; }

// floor(q/2) * sum_{j=from}^{n} (q^{n-j} + 1)
Int capacity(const Int& q, int n, int from) {
    const Int k = q / 2;
    Int s = 0;
    for (int j = from; j <= n; ++j) s += weight(q, n, j);
    return k * s;
}

void check_seed(const RatPoly& h, int n) {
    if (n < 2) throw std::invalid_argument("interval: n >= 2");
    if (h.degree() > n) throw std::invalid_argument("interval: seed degree exceeds n");
    if (h[0] != 1) throw std::invalid_argument("interval: seed must satisfy h(0) = 1");
    for (int i = 1; i <= h.degree(); ++i) {
        const Rat c = h[static_cast<std::size_t>(i)];
        const Rat scaled = (i == n) ? c * 2 : c;
        if (scaled.get_den() != 1) throw std::invalid_argument("interval: seed coefficients must be integral (half-integral in degree n)");
    }
}

Int hat_at_one(const RatPoly& h, const Int& q, int n) {
    Rat v = 0;
    for (int i = 0; i <= h.degree(); ++i) v += h[static_cast<std::size_t>(i)] * (1 + pow_int(q, static_cast<unsigned long>(n - i)));
    if (v.get_den() != 1) throw std::logic_error("interval: hat(h)(1) not integral");
    return v.get_num();
}

}  // namespace

RealizedInterval realize_interval(const RatPoly& h, const Int& q, int n) {
    check_seed(h, n);
    RealizedInterval iv;
    iv.q = q;
    iv.n = n;
    iv.seed = h;
    iv.center = hat_at_one(h, q, n);
    const DiskCertificate d = certify_nonvanishing(h, q);
    if (!d.nonvanishing) throw ConstructionFailed("disk-cert", "seed not certified nonvanishing on |z| <= q^{-1/2}");
    iv.mu = d.mu;
    iv.muOrd = mu_ord(d.mu, q, n);
    if (iv.muOrd <= 0) throw ConstructionFailed("mu-ord", "mu_ord <= 0");
    const Rat k(q / 2);
    // suffix sums over i = r..n, upper bounds, built from r = n + 1 downward
    iv.r = n + 1;
    Rat tail = 0;
    for (int r = n; r >= 1; --r) {
        tail += k * q_half_power(q, -r, 96).hi;
        if (tail < iv.muOrd)
            iv.r = r;
        else
            break;  // the sums only grow as r decreases
    }
    iv.N = iv.r <= n ? capacity(q, n, iv.r) : Int(0);
    return iv;
}

std::vector<Rat> greedy_decomposition(const RealizedInterval& iv, const Int& M) {
    if (abs(M) > iv.N) throw std::out_of_range("interval: target outside the realized interval");
    const Int k = iv.q / 2;
    std::vector<Rat> out;
    Int R = M;
    for (int j = iv.r; j < iv.n; ++j) {
        const Int w = weight(iv.q, iv.n, j);
        const Int rest = capacity(iv.q, iv.n, j + 1);
        bool found = false;
        // candidates ordered 0, 1, -1, 2, -2, ...
        for (Int a = 0; a <= k && !found; ++a) {
            for (int sgn : {1, -1}) {
                if (a == 0 && sgn == -1) continue;
                const Int c = sgn * a;
                if (abs(R - c * w) <= rest) {
                    out.emplace_back(c);
                    R -= c * w;
                    found = true;
                    break;
                }
            }
        }
        if (!found) throw std::logic_error("interval: greedy step found no feasible coefficient");
    }
    if (iv.r <= iv.n) {
        // weight 2 at j = n; c_n = R/2 with |c_n| <= floor(q/2)
        const Rat cn = make_rat(R, 2);
        if (abs(cn) > Rat(k)) throw std::logic_error("interval: greedy residual exceeds the last window");
        out.push_back(cn);
    } else if (R != 0) {
        throw std::logic_error("interval: nonzero residual with empty window");
    }
    Int check = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        const Rat t = out[i] * weight(iv.q, iv.n, iv.r + static_cast<int>(i));
        check += t.get_num() / t.get_den();
    }
    if (check != M) throw std::logic_error("interval: greedy decomposition does not sum to M");
    return out;
}

IntervalWitness realize_integer(const RealizedInterval& iv, const Int& target) {
    IntervalWitness w;
    w.target = target;
    w.c = greedy_decomposition(iv, target - iv.center);
    const int n = iv.n;
    std::vector<Rat> H(static_cast<std::size_t>(n + 1), Rat(0));
    for (int i = 0; i <= iv.seed.degree(); ++i) H[static_cast<std::size_t>(i)] = iv.seed[static_cast<std::size_t>(i)];
    for (std::size_t i = 0; i < w.c.size(); ++i) H[static_cast<std::size_t>(iv.r) + i] += w.c[i];
    const Int p = prime_power(iv.q).p;
    const Rat mid = 2 * H[static_cast<std::size_t>(n)];  // middle coefficient of the hat
    if (mpz_divisible_p(mid.get_num().get_mpz_t(), p.get_mpz_t())) {
        H[static_cast<std::size_t>(n - 1)] += 1;
        H[static_cast<std::size_t>(n)] -= make_rat(iv.q + 1, 2);
        w.adjusted = true;
    }
    w.H = RatPoly(std::move(H));
    w.fHat = to_int(hat(w.H, n, iv.q));
    w.certificate = certify(make_candidate(w.fHat, iv.q, "interval"), true);
    w.disk = certify_nonvanishing(w.H, iv.q);
    if (!w.disk.nonvanishing) throw ConstructionFailed("disk-cert", "perturbed H not certified nonvanishing");
    if (w.certificate.hondaTate != HondaTate::VerifiedOrdinary || w.certificate.order != target)
        throw ConstructionFailed("weil-cert", "certificate rejected: " + w.certificate.note);
    return w;
}

}  // namespace weil
