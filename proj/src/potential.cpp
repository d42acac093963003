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

#include "weil/potential.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weil/disk.hpp"

namespace weil {

namespace {

constexpr mpfr_prec_t kPrec = 256;

struct Mp {
    mpfr_t v;
    Mp() { mpfr_init2(v, kPrec); }
    ~Mp() { mpfr_clear(v); }
    Mp(const Mp&) = delete;
    Mp& operator=(const Mp&) = delete;
};

Rat to_rat(const mpfr_t x) {
    Rat r;
    mpfr_get_q(r.get_mpq_t(), x);
    return r;
}

RatInterval horner(const std::vector<RatInterval>& f, const Rat& r, long bits) {
    RatInterval acc(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * RatInterval(r) + *it).rounded(bits);
    return acc;
}

bool exact_one(const RatInterval& x) { return x.lo == 1 && x.hi == 1; }

}  // namespace

QuadNum M_exact(const Rat& c, const Rat& r) {
    if (r > 1) throw std::invalid_argument("M: r <= 1");
    const Rat D = (1 - r) * (1 - r) + 4 * r * c * c;
    // sqrt(num/den) = sqrt(num * den) / den
    const Int num = D.get_num(), den = D.get_den();
    return QuadNum((1 - r) / 2, Rat(1) / (2 * Rat(den)), num * den);
}

RatInterval M_enclosure(const RatInterval& c, const Rat& r, long bits) {
    const RatInterval D = RatInterval((1 - r) * (1 - r)) + RatInterval(4 * r) * sqr(c);
    return (RatInterval((1 - r)) + sqrt(D, bits)) / RatInterval(2);
}

bool BoundReport::all_hold() const {
    return std::all_of(points.begin(), points.end(), [](const BoundPoint& p) { return p.upperOk && (!p.hasLower || p.lowerOk); });
}

namespace {

BoundReport run_grid(const std::vector<RatInterval>& f, const RatInterval& c, const std::vector<Rat>& grid, long bits,
                     BoundReport rep) {
    const Rat inv(make_rat(1, rep.d));
    for (const Rat& r : grid) {
        if (r < 0) throw std::invalid_argument("check_lower_bound: grid points r >= 0");
        BoundPoint pt;
        pt.r = r;
        pt.hasLower = r <= 1;
        if (r == 0) {
            // f(0) = 1 = M(0)
            pt.value = RatInterval(1);
            pt.lowerMargin = pt.upperMargin = RatInterval(0);
            pt.lowerOk = pt.upperOk = true;
            rep.points.push_back(pt);
            continue;
        }
        const RatInterval fr = abs(horner(f, r, bits));
        if (fr.positive())
            pt.value = pow_frac(fr, inv, bits);
        else if (fr.hi > 0)
            pt.value = RatInterval(Rat(0), pow_frac(RatInterval(fr.hi), inv, bits).hi);
        else
            pt.value = RatInterval(0);
        pt.upperMargin = M_enclosure(c, -r, bits) - pt.value;
        pt.upperOk = pt.upperMargin.lo >= 0;
        if (pt.hasLower) {
            pt.lowerMargin = pt.value - M_enclosure(c, r, bits);
            pt.lowerOk = pt.lowerMargin.lo >= 0;
        }
        rep.points.push_back(pt);
    }
    return rep;
}

}  // namespace

BoundReport check_lower_bound(const std::vector<RatInterval>& f, const RatInterval& c, const std::vector<Rat>& grid, long bits) {
    if (f.size() < 2) throw std::invalid_argument("check_lower_bound: degree >= 1");
    if (!exact_one(f[0])) throw std::invalid_argument("check_lower_bound: f(0) = 1 required");
    if (!(c.lo > 0) || !(c.hi < 1)) throw std::invalid_argument("check_lower_bound: 0 < c < 1");
    BoundReport rep;
    rep.d = static_cast<int>(f.size()) - 1;
    rep.c = c;
    const DiskCertificate dc = certify_nonvanishing(f, Rat(1));
    const RatInterval cd = pow(c, static_cast<unsigned long>(rep.d));
    if (!dc.nonvanishing || dc.mu < cd.hi) throw std::invalid_argument("check_lower_bound: membership in F(d, c) not certified");
    rep.mu = dc.mu;
    return run_grid(f, c, grid, bits, std::move(rep));
}

BoundReport check_lower_bound(const ChebySeed& seed, const std::vector<Rat>& grid, long bits) {
    if (!seed.certified()) throw std::invalid_argument("check_lower_bound: seed membership not certified");
    std::vector<RatInterval> f;
    for (int k = 0; k <= seed.P.degree(); ++k) {
        const QuadNum& a = seed.P[static_cast<std::size_t>(k)];
        f.push_back(a.is_rational() && k == 0 ? RatInterval(a.a) : (a.enclose(bits) * q_half_power(seed.q, -k, bits)).rounded(bits));
    }
    if (!exact_one(f[0])) throw std::invalid_argument("check_lower_bound: f(0) = 1 required");
    BoundReport rep;
    rep.d = seed.d;
    rep.c = pow_frac(RatInterval(Rat(seed.q)), make_rat(-1, 4), bits);
    rep.mu = seed.disk.mu;
    return run_grid(f, rep.c, grid, bits, std::move(rep));
}

RatInterval mu_c_potential(const Rat& c, const Rat& r, int nodes) {
    if (!(c > 0 && c < 1)) throw std::invalid_argument("mu_c_potential: 0 < c < 1");
    if (r > 1) throw std::invalid_argument("mu_c_potential: r <= 1");
    if (nodes < 8) throw std::invalid_argument("mu_c_potential: nodes >= 8");
    // supported on the unit circle
    if (r == 0) return RatInterval(0);
    const Rat h = 2 * c * c;
    const Rat t = (r + 1 / r - (2 - h)) / h;
    const double at = std::fabs(t.get_d());
    if (abs(t) <= 1 || at - 1 < 1e-12) throw std::domain_error("mu_c_potential: r lies on the arc");
    // |t - cos z| stays >= |t| - cosh(sigma) > 0 in the strip |Im z| < sigma
    const double sigma = std::acosh(at) / 2;
    const double lo = at - std::cosh(sigma), hi = at + std::cosh(sigma);
    const double bound = std::max(std::fabs(std::log(lo)), std::fabs(std::log(hi)));
    const double quadErr = 2 * bound / std::expm1(sigma * nodes);
    if (!(quadErr < 1e-3)) throw std::domain_error("mu_c_potential: r too close to the arc for the node count");
    Mp sum, term, theta, tt, pi;
    mpfr_set_zero(sum.v, 1);
    mpfr_set_q(tt.v, t.get_mpq_t(), MPFR_RNDN);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    for (int k = 0; k < nodes; ++k) {
        mpfr_mul_si(theta.v, pi.v, 2L * k, MPFR_RNDN);
        mpfr_div_si(theta.v, theta.v, nodes, MPFR_RNDN);
        mpfr_cos(term.v, theta.v, MPFR_RNDN);
        mpfr_sub(term.v, tt.v, term.v, MPFR_RNDN);
        mpfr_abs(term.v, term.v, MPFR_RNDN);
        mpfr_log(term.v, term.v, MPFR_RNDN);
        mpfr_sub(sum.v, sum.v, term.v, MPFR_RNDN);
    }
    mpfr_div_si(sum.v, sum.v, nodes, MPFR_RNDN);
    // U^arcsine(x0) = -log h + mean; U^{mu_c}(r) = (U^arcsine - log|r|) / 2
    const RatInterval mean = RatInterval(to_rat(sum.v));
    const RatInterval arcsine = mean - log_enclosure(h, 200);
    const RatInterval U = (arcsine - log_enclosure(abs(r), 200)) / RatInterval(2);
    // rounding: each of the few ops per node is within an ulp of 2^-256 relative, far below 2^-200
    const Rat slack = Rat(quadErr / 2) * make_rat(3, 2) + make_rat(Int(nodes), Int(1) << 200);
    return RatInterval(U.lo - slack, U.hi + slack);
}

std::vector<PotentialRow> potential_grid(int nodes) {
    std::vector<PotentialRow> rows;
    const std::vector<Rat> cs{make_rat(1, 4), make_rat(1, 2), make_rat(3, 4)};
    const std::vector<Rat> rs{Rat(-2), Rat(-1), make_rat(-1, 2), make_rat(1, 4), make_rat(1, 2), make_rat(9, 10)};
    for (const Rat& c : cs)
        for (const Rat& r : rs) {
            PotentialRow row;
            row.c = c;
            row.r = r;
            row.U = mu_c_potential(c, r, nodes);
            row.minusLogM = -log(M_exact(c, r).enclose(200), 200);
            const RatInterval diff = row.U - row.minusLogM;
            row.gap = std::max(std::fabs(diff.lo.get_d()), std::fabs(diff.hi.get_d()));
            rows.push_back(row);
        }
    return rows;
}

}  // namespace weil
