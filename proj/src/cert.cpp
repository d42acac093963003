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

#include "weil/cert.hpp"

#include "weil/ffpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "weil/quad.hpp"
#include "weil/sturm.hpp"

namespace weil {

WeilCandidate make_candidate(IntPoly f, const Int& q, std::string provenance) {
    if (f.degree() < 2 || f.degree() % 2) throw std::invalid_argument("make_candidate: degree must be even and positive");
    const PrimePower pp = prime_power(q);
    WeilCandidate w;
    w.q = q;
    w.p = pp.p;
    w.e = pp.e;
    w.n = f.degree() / 2;
    w.f = std::move(f);
    w.provenance = std::move(provenance);
    return w;
}

const char* to_string(HondaTate h) {
    switch (h) {
        case HondaTate::VerifiedOrdinary: return "VerifiedOrdinary";
        case HondaTate::VerifiedPrimeQ: return "VerifiedPrimeQ";
        case HondaTate::VerifiedNewton: return "VerifiedNewton";
        case HondaTate::Unknown: return "Unknown";
        case HondaTate::Failed: return "Failed";
    }
    return "Failed";
}

HondaTate honda_tate_from_string(const std::string& s) {
    for (HondaTate h : {HondaTate::VerifiedOrdinary, HondaTate::VerifiedPrimeQ, HondaTate::VerifiedNewton,
                        HondaTate::Unknown, HondaTate::Failed})
        if (s == to_string(h)) return h;
    throw std::invalid_argument("unknown verdict: " + s);
}

std::vector<NewtonSegment> newton_polygon(const IntPoly& f, const Int& p) {
    struct Pt {
        int x;
        int v;
    };
    std::vector<Pt> hull;
    for (int i = 0; i <= f.degree(); ++i) {
        const Int& a = f.c[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        Pt pt{i, valuation(a, p)};
        // pop while the last vertex lies on or above the chord to pt
        while (hull.size() >= 2) {
            const Pt& o = hull[hull.size() - 2];
            const Pt& m = hull.back();
            const long cross = static_cast<long>(m.x - o.x) * (pt.v - o.v) - static_cast<long>(m.v - o.v) * (pt.x - o.x);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    std::vector<NewtonSegment> out;
    for (std::size_t k = 1; k < hull.size(); ++k) {
        NewtonSegment s;
        s.start = hull[k - 1].x;
        s.length = hull[k].x - hull[k - 1].x;
        s.slope = make_rat(hull[k - 1].v - hull[k].v, s.length);
        out.push_back(s);
    }
    return out;
}

RatPoly hat(const RatPoly& h, int n, const Int& q) {
    if (h.degree() >= 2 * n) throw std::invalid_argument("hat: deg h must be < 2n");
    std::vector<Rat> v(static_cast<std::size_t>(2 * n) + 1, Rat(0));
    for (int i = 0; i <= h.degree(); ++i) {
        const Rat& a = h.c[static_cast<std::size_t>(i)];
        v[static_cast<std::size_t>(2 * n - i)] += a;
        v[static_cast<std::size_t>(i)] += a * pow_rat(Rat(q), n - i);
    }
    return RatPoly(std::move(v));
}

IntPoly hat(const IntPoly& h, int n, const Int& q) {
    if (h.degree() >= 2 * n) throw std::invalid_argument("hat: deg h must be < 2n");
    if (h.degree() > n) return to_int(hat(to_rat(h), n, q));
    std::vector<Int> v(static_cast<std::size_t>(2 * n) + 1, Int(0));
    for (int i = 0; i <= h.degree(); ++i) {
        const Int& a = h.c[static_cast<std::size_t>(i)];
        v[static_cast<std::size_t>(2 * n - i)] += a;
        v[static_cast<std::size_t>(i)] += a * pow_int(q, static_cast<unsigned long>(n - i));
    }
    return IntPoly(std::move(v));
}

bool is_q_symmetric(const IntPoly& f, const Int& q, int n) {
    if (f.degree() != 2 * n) throw std::invalid_argument("is_q_symmetric: degree mismatch");
    Int qk = 1;  // q^{n-i}, built from i = n-1 downward
    for (int i = n - 1; i >= 0; --i) {
        qk *= q;
        if (f[static_cast<std::size_t>(i)] != qk * f[static_cast<std::size_t>(2 * n - i)]) return false;
    }
    return true;
}

IntPoly to_companion(const IntPoly& f, const Int& q) {
    if (f.degree() < 0 || f.degree() % 2) throw std::invalid_argument("to_companion: odd degree");
    const int n = f.degree() / 2;
    if (!is_q_symmetric(f, q, n)) throw std::invalid_argument("to_companion: not q-symmetric");
    // x^{n-k} (x^2 + q)^k has top term x^{n+k}; peel from k = n down.
    std::vector<IntPoly> powers(static_cast<std::size_t>(n) + 1);
    powers[0] = IntPoly::constant(1);
    const IntPoly base{q, Int(0), Int(1)};
    for (int k = 1; k <= n; ++k) powers[static_cast<std::size_t>(k)] = powers[static_cast<std::size_t>(k - 1)] * base;
    IntPoly rest = f;
    std::vector<Int> g(static_cast<std::size_t>(n) + 1, Int(0));
    for (int k = n; k >= 0; --k) {
        const Int gk = rest[static_cast<std::size_t>(n + k)];
        g[static_cast<std::size_t>(k)] = gk;
        if (gk != 0) rest -= (powers[static_cast<std::size_t>(k)] * gk).shifted(static_cast<std::size_t>(n - k));
    }
    if (!rest.is_zero()) throw std::logic_error("to_companion: nonzero remainder");
    return IntPoly(std::move(g));
}

IntPoly from_companion(const IntPoly& g, const Int& q) {
    const int n = g.degree();
    IntPoly out;
    IntPoly pw = IntPoly::constant(1);
    const IntPoly base{q, Int(0), Int(1)};
    for (int k = 0; k <= n; ++k) {
        const Int& gk = g.c[static_cast<std::size_t>(k)];
        if (gk != 0) out += (pw * gk).shifted(static_cast<std::size_t>(n - k));
        pw = pw * base;
    }
    return out;
}

bool companion_roots_in_range(const IntPoly& g, const Int& q) {
    if (g.degree() <= 0) return true;
    const IntPoly s = squarefree_part(g);
    return count_roots_closed(s, -two_sqrt(q), two_sqrt(q)) == s.degree();
}

bool roots_on_circle(const IntPoly& f, const Int& q) { return companion_roots_in_range(to_companion(f, q), q); }

int p_rank(const IntPoly& f, const Int& p) {
    for (int i = 0; i <= f.degree(); ++i)
        if (!mpz_divisible_p(f.c[static_cast<std::size_t>(i)].get_mpz_t(), p.get_mpz_t())) return f.degree() - i;
    return 0;
}

namespace {

FFPoly residual(const IntPoly& f, const NewtonSegment& s, const Int& p) {
    const long b = s.slope.get_den().get_si(), a = s.slope.get_num().get_si();
    const int v0 = valuation(f.c[static_cast<std::size_t>(s.start)], p);
    std::vector<long> r;
    for (long t = 0; t * b <= s.length; ++t) {
        const Int& c = f.c[static_cast<std::size_t>(s.start + t * b)];
        const long line = v0 - t * a;
        if (c == 0 || valuation(c, p) > line) {
            r.push_back(0);
            continue;
        }
        const Int unit = c / pow_int(p, static_cast<unsigned long>(line));
        r.push_back(mod_floor(unit, p).get_si());
    }
    return FFPoly(p.get_si(), std::move(r));
}

// f(x + c)
IntPoly translate(const IntPoly& f, const Int& c) {
    IntPoly r;
    const IntPoly lin{c, Int(1)};
    for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) r = r * lin + IntPoly{*it};
    return r;
}

constexpr int kClusterDepth = 48;

bool cluster_degrees(const IntPoly& f, const NewtonSegment& s, const Int& p, int depth, std::vector<int>& out) {
    const FFPoly res = residual(f, s, p);
    const int b = static_cast<int>(s.slope.get_den().get_si());
    if (is_squarefree(res)) {
        for (int k : factor_degrees(res)) out.push_back(k * b);
        return true;
    }
    if (b != 1 || depth >= kClusterDepth) return false;
    // integer slope: split off each repeated residual root c and refine the roots alpha = p^a (c + O(p))
    const Int shift = pow_int(p, static_cast<unsigned long>(s.slope.get_num().get_si()));
    FFPoly rest = res;
    for (long c : roots(res)) {
        const FFPoly lin(res.p, {-c, 1});
        int mult = 0;
        while (rest.degree() > 0) {
            auto [qq, rr] = divmod(rest, lin);
            if (!rr.is_zero()) break;
            rest = qq;
            ++mult;
        }
        if (mult == 1) {
            out.push_back(1);
            continue;
        }
        const IntPoly h = translate(f, shift * c);
        int covered = 0;
        for (const auto& t : newton_polygon(h, p)) {
            if (t.slope <= s.slope) continue;
            if (!cluster_degrees(h, t, p, depth + 1, out)) return false;
            covered += t.length;
        }
        if (covered != mult) return false;
    }
    if (rest.degree() > 0) {
        if (!is_squarefree(rest)) return false;
        for (int k : factor_degrees(rest)) out.push_back(k);
    }
    return true;
}

}  // namespace

std::vector<int> segment_factor_degrees(const IntPoly& f, const NewtonSegment& s, const Int& p) {
    if (!p.fits_slong_p()) return {};
    std::vector<int> out;
    if (!cluster_degrees(f, s, p, 0, out)) return {};
    std::sort(out.begin(), out.end());
    return out;
}

HondaTate newton_verdict(const IntPoly& f, const PrimePower& pp, std::string* why) {
    const Int e(pp.e);
    bool unknown = false;
    for (const auto& [mu, fi] : squarefree_decomposition(f)) {
        const auto segs = newton_polygon(fi, pp.p);
        if (!segs.empty() && segs.front().start != 0) {
            unknown = true;  // root at 0; cannot occur for a Weil polynomial
            continue;
        }
        for (const auto& s : segs) {
            // sigma = a/b is the p-adic root valuation; every Q_p-factor on this segment has degree k*b and
            // contributes mu * k * a / e to the (d') quantity.
            const Int a = s.slope.get_num(), b = s.slope.get_den();
            if (mpz_divisible_p(Int(mu * a).get_mpz_t(), e.get_mpz_t())) continue;
            // p-regular segment: the residual polynomial fixes the Q_p-factor degrees exactly
            if (const auto degs = segment_factor_degrees(fi, s, pp.p); !degs.empty()) {
                for (int k : degs)
                    if (!mpz_divisible_p(Int(mu * k * a / b).get_mpz_t(), e.get_mpz_t())) {
                        if (why) *why = "(d') fails on a Q_p-factor of degree " + std::to_string(k) +
                                        " and slope " + Rat(s.slope / e).get_str();
                        return HondaTate::Failed;
                    }
                continue;
            }
            if (Int(s.length) == b) {
                if (why) *why = "(d') fails on a Newton segment of slope " + Rat(s.slope / e).get_str();
                return HondaTate::Failed;
            }
            const Rat total = Rat(mu) * s.slope * s.length / e;
            if (total.get_den() != 1) {
                if (why) *why = "(d') fails: segment total " + total.get_str() + " is not integral";
                return HondaTate::Failed;
            }
            unknown = true;
        }
    }
    if (unknown) {
        if (why) *why = "(d') needs a Q_p-factorization of a fractional-slope segment";
        return HondaTate::Unknown;
    }
    return HondaTate::VerifiedNewton;
}

Certificate certify(const WeilCandidate& w, bool requireOrdinary) {
    Certificate c;
    const IntPoly& f = w.f;
    c.order = f.eval(Int(1));
    c.monic = w.n >= 1 && f.degree() == 2 * w.n && f.is_monic();
    if (!c.monic) {
        c.note = "(a) not monic of degree 2n";
        return c;
    }
    c.pRank = p_rank(f, w.p);
    c.ordinary = !mpz_divisible_p(f.c[static_cast<std::size_t>(w.n)].get_mpz_t(), w.p.get_mpz_t());
    c.qSymmetric = is_q_symmetric(f, w.q, w.n);
    if (!c.qSymmetric) {
        c.squarefree = is_squarefree(f);
        c.note = "(b) not q-symmetric";
        return c;
    }
    const IntPoly g = to_companion(f, w.q);
    c.rootsOnCircle = companion_roots_in_range(g, w.q);
    c.squarefree = is_squarefree(g) && sign_at(g, two_sqrt(w.q)) != 0 && sign_at(g, -two_sqrt(w.q)) != 0;
    if (!c.rootsOnCircle) {
        c.note = "(c) a root lies off |x| = sqrt(q)";
        return c;
    }
    if (c.ordinary) {
        c.hondaTate = HondaTate::VerifiedOrdinary;
    } else if (requireOrdinary) {
        c.note = "(d) p divides the middle coefficient";
    } else if (w.e == 1) {
        c.hondaTate = HondaTate::VerifiedPrimeQ;
    } else {
        c.hondaTate = newton_verdict(f, PrimePower{w.q, w.p, w.e}, &c.note);
    }
    return c;
}

RatInterval tau(const RatInterval& x, long bits) {
    RatInterval d = sqr(x) - RatInterval(1);
    if (d.lo < 0) d.lo = 0;
    return x + sqrt(d, bits);
}

IntervalReport interval_report(const Int& q, int n, long bits) {
    IntervalReport r;
    r.q = q;
    r.n = n;
    const RatInterval s = sqrt_q(q, bits + 8);
    const RatInterval qi(q), two(2);
    r.weilLo = qi - two * s + RatInterval(1);
    r.weilHi = qi + two * s + RatInterval(1);
    r.hasseWeilLo = pow(r.weilLo, static_cast<unsigned long>(n));
    r.hasseWeilHi = pow(r.weilHi, static_cast<unsigned long>(n));
    const RatInterval half(make_rat(1, 2));
    r.attainedLo = tau(qi * half - s + RatInterval(make_rat(3, 2)), bits);
    r.attainedHi = tau(qi * half + s - half, bits);
    const RatInterval invq(make_rat(1, q));
    r.simplifiedLo = pow(qi - two * s + RatInterval(3) - invq, static_cast<unsigned long>(n));
    r.simplifiedHi = pow(qi + two * s - RatInterval(1) - invq, static_cast<unsigned long>(n));
    const Int fl = isqrt_floor(4 * q);
    const Int cl = fl * fl == 4 * q ? fl : fl + 1;
    r.innerLo = Rat(q - fl + 3);
    r.innerHi = Rat(q + fl - 1) - make_rat(1, q);
    r.outerLo = Rat(q - cl + 2);
    r.outerHi = Rat(q + cl);
    return r;
}

}  // namespace weil
