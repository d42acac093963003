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

#include "weil/chebyshev.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace weil {

namespace {

// Minimal owning MPFR value; every operand of one run shares the precision of the run.
class Real {
   public:
    explicit Real(long prec) { mpfr_init2(v_, prec); mpfr_set_ui(v_, 0, MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    ~Real() { mpfr_clear(v_); }
    static Real of(const Rat& x, long prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Int& x, long prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    long prec() const { return mpfr_get_prec(v_); }
    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    int sign() const { return mpfr_sgn(v_); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    Real pow(unsigned long k) const {
        Real r(prec());
        mpfr_pow_ui(r.v_, v_, k, MPFR_RNDN);
        return r;
    }
    Int floor() const {
        Int z;
        mpfr_get_z(z.get_mpz_t(), v_, MPFR_RNDD);
        return z;
    }
    Rat frac() const {  // x - floor(x), as a rational
        Rat x;
        mpfr_get_q(x.get_mpq_t(), v_);
        return x - Rat(floor());
    }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // floor(log2 |x|) + 1; very negative for 0
    long exponent() const { return mpfr_zero_p(v_) ? -(1L << 40) : static_cast<long>(mpfr_get_exp(v_)); }

   private:
    mpfr_t v_;
};

using RealVec = std::vector<Real>;

RealVec mul(const RealVec& a, const RealVec& b, std::size_t cap) {
    const long prec = a.empty() ? b.front().prec() : a.front().prec();
    RealVec out(std::min(cap, a.size() + b.size() - 1), Real(prec));
    Real t(prec);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].sign() == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j < out.size(); ++j) {
            t = a[i];
            t *= b[j];
            out[i + j] += t;
        }
    }
    return out;
}

RealVec power(const RealVec& a, unsigned long k, std::size_t cap) {
    RealVec r{Real::of(Rat(1), a.front().prec())};
    RealVec base = a;
    while (k) {
        if (k & 1UL) r = mul(r, base, cap);
        k >>= 1UL;
        if (k) base = mul(base, base, cap);
    }
    return r;
}

Real eval(const RealVec& a, const Real& x) {
    Real r(x.prec());
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        r *= x;
        r += *it;
    }
    return r;
}

// Coefficient of x^pos in hat(h) = x^{2n} h(1/x) + q^n h(x/q): h_{2n-pos} + q^{n-pos} h_pos.
Real hat_coeff(const RealVec& h, int n, int pos, const Real& qr) {
    const long prec = qr.prec();
    Real v(prec);
    const auto j = static_cast<std::size_t>(2 * n - pos);
    if (j < h.size()) v += h[j];
    if (static_cast<std::size_t>(pos) < h.size()) {
        Real t = h[static_cast<std::size_t>(pos)];
        if (pos < n)
            t *= qr.pow(static_cast<unsigned long>(n - pos));
        else
            t /= qr.pow(static_cast<unsigned long>(pos - n));
        v += t;
    }
    return v;
}

// Largest log2 magnitude among the terms of the hat coefficients of h.
long hat_magnitude(const RealVec& h, int n, double log2q) {
    long best = -(1L << 40);
    for (std::size_t j = 0; j < h.size(); ++j) {
        const long e = h[j].exponent();
        const long up = static_cast<int>(j) < n ? static_cast<long>(std::ceil((n - static_cast<int>(j)) * log2q)) : 0;
        best = std::max(best, e + up);
    }
    return best;
}

// hat(k)(1) = k(1) + q^n k(1/q), deg k < 2n.
Real hat_at_one(const RealVec& k, int n, const Real& qr) {
    const long prec = qr.prec();
    const Real one = Real::of(Rat(1), prec);
    return eval(k, one) + qr.pow(static_cast<unsigned long>(n)) * eval(k, one / qr);
}

// Least integer T >= v with T == g mod L; false when v lies within 2^errExp of an integer,
// errExp being the log2 of the accumulated rounding error.
bool window_target(const Real& v, const Int& g, const Int& L, long errExp, Int& T) {
    if (errExp >= -8) return false;
    const Rat fr = v.frac();
    const Rat guard = make_rat(Int(1), Int(1) << static_cast<mp_bitcnt_t>(-errExp));
    if (fr < guard || Rat(1) - fr < guard) return false;
    const Int c = v.floor() + 1;
    Int off = (g - c) % L;
    if (off < 0) off += L;
    T = c + off;
    return true;
}

Real to_real(const QuadNum& x, long prec) {
    const RatInterval e = x.enclose(prec + 8);
    return Real::of((e.lo + e.hi) / 2, prec);
}

// Exact count of real roots of a Q(sqrt q) polynomial via its Sturm chain.
int real_root_count(const QuadPoly& p) {
    if (p.degree() <= 0) return 0;
    std::vector<QuadPoly> chain{p, p.derivative()};
    while (chain.back().degree() > 0) {
        QuadPoly a = chain[chain.size() - 2];
        const QuadPoly& b = chain.back();
        // a mod b
        while (!a.is_zero() && a.degree() >= b.degree()) {
            const QuadNum f = a.lead() / b.lead();
            a -= b.shifted(static_cast<std::size_t>(a.degree() - b.degree())) * f;
        }
        if (a.is_zero()) break;
        chain.push_back(-a);
    }
    auto variations = [&](bool negInf) {
        int v = 0, last = 0;
        for (const auto& s : chain) {
            int sg = s.lead().sign();
            if (negInf && s.degree() % 2 == 1) sg = -sg;
            if (sg == 0) continue;
            if (last != 0 && sg != last) ++v;
            last = sg;
        }
        return v;
    };
    return variations(true) - variations(false);
}

QuadNum pow_quad(const QuadNum& x, unsigned long k) {
    QuadNum r(1), b = x;
    while (k) {
        if (k & 1UL) r *= b;
        k >>= 1UL;
        if (k) b *= b;
    }
    return r;
}

}  // namespace

IntPoly chebyshev_T(int k) {
    if (k < 0) throw std::invalid_argument("chebyshev_T: k >= 0");
    IntPoly prev{Int(1)}, cur{Int(0), Int(1)};
    if (k == 0) return prev;
    const IntPoly twoX{Int(0), Int(2)};
    for (int i = 1; i < k; ++i) {
        IntPoly next = twoX * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<RatInterval, RatInterval> attained_interval(const Int& q, long bits) {
    const IntervalReport r = interval_report(q, 1, bits);
    return {r.attainedLo, r.attainedHi};
}

ChebySeed build_P(const Int& q, int d, const Rat& eps, bool certify) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("build_P: d must be even and >= 2");
    if (eps <= 0 || eps >= 1) throw std::invalid_argument("build_P: 0 < eps < 1");
    ChebySeed s;
    s.q = q;
    s.d = d;
    s.epsilon = eps;
    const int k = d / 2;
    const QuadNum rq = QuadNum::sqrt_of(q);
    // z * l(z + 1/z) = (sqrt q / 2) z^2 - (sqrt q - 1) z + sqrt q / 2
    const QuadPoly Y{rq / QuadNum(2), -(rq - QuadNum(1)), rq / QuadNum(2)};
    const IntPoly T = chebyshev_T(k);
    QuadPoly f;
    QuadPoly Yj = QuadPoly::constant(QuadNum(1));
    for (int j = 0; j <= k; ++j) {
        const Int& t = T[static_cast<std::size_t>(j)];
        if (t != 0) f += Yj.shifted(static_cast<std::size_t>(k - j)) * QuadNum(t);
        if (j < k) Yj = Yj * Y;
    }
    // 2 q^{-d/4} = 2 q^{-k/2}
    QuadNum pre = QuadNum(2) / pow_quad(QuadNum(q), static_cast<unsigned long>(k / 2));
    if (k % 2 == 1) pre /= rq;
    f *= pre;
    s.P = f.scaled((QuadNum(1) - QuadNum(eps)) * rq);
    s.unitAtZero = s.P[0] == QuadNum(1);
    const long bits = 64 + 4L * d;
    const RatInterval e = RatInterval(make_rat(2, d));
    const RatInterval pPlus = s.P.eval(QuadNum(make_rat(1, q))).enclose(bits);
    const RatInterval pMinus = s.P.eval(QuadNum(make_rat(-1, q))).enclose(bits);
    if (pPlus.lo <= 0 || pMinus.lo <= 0) throw std::logic_error("build_P: nonpositive value at +-1/q");
    s.leftEnd = RatInterval(Rat(q)) * pow_frac(pPlus, Rat(e.lo), 96);
    s.rightEnd = RatInterval(Rat(q)) * pow_frac(pMinus, Rat(e.lo), 96);
    s.floorBound = q_half_power(q, -k, 128).hi;
    if (certify) {
        s.positiveOnR = s.unitAtZero && real_root_count(s.P) == 0;
        s.disk = certify_nonvanishing(s.P, q);
        s.diskBound = s.disk.nonvanishing && s.disk.mu >= s.floorBound;
    }
    return s;
}

LedgerShape ledger_shape(const Int& q, int n, int d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("ledger_shape: d even");
    // smallest integer >= 4 log_q n
    const RatInterval lg = RatInterval(4) * log_enclosure(Rat(n), 96) / log_enclosure(Rat(q), 96);
    int ell = static_cast<int>(ceil_rat(lg.lo).get_si());
    if (Rat(ell) < lg.hi && Rat(ell) > lg.lo) ++ell;  // undecided: stay on the safe side
    if (ell < 1) ell = 1;
    for (; 2 * n - 2 * ell > 0; ++ell)
        if ((2 * n - 2 * ell) % d == 0) return {ell, (2 * n - 2 * ell) / d};
    throw std::invalid_argument("ledger_shape: n too small for this d");
}

QChoice choose_Q(const ChebySeed& seed, int n, const Int& m, int b, long bits) {
    const Int qn = pow_int(seed.q, static_cast<unsigned long>(n));
    const auto F = [&](const Rat& s) {
        const QuadNum a = seed.P.eval(QuadNum(s / seed.q));
        const QuadNum c = seed.P.eval(QuadNum(s));
        return (QuadNum(qn) * pow_quad(a, static_cast<unsigned long>(b)) + pow_quad(c, static_cast<unsigned long>(b)) -
                QuadNum(m))
            .sign();
    };
    // P small at 1/q and large at -1/q: F(1) < 0 < F(-1)
    Rat lo(-1), hi(1);
    const int fl = F(lo), fh = F(hi);
    if (!(fl > 0 && fh < 0)) throw ConstructionFailed("containment", "m is not bracketed by s = -1 and s = 1");
    // relative width 2^-bits, absolute floor 2^-(4 bits)
    const Rat rel = make_rat(Int(1), Int(1) << static_cast<mp_bitcnt_t>(bits));
    const Rat floorWidth = make_rat(Int(1), Int(1) << static_cast<mp_bitcnt_t>(4 * bits));
    while (hi - lo > floorWidth && (lo * hi <= 0 || hi - lo > rel * std::min(abs(lo), abs(hi)))) {
        const Rat mid = (lo + hi) / 2;
        const int fm = F(mid);
        if (fm == 0) {
            lo = hi = mid;
            break;
        }
        (fm > 0 ? lo : hi) = mid;
    }
    return {RatInterval(lo, hi), (lo + hi) / 2};
}

LedgerTarget ledger_target(const CongruenceTarget& t) { return {t.L, t.gCoeffs}; }

LedgerTarget trivial_target(int n) { return {Int(1), std::vector<Int>(static_cast<std::size_t>(2 * n + 1), Int(0))}; }

namespace {

LedgerResult ledger_at(const ChebySeed& seed, int n, const Int& m, const LedgerTarget& target, const QChoice& qc,
                       const LedgerShape& shape, long prec) {
    LedgerResult res;
    res.n = n;
    res.m = m;
    res.shape = shape;
    res.qChoice = qc;
    res.precision = prec;
    const int d = seed.d;
    const Int& L = target.L;
    const int ell = shape.ell;
    const auto b = static_cast<unsigned long>(shape.b);
    const double log2q = std::log2(seed.q.get_d());
    const long opsBits = 40 + static_cast<long>(std::log2(static_cast<double>(n * d)));
    const auto cap = static_cast<std::size_t>(2 * n);
    const Real qr = Real::of(seed.q, prec);
    const Real one = Real::of(Rat(1), prec);

    // Q = P(s z)
    RealVec Q;
    {
        const QuadPoly Pq = seed.P.scaled(QuadNum(qc.sMid));
        for (const auto& c : Pq.c) Q.push_back(to_real(c, prec));
        Q.resize(static_cast<std::size_t>(d + 1), Real(prec));
    }
    std::vector<Int> committed(static_cast<std::size_t>(2 * n + 1), Int(0));  // hat coefficients, by position
    committed[static_cast<std::size_t>(2 * n)] = 1;
    auto drift = [&](const RealVec& h, int upto) {
        // committed positions 2n-1 .. 2n-upto must not move
        for (int i = 1; i <= upto; ++i) {
            const Real v = hat_coeff(h, n, 2 * n - i, qr) - Real::of(committed[static_cast<std::size_t>(2 * n - i)], prec);
            res.maxDrift = std::max(res.maxDrift, std::fabs(v.to_double()));
        }
    };

    // a_i stage: Q_i = Q_{i-1} + a_i z^i, hat(Q_i^b) coefficient at 2n - i lands on the target
    const Real bReal = Real::of(Int(static_cast<long>(b)), prec);
    RealVec aReal;
    for (int i = 1; i < d; ++i) {
        const RealVec h0 = power(Q, b, cap);
        const Real v0 = hat_coeff(h0, n, 2 * n - i, qr);
        long qExp = 0;
        for (const auto& x : Q) qExp = std::max(qExp, x.exponent());
        qExp += static_cast<long>(std::ceil(std::log2(d + 1.0)));
        const long errA = std::max(static_cast<long>(b) * qExp, hat_magnitude(h0, n, log2q)) + opsBits - prec;
        Int T;
        if (!window_target(v0, target.g[static_cast<std::size_t>(2 * n - i)], L, errA, T)) {
            res.failedStage = "a_" + std::to_string(i) + ": window ambiguity";
            return res;
        }
        const Real goal = Real::of(T, prec);
        // slope b up to the q^{i-n} h_{2n-i} term: Newton from (T - v0)/b
        Real a = (goal - v0) / bReal;
        for (int it = 0; it < 8; ++it) {
            RealVec Qa = Q;
            Qa[static_cast<std::size_t>(i)] += a;
            const Real v = hat_coeff(power(Qa, b, cap), n, 2 * n - i, qr);
            const Real err = v - goal;
            a -= err / bReal;
            if (std::fabs(err.to_double()) < 1e-30) break;
        }
        const double ad = a.to_double();
        if (ad < 0 || ad >= Rat(Rat(L) / Rat(static_cast<long>(b))).get_d() * (1 + 1e-12)) {
            res.failedStage = "a_" + std::to_string(i) + ": out of [0, L/b)";
            return res;
        }
        Q[static_cast<std::size_t>(i)] += a;
        res.a.push_back(ad);
        aReal.push_back(a);
        committed[static_cast<std::size_t>(2 * n - i)] = T;
    }

    // c stage: Qt = Q_{d-1} - c z^d with hat(Qt^b)(1) = m, c in [0, c']
    Real cPrime(prec);
    for (int i = 1; i < d; ++i) cPrime += qr.pow(static_cast<unsigned long>(d - i)) * aReal[static_cast<std::size_t>(i - 1)];
    res.cPrime = cPrime.to_double();
    const Real mReal = Real::of(m, prec);
    const Real invQ = one / qr;
    const Real qn = qr.pow(static_cast<unsigned long>(n));
    const Real zd1 = one, zdq = invQ.pow(static_cast<unsigned long>(d));
    const Real base1 = eval(RealVec(Q.begin(), Q.end() - 1), one), baseq = eval(RealVec(Q.begin(), Q.end() - 1), invQ);
    const Real qd = Q[static_cast<std::size_t>(d)];
    auto F = [&](const Real& c) {
        const Real x1 = base1 + (qd - c) * zd1, xq = baseq + (qd - c) * zdq;
        return qn * xq.pow(b) + x1.pow(b) - mReal;
    };
    Real lo(prec), hi = cPrime;
    if (F(lo).sign() < 0 || F(hi).sign() > 0) {
        res.failedStage = "c: no sign change on [0, c']";
        return res;
    }
    for (long it = 0; it < prec; ++it) {
        const Real mid = (lo + hi) / Real::of(Rat(2), prec);
        (F(mid).sign() > 0 ? lo : hi) = mid;
    }
    Q[static_cast<std::size_t>(d)] -= lo;
    res.c = lo.to_double();
    const Real qt1 = eval(Q, one), qtq = eval(Q, invQ);
    res.qTildeAtOne = qt1.to_double();
    res.qTildeAtInvQ = qtq.to_double();
    if (qt1.sign() <= 0 || qtq.sign() <= 0) {
        res.failedStage = "c: Q~(1) or Q~(1/q) not positive";
        return res;
    }

    // correction polynomials k_d .. k_n
    std::vector<RealVec> qPow(b + 1);
    qPow[0] = RealVec{one};
    for (unsigned long a = 1; a <= b; ++a) qPow[a] = mul(qPow[a - 1], Q, cap);
    auto k_of = [&](int i) {
        RealVec out(static_cast<std::size_t>(i), Real(prec));
        if (i == n) {
            out.push_back(one / Real::of(Rat(2), prec));
            return out;
        }
        unsigned long a = b;
        if (i >= ell) a = static_cast<unsigned long>((2 * n - 2 * i - 1) / d);
        out.insert(out.end(), qPow[a].begin(), qPow[a].end());
        return out;
    };
    RealVec h = qPow[b];
    h.resize(cap, Real(prec));
    drift(h, d - 1);

    long runningMag = hat_magnitude(h, n, log2q);
    RealVec kCur = k_of(d);
    Real kCurOne = hat_at_one(kCur, n, qr);
    for (int i = d; i < n; ++i) {
        const Real v = hat_coeff(h, n, 2 * n - i, qr);
        runningMag = std::max(runningMag, hat_magnitude(h, n, log2q));
        Int T;
        if (!window_target(v, target.g[static_cast<std::size_t>(2 * n - i)], L, runningMag + opsBits - prec, T)) {
            res.failedStage = "r_" + std::to_string(i) + ": window ambiguity";
            return res;
        }
        const Real r = Real::of(T, prec) - v;
        RealVec kNext = k_of(i + 1);
        const Real kNextOne = hat_at_one(kNext, n, qr);
        const Real s = r * kCurOne / kNextOne;
        if (s.sign() < 0) {
            res.failedStage = "s_" + std::to_string(i + 1) + ": negative";
            return res;
        }
        for (std::size_t j = 0; j < kCur.size() && j < h.size(); ++j) h[j] += r * kCur[j];
        for (std::size_t j = 0; j < kNext.size() && j < h.size(); ++j) h[j] -= s * kNext[j];
        res.r.push_back(r.to_double());
        res.s.push_back(s.to_double());
        committed[static_cast<std::size_t>(2 * n - i)] = T;
        kCur = std::move(kNext);
        kCurOne = kNextOne;
    }
    drift(h, n - 1);

    // exact assembly: top half committed, bottom half by q-symmetry, middle forced by hat(1) = m
    std::vector<Int> f(static_cast<std::size_t>(2 * n + 1), Int(0));
    Int rest = m;
    for (int i = 0; i < n; ++i) {
        const Int top = committed[static_cast<std::size_t>(2 * n - i)];
        f[static_cast<std::size_t>(2 * n - i)] = top;
        f[static_cast<std::size_t>(i)] = top * pow_int(seed.q, static_cast<unsigned long>(n - i));
        rest -= top + f[static_cast<std::size_t>(i)];
    }
    f[static_cast<std::size_t>(n)] = rest;
    const Real midReal = hat_coeff(h, n, n, qr);
    res.maxDrift = std::max(res.maxDrift, std::fabs((midReal - Real::of(rest, prec)).to_double()));
    res.fHat = IntPoly(std::move(f));
    res.congruent = true;
    for (int i = 0; i <= 2 * n; ++i) {
        Int diff = (res.fHat[static_cast<std::size_t>(i)] - target.g[static_cast<std::size_t>(i)]) % L;
        if (diff != 0) res.congruent = false;
    }
    res.certificate = certify(make_candidate(res.fHat, seed.q, "chebyshev"), L != 1);
    if (!res.congruent)
        res.failedStage = "a posteriori: not congruent to g";
    else if (!res.certificate.rootsOnCircle)
        res.failedStage = "a posteriori: roots not on the circle";
    else if (res.certificate.order != m)
        res.failedStage = "a posteriori: order mismatch";
    else if (L != 1 && res.certificate.hondaTate != HondaTate::VerifiedOrdinary)
        res.failedStage = "a posteriori: " + res.certificate.note;
    res.success = res.failedStage.empty();
    return res;
}

}  // namespace

LedgerResult run_ledger(const ChebySeed& seed, int n, const Int& m, const LedgerTarget& target, long precision) {
    if (target.g.size() != static_cast<std::size_t>(2 * n + 1))
        throw std::invalid_argument("run_ledger: target length must be 2n + 1");
    if (n <= seed.d) throw std::invalid_argument("run_ledger: n must exceed d");
    const LedgerShape shape = ledger_shape(seed.q, n, seed.d);
    QChoice qc;
    try {
        qc = choose_Q(seed, n, m, shape.b, 128);
    } catch (const ConstructionFailed&) {
        LedgerResult res;
        res.n = n;
        res.m = m;
        res.shape = shape;
        res.failedStage = "containment";
        return res;
    }
    const bool fixed = precision != 0;
    if (!fixed) {
        // magnitudes: q^n and the b-th powers of P's coefficients
        double big = 1;
        for (const auto& c : seed.P.c) big = std::max(big, std::fabs(c.enclose(32).hi.get_d()));
        precision = 256 + static_cast<long>(2.0 * (n * std::log2(seed.q.get_d()) +
                                                   static_cast<double>(shape.b) * (std::log2(big) + seed.d)));
    }
    // geometric refinement on window ambiguity, all-or-nothing per run
    for (int attempt = 0;; ++attempt) {
        LedgerResult res = ledger_at(seed, n, m, target, qc, shape, precision);
        if (fixed || attempt == 4 || res.failedStage.find("ambiguity") == std::string::npos) return res;
        precision *= 2;
    }
}

}  // namespace weil
