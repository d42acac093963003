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

#include "weil/congruence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "weil/cert.hpp"

namespace weil {

namespace {

long as_long(const Int& x, long p) { return mod_floor(x, Int(p)).get_si(); }

// |a| <= 2 sqrt q
long trace_bound(const Int& q) { return isqrt_floor(4 * q).get_si(); }

// Deterministic search for a monic degree-d polynomial mod ell accepted by pred: lexicographic over
// the low coefficients when ell^d is small, otherwise a seeded generator.
template <class Pred>
FFPoly search_poly(long ell, int d, unsigned long seed, Pred pred) {
    double space = 1;
    for (int i = 0; i < d; ++i) space *= static_cast<double>(ell);
    if (space <= 1e5) {
        const long total = static_cast<long>(space);
        for (long code = 0; code < total; ++code) {
            std::vector<long> c;
            long x = code;
            for (int i = 0; i < d; ++i, x /= ell) c.push_back(x % ell);
            c.push_back(1);
            FFPoly f(ell, std::move(c));
            if (pred(f)) return f;
        }
        throw std::runtime_error("search_poly: no admissible polynomial");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coef(0, ell - 1);
    for (long tries = 0; tries < 1000000; ++tries) {
        std::vector<long> c;
        for (int i = 0; i < d; ++i) c.push_back(coef(rng));
        c.push_back(1);
        FFPoly f(ell, std::move(c));
        if (pred(f)) return f;
    }
    throw std::runtime_error("search_poly: budget exhausted");
}

unsigned long seed_of(long ell, const Int& q, int n, int salt) {
    return static_cast<unsigned long>(ell) * 1000003UL + static_cast<unsigned long>(n) * 7919UL +
           mod_floor(q, Int(1000000007)).get_ui() * 31UL + static_cast<unsigned long>(salt);
}

Int crt(const Int& r1, const Int& m1, const Int& r2, const Int& m2) {
    Int inv;
    const Int a = mod_floor(m1, m2);
    if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m2.get_mpz_t()) == 0) throw std::logic_error("crt: moduli not coprime");
    const Int t = mod_floor((r2 - r1) * inv, m2);
    return mod_floor(r1 + m1 * t, m1 * m2);
}

// R with g = x^n R(x + q/x) over Z/M, g of degree 2n; throws unless g is q-symmetric mod M.
std::vector<Int> companion_mod(std::vector<Int> g, const Int& q, const Int& M) {
    const int n = static_cast<int>(g.size() - 1) / 2;
    std::vector<Int> r(static_cast<std::size_t>(n) + 1, Int(0));
    for (int k = n; k >= 0; --k) {
        const Int a = mod_floor(g[static_cast<std::size_t>(n + k)], M);
        r[static_cast<std::size_t>(k)] = a;
        // subtract a x^{n-k} (x^2 + q)^k
        for (int i = 0; i <= k; ++i) {
            const std::size_t idx = static_cast<std::size_t>(n - k + 2 * i);
            g[idx] = mod_floor(g[idx] - a * binom(k, i) * pow_int(q, static_cast<unsigned long>(k - i)), M);
        }
    }
    for (const auto& a : g)
        if (mod_floor(a, M) != 0) throw std::invalid_argument("companion_mod: not q-symmetric");
    return r;
}

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

long find_lambda(const Int& q) {
    const PrimePower pp = prime_power(q);
    const Int cap = q * q * q;
    for (Int l = 7; l < cap; l = next_prime(l)) {
        if (l == pp.p) continue;
        const long ell = l.get_si();
        const long r = as_long(q, ell);
        if (r != 0 && pow_mod(r, static_cast<unsigned long>((ell - 1) / 2), ell) == 1) return ell;
    }
    throw std::runtime_error("find_lambda: no prime below q^3");
}

FFPoly q_reciprocal(const FFPoly& j, long q) {
    if (j[0] == 0) throw std::invalid_argument("q_reciprocal: j(0) = 0");
    return j.reciprocal(j.degree(), q).monic();
}

FFPoly irreducible_pair(long ell, const Int& q, int n) {
    require(ell >= 7 && is_prime(Int(ell)), "irreducible_pair: ell must be a prime >= 7");
    require(n >= 1, "irreducible_pair: n >= 1");
    const long qm = as_long(q, ell);
    require(qm != 0, "irreducible_pair: ell divides q");
    if (n == 1) {
        // x - a with a outside {0, 1, q, +-sqrt q}
        for (long a = 2; a < ell; ++a)
            if (a != qm && mul_mod(a, a, ell) != qm) return FFPoly(ell, {-a, 1});
    }
    return search_poly(ell, n, seed_of(ell, q, n, 1), [&](const FFPoly& j) {
        if (j[0] == 0 || j.eval(1) == 0) return false;
        const FFPoly r = q_reciprocal(j, qm);
        // both irreducible of degree n: coprime exactly when distinct
        return r.eval(1) != 0 && !(r == j) && is_irreducible(j);
    });
}

FFPoly cycle_type_poly(long ell, const Int& q, int n, const Int& m, std::vector<int> partition) {
    require(ell >= 7 && is_prime(Int(ell)), "cycle_type_poly: ell must be a prime >= 7");
    const long qm = as_long(q, ell);
    require(qm != 0, "cycle_type_poly: ell divides q");
    int sum = 0, ones = 0;
    std::set<int> big;
    for (int d : partition) {
        require(d >= 1, "cycle_type_poly: parts must be positive");
        sum += d;
        if (d == 1) ++ones;
        else require(big.insert(d).second, "cycle_type_poly: repeated part > 1");
    }
    require(sum == n, "cycle_type_poly: parts must sum to n");
    require(ones == 1 || ones == 2, "cycle_type_poly: 1 must appear once or twice");
    FFPoly g = FFPoly::constant(ell, 1);
    for (int d : big) {
        const FFPoly j = irreducible_pair(ell, q, d);
        g = g * j * q_reciprocal(j, qm);
    }
    // the quadratics x^2 - a x + q contribute (q + 1 - a) each at x = 1
    const long target = mul_mod(as_long(m, ell), inv_mod(g.eval(1), ell), ell);
    const long q1 = (qm + 1) % ell;
    auto quad = [&](long a) { return FFPoly(ell, {qm, -a, 1}); };
    if (ones == 1) return g * quad(mod_p(q1 - target, ell));
    for (long a1 = 0; a1 < ell; ++a1)
        for (long a2 = 0; a2 < ell; ++a2)
            if (a1 != a2 && mul_mod(mod_p(q1 - a1, ell), mod_p(q1 - a2, ell), ell) == target)
                return g * quad(a1) * quad(a2);
    throw std::logic_error("cycle_type_poly: no (a1, a2)");
}

std::vector<int> pair_cycle_type(const FFPoly& g, long q) {
    const FFPoly r = to_companion(g, mod_p(q, g.p));
    if (!is_squarefree(r)) return {};
    return factor_degrees(r);
}

FFPoly no_elliptic_factor_poly(long ell0, const Int& q, int n, const Int& m) {
    require(is_prime(Int(ell0)), "no_elliptic_factor_poly: ell0 must be prime");
    const Int gap = Int(ell0) - q - 1;
    require(gap > 0 && gap * gap > 4 * q, "no_elliptic_factor_poly: need ell0 > q + 2 sqrt q + 1");
    require(n >= 5 && (n - 5) * (n - 5) >= 64 * q, "no_elliptic_factor_poly: need n >= 8 sqrt q + 5");
    const long qm = as_long(q, ell0);
    const long tb = trace_bound(q);
    // j = 1 on the roots of N1 = x (x - q) prod (x^2 - a x + q), j(1) = m
    FFPoly n1(ell0, {0, 1});
    n1 = n1 * FFPoly(ell0, {-qm, 1});
    for (long a = -tb; a <= tb; ++a) n1 = n1 * FFPoly(ell0, {qm, -a, 1});
    const long c = mul_mod(mod_p(as_long(m, ell0) - 1, ell0), inv_mod(n1.eval(1), ell0), ell0);
    const FFPoly j0 = FFPoly::constant(ell0, 1) + c * n1;
    const FFPoly mm = n1 * FFPoly(ell0, {-1, 1});
    require(mm.degree() <= n, "no_elliptic_factor_poly: too many interpolation conditions");
    std::vector<long> xs(static_cast<std::size_t>(n - mm.degree()) + 1, 0);
    xs.back() = 1;
    const FFPoly j = j0 + mm * FFPoly(ell0, xs);
    const FFPoly g = j * q_reciprocal(j, qm);
    for (long a = -tb; a <= tb; ++a)
        if ((g % FFPoly(ell0, {qm, -a, 1})).is_zero())
            throw std::logic_error("no_elliptic_factor_poly: elliptic factor survived");
    return g;
}

PpavPart ppav_poly(long lambda, const Int& q, int n, const Int& m) {
    require(lambda >= 7 && is_prime(Int(lambda)), "ppav_poly: lambda must be a prime >= 7");
    require(n >= 5, "ppav_poly: n >= 5");
    const long qm = as_long(q, lambda);
    require(qm != 0 && pow_mod(qm, static_cast<unsigned long>((lambda - 1) / 2), lambda) == 1,
            "ppav_poly: q must be a nonzero square mod lambda");
    const Int L(lambda), L2 = L * L;
    PpavPart out;
    out.lambda = lambda;
    // smallest s in [0, lambda^2) with v_lambda(s^2 - 4q) = 1 and q + 1 - s != 0 mod lambda
    for (Int s = 0; s < L2; ++s) {
        const Int d = s * s - 4 * q;
        if (mpz_divisible_p(d.get_mpz_t(), L.get_mpz_t()) && !mpz_divisible_p(d.get_mpz_t(), L2.get_mpz_t()) &&
            !mpz_divisible_p(Int(q + 1 - s).get_mpz_t(), L.get_mpz_t())) {
            out.s = s;
            break;
        }
    }
    const long sm = as_long(out.s, lambda);
    out.S = search_poly(lambda, n - 3, seed_of(lambda, q, n, 2), [](const FFPoly& f) { return is_irreducible(f); });
    const long q1 = (qm + 1) % lambda;
    const long known = mul_mod(mod_p(q1 - sm, lambda), out.S.eval(q1), lambda);
    const long target = mul_mod(as_long(m, lambda), inv_mod(known, lambda), lambda);
    bool found = false;
    for (long a = 0; a < lambda && !found; ++a)
        for (long b = 0; b < lambda && !found; ++b)
            if (a != b && a != sm && b != sm &&
                mul_mod(mod_p(q1 - a, lambda), mod_p(q1 - b, lambda), lambda) == target) {
                out.a = a;
                out.b = b;
                found = true;
            }
    if (!found) throw std::logic_error("ppav_poly: no (a, b)");
    const FFPoly rbar = FFPoly(lambda, {-sm, 1}) * FFPoly(lambda, {-out.a, 1}) * FFPoly(lambda, {-out.b, 1}) * out.S;
    // lift with R(s) = 0 and R(q + 1) = m mod lambda^2 by adding lambda (c0 + c1 x)
    IntPoly r0 = rbar.lift();
    const Int u = mod_floor(-r0.eval(out.s) / L, L);
    const Int v = mod_floor((m - r0.eval(Int(q + 1))) / L, L);
    Int inv;
    const Int den = mod_floor(q + 1 - out.s, L);
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), L.get_mpz_t());
    const Int c1 = mod_floor((v - u) * inv, L);
    const Int c0 = mod_floor(u - c1 * out.s, L);
    IntPoly r = r0 + IntPoly{L * c0, L * c1};
    for (auto& a : r.c) a = mod_floor(a, L2);
    if (mod_floor(r.eval(out.s), L2) != 0 || mod_floor(r.eval(Int(q + 1)) - m, L2) != 0)
        throw std::logic_error("ppav_poly: lift failed");
    out.R = r.c;
    IntPoly g = from_companion(r, q);
    for (auto& a : g.c) a = mod_floor(a, L2);
    out.g = g.c;
    return out;
}

int congruence_min_n(const Int& q) {
    Int c = isqrt_floor(64 * q);
    if (c * c < 64 * q) c += 1;
    return std::max(static_cast<int>(c.get_si()) + 5, 5);
}

CongruenceTarget assemble_target(const Int& q, int n, const Int& m) {
    require(n >= congruence_min_n(q), "assemble_target: need n >= max(8 sqrt q + 5, 5)");
    const PrimePower pp = prime_power(q);
    CongruenceTarget t;
    t.q = q;
    t.p = pp.p;
    t.n = n;
    const long lambda = find_lambda(q);
    // l0 is the smallest admissible prime above q + 2 sqrt q + 1, the rest the three smallest left
    std::vector<long> avail;
    for (Int l = 7; avail.size() < 64; l = next_prime(l))
        if (l != pp.p && l != lambda) avail.push_back(l.get_si());
    long l0 = 0;
    for (long l : avail) {
        const Int gap = Int(l) - q - 1;
        if (gap > 0 && gap * gap > 4 * q) {
            l0 = l;
            break;
        }
    }
    if (l0 == 0) {
        for (Int l = avail.back(); l0 == 0; l = next_prime(l)) {
            const Int gap = l - q - 1;
            if (l != pp.p && gap > 0 && gap * gap > 4 * q) l0 = l.get_si();
        }
    }
    std::vector<long> ls;
    for (long l : avail)
        if (l != l0 && ls.size() < 3) ls.push_back(l);
    t.factorization = {{pp.p, 1}, {Int(lambda), 2}, {Int(l0), 1}, {Int(ls[0]), 1}, {Int(ls[1]), 1}, {Int(ls[2]), 1}};
    t.L = pp.p * Int(lambda) * Int(lambda) * Int(l0) * Int(ls[0]) * Int(ls[1]) * Int(ls[2]);
    t.mResidue = mod_floor(m, t.L);
    t.partitions = {{n - 1, 1}, {n - 2, 1, 1}, n % 2 == 0 ? std::vector<int>{n - 3, 2, 1} : std::vector<int>{n - 4, 2, 1, 1}};

    const std::size_t len = static_cast<std::size_t>(2 * n) + 1;
    // gamma mod p: low half vanishes, gamma(1) = m, middle coefficient a unit
    std::vector<Int> gamma(len, Int(0));
    gamma[len - 1] = 1;
    const Int mid = mod_floor(m - 1, pp.p);
    if (mid != 0) {
        gamma[static_cast<std::size_t>(n)] = mid;
    } else {
        gamma[static_cast<std::size_t>(n) + 1] = 1;
        gamma[static_cast<std::size_t>(n)] = pp.p - 1;
    }
    std::vector<std::pair<std::vector<Int>, Int>> parts;
    parts.emplace_back(gamma, pp.p);
    parts.emplace_back(ppav_poly(lambda, q, n, m).g, Int(lambda) * Int(lambda));
    auto widen = [&](const FFPoly& f) {
        std::vector<Int> v(len, Int(0));
        for (std::size_t i = 0; i < f.c.size(); ++i) v[i] = f.c[i];
        return v;
    };
    parts.emplace_back(widen(no_elliptic_factor_poly(l0, q, n, m)), Int(l0));
    for (int i = 0; i < 3; ++i)
        parts.emplace_back(widen(cycle_type_poly(ls[static_cast<std::size_t>(i)], q, n, m, t.partitions[static_cast<std::size_t>(i)])),
                           Int(ls[static_cast<std::size_t>(i)]));
    t.gCoeffs.assign(len, Int(0));
    for (std::size_t k = 0; k < len; ++k) {
        Int r = 0, mod = 1;
        for (const auto& [coeffs, pm] : parts) {
            r = crt(r, mod, mod_floor(coeffs[k], pm), pm);
            mod *= pm;
        }
        t.gCoeffs[k] = r;
    }
    return t;
}

bool conforms(const IntPoly& f, const CongruenceTarget& t) {
    if (f.degree() != 2 * t.n || !f.is_monic()) return false;
    for (std::size_t k = 0; k < t.gCoeffs.size(); ++k)
        if (mod_floor(f.c[k] - t.gCoeffs[k], t.L) != 0) return false;
    return true;
}

std::vector<Int> reduce_target(const CongruenceTarget& t, const Int& modulus) {
    if (!mpz_divisible_p(t.L.get_mpz_t(), modulus.get_mpz_t())) throw std::invalid_argument("reduce_target: modulus does not divide L");
    std::vector<Int> out;
    for (const auto& a : t.gCoeffs) out.push_back(mod_floor(a, modulus));
    return out;
}

std::string check_target(const CongruenceTarget& t) {
    const std::size_t n = static_cast<std::size_t>(t.n);
    const Int& L = t.L;
    if (t.gCoeffs.size() != 2 * n + 1) return "length";
    Int prod = 1;
    std::set<Int> primes;
    for (const auto& [pr, e] : t.factorization) {
        prod *= pow_int(pr, static_cast<unsigned long>(e));
        if (!primes.insert(pr).second) return "repeated prime";
    }
    if (prod != L) return "L is not the product of its factorization";
    if (L >= pow_int(t.q, 23)) return "L >= q^23";
    if (mod_floor(t.gCoeffs.back() - 1, L) != 0) return "not monic";
    for (std::size_t i = 0; i < n; ++i)
        if (mod_floor(t.gCoeffs[i] - pow_int(t.q, static_cast<unsigned long>(n - i)) * t.gCoeffs[2 * n - i], L) != 0)
            return "not q-symmetric at " + std::to_string(i);
    Int sum = 0;
    for (const auto& a : t.gCoeffs) sum += a;
    if (mod_floor(sum - t.mResidue, L) != 0) return "g(1) != m";
    if (mpz_divisible_p(t.gCoeffs[n].get_mpz_t(), t.p.get_mpz_t())) return "middle coefficient divisible by p";
    // per-prime structure
    const long l0 = t.factorization[2].first.get_si();
    const FFPoly g0 = FFPoly::from(IntPoly(t.gCoeffs), l0);
    const long tb = trace_bound(t.q), q0 = as_long(t.q, l0);
    for (long a = -tb; a <= tb; ++a)
        if ((g0 % FFPoly(l0, {q0, -a, 1})).is_zero()) return "elliptic factor mod l0";
    for (int i = 0; i < 3; ++i) {
        const long li = t.factorization[static_cast<std::size_t>(3 + i)].first.get_si();
        const FFPoly gi = FFPoly::from(IntPoly(t.gCoeffs), li);
        auto want = t.partitions[static_cast<std::size_t>(i)];
        std::sort(want.begin(), want.end());
        if (pair_cycle_type(gi, as_long(t.q, li)) != want) return "cycle type mod " + std::to_string(li);
    }
    const long lambda = t.factorization[1].first.get_si();
    const FFPoly gl = FFPoly::from(IntPoly(t.gCoeffs), lambda);
    const FFPoly rbar = to_companion(gl, as_long(t.q, lambda));
    if (!is_squarefree(rbar)) return "companion mod lambda not separable";
    const auto red2 = reduce_target(t, Int(lambda) * Int(lambda));
    const IntPoly rl(companion_mod(red2, t.q, Int(lambda) * Int(lambda)));
    bool ramified = false;
    const Int L2 = Int(lambda) * Int(lambda);
    for (Int s = 0; s < L2 && !ramified; ++s) {
        const Int d = s * s - 4 * t.q;
        ramified = mod_floor(rl.eval(s), L2) == 0 && mpz_divisible_p(d.get_mpz_t(), Int(lambda).get_mpz_t()) &&
                   !mpz_divisible_p(d.get_mpz_t(), L2.get_mpz_t());
    }
    if (!ramified) return "no ramified root of the companion mod lambda^2";
    return {};
}

}  // namespace weil
