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

#include "weil/ffpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weil {

long mod_p(long a, long p) {
    const long r = a % p;
    return r < 0 ? r + p : r;
}

long mul_mod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

long pow_mod(long a, unsigned long e, long p) {
    long r = 1 % p, b = mod_p(a, p);
    while (e) {
        if (e & 1UL) r = mul_mod(r, b, p);
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    return r;
}

long inv_mod(long a, long p) {
    a = mod_p(a, p);
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a, static_cast<unsigned long>(p - 2), p);
}

FFPoly::FFPoly(long prime, std::vector<long> coeffs) : p(prime), c(std::move(coeffs)) {
    for (auto& a : c) a = mod_p(a, p);
    trim();
}

FFPoly FFPoly::from(const IntPoly& f, long prime) {
    std::vector<long> v;
    const Int pp(prime);
    for (const auto& a : f.c) v.push_back(mod_floor(a, pp).get_si());
    return FFPoly(prime, std::move(v));
}

void FFPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

long FFPoly::eval(long x) const {
    long r = 0;
    x = mod_p(x, p);
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = (mul_mod(r, x, p) + *it) % p;
    return r;
}

FFPoly FFPoly::monic() const {
    if (c.empty()) return *this;
    const long inv = inv_mod(c.back(), p);
    FFPoly r = *this;
    for (auto& a : r.c) a = mul_mod(a, inv, p);
    return r;
}

FFPoly FFPoly::derivative() const {
    std::vector<long> v;
    for (std::size_t i = 1; i < c.size(); ++i) v.push_back(mul_mod(c[i], static_cast<long>(i % static_cast<std::size_t>(p)), p));
    return FFPoly(p, std::move(v));
}

FFPoly FFPoly::reciprocal(int n, long a) const {
    if (degree() > n) throw std::invalid_argument("reciprocal: n < deg f");
    std::vector<long> v(static_cast<std::size_t>(n) + 1, 0);
    long ak = 1;
    for (std::size_t k = 0; k < c.size(); ++k) {
        v[static_cast<std::size_t>(n) - k] = mul_mod(c[k], ak, p);
        ak = mul_mod(ak, mod_p(a, p), p);
    }
    return FFPoly(p, std::move(v));
}

IntPoly FFPoly::lift() const {
    std::vector<Int> v(c.begin(), c.end());
    return IntPoly(std::move(v));
}

std::string FFPoly::str() const {
    std::ostringstream os;
    os << lift().str() << " mod " << p;
    return os.str();
}

FFPoly operator+(const FFPoly& a, const FFPoly& b) {
    std::vector<long> v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = (a[i] + b[i]) % a.p;
    return FFPoly(a.p, std::move(v));
}

FFPoly operator-(const FFPoly& a, const FFPoly& b) {
    std::vector<long> v(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return FFPoly(a.p, std::move(v));
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
    if (a.is_zero() || b.is_zero()) return FFPoly(a.p, {});
    std::vector<long> v(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] = (v[i + j] + mul_mod(a.c[i], b.c[j], a.p)) % a.p;
    return FFPoly(a.p, std::move(v));
}

FFPoly operator*(long s, const FFPoly& a) {
    std::vector<long> v = a.c;
    for (auto& x : v) x = mul_mod(x, mod_p(s, a.p), a.p);
    return FFPoly(a.p, std::move(v));
}

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b) {
    if (b.is_zero()) throw std::domain_error("FFPoly divmod: division by zero");
    const long p = a.p;
    std::vector<long> r = a.c;
    if (a.degree() < b.degree()) return {FFPoly(p, {}), a};
    std::vector<long> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const long inv = inv_mod(b.lead(), p);
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        const long t = mul_mod(r[static_cast<std::size_t>(k + b.degree())], inv, p);
        q[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r[static_cast<std::size_t>(k) + j] = mod_p(r[static_cast<std::size_t>(k) + j] - mul_mod(t, b.c[j], p), p);
    }
    return {FFPoly(p, std::move(q)), FFPoly(p, std::move(r))};
}

FFPoly operator%(const FFPoly& a, const FFPoly& b) { return divmod(a, b).second; }

FFPoly gcd(FFPoly a, FFPoly b) {
    while (!b.is_zero()) {
        FFPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FFPoly powmod(FFPoly base, Int e, const FFPoly& m) {
    FFPoly r = FFPoly::constant(m.p, 1) % m;
    base = base % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

bool is_squarefree(const FFPoly& f) {
    if (f.degree() <= 0) return true;
    const FFPoly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

std::vector<int> factor_degrees(const FFPoly& squarefree) {
    std::vector<int> out;
    FFPoly f = squarefree.monic();
    const long p = f.p;
    const FFPoly x = FFPoly::x(p);
    FFPoly h = x % f;  // x^{p^d} mod f
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = powmod(h, Int(p), f);
        FFPoly g = gcd(f, h - x);
        if (g.degree() > 0) {
            for (int k = 0; k < g.degree() / d; ++k) out.push_back(d);
            f = divmod(f, g).first;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back(f.degree());
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(const FFPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    // distinct-degree sweep with early exit on the first factor of degree <= deg/2
    const FFPoly g = f.monic();
    const FFPoly x = FFPoly::x(g.p);
    FFPoly h = x % g;
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        h = powmod(h, Int(g.p), g);
        if (gcd(g, h - x).degree() > 0) return false;
    }
    return true;
}

FFPoly to_companion(const FFPoly& f, long q) {
    const int deg = f.degree();
    if (deg < 0 || deg % 2) throw std::invalid_argument("to_companion: degree must be even");
    const int n = deg / 2;
    const long p = f.p;
    FFPoly r = f;
    std::vector<long> g(static_cast<std::size_t>(n) + 1, 0);
    const FFPoly base(p, {q, 0, 1});
    for (int k = n; k >= 0; --k) {
        const long a = r[static_cast<std::size_t>(n + k)];
        g[static_cast<std::size_t>(k)] = a;
        if (a == 0) continue;
        std::vector<long> shift(static_cast<std::size_t>(n - k) + 1, 0);
        shift.back() = a;
        FFPoly t(p, shift);
        for (int i = 0; i < k; ++i) t = t * base;
        r = r - t;
    }
    if (!r.is_zero()) throw std::invalid_argument("to_companion: not q-symmetric");
    return FFPoly(p, std::move(g));
}

FFPoly from_companion(const FFPoly& g, long q) {
    const int n = g.degree();
    const long p = g.p;
    const FFPoly base(p, {q, 0, 1});
    FFPoly out(p, {});
    FFPoly pw = FFPoly::constant(p, 1);  // (x^2 + q)^k
    for (int k = 0; k <= n; ++k) {
        std::vector<long> shift(static_cast<std::size_t>(n - k) + 1, 0);
        shift.back() = g[static_cast<std::size_t>(k)];
        out = out + FFPoly(p, shift) * pw;
        pw = pw * base;
    }
    return out;
}

std::vector<long> roots(const FFPoly& f) {
    std::vector<long> out;
    for (long a = 0; a < f.p; ++a)
        if (f.eval(a) == 0) out.push_back(a);
    return out;
}

}  // namespace weil
