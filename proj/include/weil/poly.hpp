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

#ifndef WEIL_POLY_HPP
#define WEIL_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weil/arith.hpp"

namespace weil {

// Dense univariate polynomial, coefficients ascending.
// Invariant: c.back() != 0 unless c is empty (the zero polynomial).
template <class T>
class Poly {
   public:
    std::vector<T> c;

    Poly() = default;
    Poly(std::initializer_list<T> l) : c(l) { trim(); }
    explicit Poly(std::vector<T> v) : c(std::move(v)) { trim(); }

    static Poly monomial(const T& a, std::size_t k) {
        std::vector<T> v(k + 1, T(0));
        v[k] = a;
        return Poly(std::move(v));
    }
    static Poly constant(const T& a) { return Poly(std::vector<T>{a}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    T operator[](std::size_t i) const { return i < c.size() ? c[i] : T(0); }
    T lead() const { return c.empty() ? T(0) : c.back(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    template <class V>
    V eval(const V& x) const {
        V r(0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + V(*it);
        return r;
    }

    Poly derivative() const {
        if (c.size() <= 1) return {};
        std::vector<T> v(c.size() - 1);
        for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * T(static_cast<long>(i));
        return Poly(std::move(v));
    }

    Poly& operator+=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& a) {
        for (auto& x : c) x *= a;
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) {
        for (auto& x : a.c) x = -x;
        return a;
    }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> v(a.c.size() + b.c.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (std::size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
        }
        return Poly(std::move(v));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // x^k * p(x)
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), c.begin(), c.end());
        return Poly(std::move(v));
    }

    // Coefficients of degree < k.
    Poly truncated(std::size_t k) const {
        std::vector<T> v(c.begin(), c.begin() + static_cast<long>(std::min(k, c.size())));
        return Poly(std::move(v));
    }

    Poly pow(unsigned k) const {
        Poly r = constant(T(1));
        Poly b = *this;
        while (k) {
            if (k & 1U) r = r * b;
            k >>= 1U;
            if (k) b = b * b;
        }
        return r;
    }

    // p(a*x)
    Poly scaled(const T& a) const {
        Poly r = *this;
        T f(1);
        for (auto& x : r.c) {
            x *= f;
            f *= a;
        }
        r.trim();
        return r;
    }

    std::string str(const char* var = "x") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const T& a = c[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            T mag = a < 0 ? T(-a) : a;
            os << (a < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            if (i == 0 || mag != 1) os << mag;
            if (i > 0) os << var;
            if (i > 1) os << '^' << i;
            first = false;
        }
        return os.str();
    }
};

using IntPoly = Poly<Int>;
using RatPoly = Poly<Rat>;

inline RatPoly to_rat(const IntPoly& p) {
    std::vector<Rat> v(p.c.begin(), p.c.end());
    return RatPoly(std::move(v));
}

// Throws unless every coefficient is integral.
inline IntPoly to_int(const RatPoly& p) {
    std::vector<Int> v;
    v.reserve(p.c.size());
    for (const auto& a : p.c) {
        if (a.get_den() != 1) throw std::domain_error("to_int: non-integral coefficient " + a.get_str());
        v.push_back(a.get_num());
    }
    return IntPoly(std::move(v));
}

inline bool is_integral(const RatPoly& p) {
    return std::all_of(p.c.begin(), p.c.end(), [](const Rat& a) { return a.get_den() == 1; });
}

// a = q*b + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    RatPoly r = a;
    if (a.degree() < b.degree()) return {RatPoly{}, r};
    std::vector<Rat> qv(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
    const Rat lb = b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int k = r.degree() - b.degree();
        const Rat t = r.lead() / lb;
        qv[static_cast<std::size_t>(k)] = t;
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[j + static_cast<std::size_t>(k)] -= t * b.c[j];
        r.c.back() = 0;
        r.trim();
    }
    return {RatPoly(std::move(qv)), r};
}

inline RatPoly make_monic(RatPoly p) {
    if (p.is_zero()) return p;
    const Rat l = p.lead();
    for (auto& x : p.c) x /= l;
    return p;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = make_monic(std::move(r));
    }
    return make_monic(a);
}

inline Int content(const IntPoly& p) {
    Int g = 0;
    for (const auto& a : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    return g;
}

// Positive content removed; sign preserved.
inline IntPoly primitive(IntPoly p) {
    Int g = content(p);
    if (g > 1)
        for (auto& a : p.c) mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return p;
}

// Clears denominators, then removes the content; result has positive leading coefficient.
inline IntPoly primitive_int(const RatPoly& p) {
    if (p.is_zero()) return {};
    Int l = 1;
    for (const auto& a : p.c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<Int> v;
    v.reserve(p.c.size());
    for (const auto& a : p.c) v.push_back(Int(a * l));
    IntPoly r = primitive(IntPoly(std::move(v)));
    if (r.lead() < 0) r = -r;
    return r;
}

inline IntPoly gcd(const IntPoly& a, const IntPoly& b) { return primitive_int(gcd(to_rat(a), to_rat(b))); }

// p / gcd(p, p'), primitive with positive leading coefficient.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.degree() <= 0) return p;
    RatPoly rp = to_rat(p);
    RatPoly g = gcd(rp, rp.derivative());
    return primitive_int(divmod(rp, g).first);
}

inline bool is_squarefree(const IntPoly& p) {
    if (p.degree() <= 0) return true;
    return gcd(to_rat(p), to_rat(p).derivative()).degree() == 0;
}

// Yun's algorithm: p = lc * prod_i f_i^i with f_i squarefree and pairwise coprime.
// Returns (i, f_i) for nonconstant f_i.
inline std::vector<std::pair<int, IntPoly>> squarefree_decomposition(const IntPoly& p) {
    std::vector<std::pair<int, IntPoly>> out;
    if (p.degree() <= 0) return out;
    RatPoly f = to_rat(p);
    RatPoly a = gcd(f, f.derivative());
    RatPoly b = divmod(f, a).first;
    RatPoly c = divmod(f.derivative(), a).first;
    RatPoly d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        RatPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(i, primitive_int(g));
        RatPoly nb = divmod(b, g).first;
        RatPoly nc = divmod(d, g).first;
        b = std::move(nb);
        d = nc - b.derivative();
    }
    return out;
}

}  // namespace weil

#endif
