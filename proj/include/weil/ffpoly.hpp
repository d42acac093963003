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

#ifndef WEIL_FFPOLY_HPP
#define WEIL_FFPOLY_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "weil/arith.hpp"
#include "weil/poly.hpp"

namespace weil {

long mod_p(long a, long p);
long mul_mod(long a, long b, long p);
long pow_mod(long a, unsigned long e, long p);
long inv_mod(long a, long p);  // throws when a = 0 mod p

// Polynomial over F_p, p prime below 2^31. Ascending coefficients in [0, p), trimmed.
class FFPoly {
   public:
    long p = 2;
    std::vector<long> c;

    FFPoly() = default;
    FFPoly(long prime, std::vector<long> coeffs);
    static FFPoly constant(long prime, long a) { return FFPoly(prime, {a}); }
    static FFPoly x(long prime) { return FFPoly(prime, {0, 1}); }
    static FFPoly from(const IntPoly& f, long prime);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long operator[](std::size_t i) const { return i < c.size() ? c[i] : 0; }
    long lead() const { return c.empty() ? 0 : c.back(); }
    long eval(long x) const;
    FFPoly monic() const;
    FFPoly derivative() const;
    // x^n f(a/x) for n >= deg f
    FFPoly reciprocal(int n, long a) const;
    IntPoly lift() const;  // coefficients in [0, p)
    std::string str() const;

    friend FFPoly operator+(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator-(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator*(const FFPoly& a, const FFPoly& b);
    friend FFPoly operator*(long s, const FFPoly& a);
    friend bool operator==(const FFPoly& a, const FFPoly& b) { return a.p == b.p && a.c == b.c; }

   private:
    void trim();
};

inline std::ostream& operator<<(std::ostream& os, const FFPoly& f) { return os << f.str(); }

std::pair<FFPoly, FFPoly> divmod(const FFPoly& a, const FFPoly& b);
FFPoly operator%(const FFPoly& a, const FFPoly& b);
FFPoly gcd(FFPoly a, FFPoly b);  // monic
FFPoly powmod(FFPoly base, Int e, const FFPoly& m);

bool is_squarefree(const FFPoly& f);
bool is_irreducible(const FFPoly& f);
// Degrees of the irreducible factors of a squarefree f, sorted, by distinct-degree factorization.
std::vector<int> factor_degrees(const FFPoly& squarefree);
// g with f = x^n g(x + q/x), deg f = 2n; throws unless f is q-symmetric.
FFPoly to_companion(const FFPoly& f, long q);
FFPoly from_companion(const FFPoly& g, long q);
// Roots in F_p, sorted (p small).
std::vector<long> roots(const FFPoly& f);

}  // namespace weil

#endif
