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

#ifndef WEIL_ARITH_HPP
#define WEIL_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace weil {

using Int = mpz_class;
using Rat = mpq_class;

struct PrimePower {
    Int q;
    Int p;
    int e = 0;
};

inline Rat make_rat(const Int& n, const Int& d = 1) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int floor_rat(const Rat& x) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& x) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

inline Int pow_int(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat pow_rat(const Rat& b, long e) {
    if (e < 0) return pow_rat(1 / b, -e);
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline bool is_prime(const Int& n) {
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline int valuation(Int a, const Int& p) {
    if (a == 0) return -1;
    int v = 0;
    while (mpz_divisible_p(a.get_mpz_t(), p.get_mpz_t())) {
        a /= p;
        ++v;
    }
    return v;
}

// Throws unless q = p^e with p prime and e >= 1.
inline PrimePower prime_power(const Int& q) {
    if (q < 2) throw std::invalid_argument("prime_power: q < 2");
    Int p = 2;
    Int rest = q;
    for (;; p = next_prime(p)) {
        if (p * p > rest) {
            p = rest;
            break;
        }
        if (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) break;
    }
    PrimePower pp{q, p, 0};
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++pp.e;
    }
    if (rest != 1) throw std::invalid_argument("prime_power: " + q.get_str() + " is not a prime power");
    return pp;
}

inline bool is_prime_power(const Int& q) {
    try {
        prime_power(q);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

inline long to_long(const Int& x) {
    if (!x.fits_slong_p()) throw std::overflow_error("to_long: " + x.get_str());
    return x.get_si();
}

}  // namespace weil

#endif
