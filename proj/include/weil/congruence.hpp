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

#ifndef WEIL_CONGRUENCE_HPP
#define WEIL_CONGRUENCE_HPP

#include <utility>
#include <vector>

#include "weil/arith.hpp"
#include "weil/ffpoly.hpp"
#include "weil/poly.hpp"

namespace weil {

// Smallest prime 7 <= lambda < q^3, lambda != p, with q a nonzero square mod lambda.
long find_lambda(const Int& q);

// j of degree n over F_ell with j and x^n j(q/x) coprime, irreducible, and nonzero at 1. Deterministic:
// lexicographic search for n <= 2, seeded random search above.
FFPoly irreducible_pair(long ell, const Int& q, int n);

// The q-reciprocal x^n j(q/x), made monic. Requires j(0) != 0.
FFPoly q_reciprocal(const FFPoly& j, long q);

// Monic q-symmetric g of degree 2n over F_ell with g(1) = m whose root pairs {alpha, q/alpha} are distinct
// and permuted by Frobenius with the given cycle lengths.
FFPoly cycle_type_poly(long ell, const Int& q, int n, const Int& m, std::vector<int> partition);

// Cycle type of Frobenius on the root pairs of a q-symmetric g: factor degrees of its companion mod ell.
// Empty when the companion is not squarefree (repeated pairs).
std::vector<int> pair_cycle_type(const FFPoly& g, long q);

// g = j * x^n j(q/x) with j = 1 at 0, q and every root of x^2 - a x + q (|a| <= 2 sqrt q), j(1) = m.
FFPoly no_elliptic_factor_poly(long ell0, const Int& q, int n, const Int& m);

struct PpavPart {
    long lambda = 0;
    Int s;                   // disc(x^2 - s x + q) has lambda-valuation exactly 1
    long a = 0, b = 0;
    FFPoly S;                // irreducible of degree n - 3 mod lambda
    std::vector<Int> R;      // companion mod lambda^2, ascending
    std::vector<Int> g;      // x^n R(x + q/x) mod lambda^2, ascending, length 2n + 1
};
PpavPart ppav_poly(long lambda, const Int& q, int n, const Int& m);

struct CongruenceTarget {
    Int q, p;
    int n = 0;
    Int mResidue;                                  // m mod L
    Int L;
    std::vector<std::pair<Int, int>> factorization;  // (p,1), (lambda,2), (l0,1), (l1,1), (l2,1), (l3,1)
    std::vector<Int> gCoeffs;                      // residues mod L, ascending, length 2n + 1
    std::vector<std::vector<int>> partitions;      // cycle types imposed at l1, l2, l3
};

// Minimum n for assemble_target: max(ceil(8 sqrt q) + 5, 5).
int congruence_min_n(const Int& q);
CongruenceTarget assemble_target(const Int& q, int n, const Int& m);

// Coefficientwise f == g mod L, f monic of degree 2n.
bool conforms(const IntPoly& f, const CongruenceTarget& t);
// Reduces the target modulo one of its prime-power factors.
std::vector<Int> reduce_target(const CongruenceTarget& t, const Int& modulus);
// Replays every CongruenceTarget invariant; returns an empty string when all hold.
std::string check_target(const CongruenceTarget& t);

}  // namespace weil

#endif
