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

#ifndef WEIL_STURM_HPP
#define WEIL_STURM_HPP

#include <vector>

#include "weil/poly.hpp"
#include "weil/quad.hpp"

namespace weil {

// Sturm chain of a squarefree polynomial, each term scaled by a positive constant to lie in Z[x].
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

int sign_variations(const std::vector<IntPoly>& chain, const QuadNum& x);

// Number of distinct real roots of g in (a, b]. Bounds may be quadratic irrationals r*sqrt(q).
int sturm_count(const IntPoly& g, const QuadNum& a, const QuadNum& b);
int sturm_count(const RatPoly& g, const QuadNum& a, const QuadNum& b);

// Number of distinct real roots of g in the closed interval [a, b].
int count_roots_closed(const IntPoly& g, const QuadNum& a, const QuadNum& b);

// Distinct real roots of g overall.
int count_real_roots(const IntPoly& g);

// 2*sqrt(q) as an exact quadratic number.
inline QuadNum two_sqrt(const Int& q) { return {Rat(0), Rat(2), q}; }

}  // namespace weil

#endif
