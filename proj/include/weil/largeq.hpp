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

#ifndef WEIL_LARGEQ_HPP
#define WEIL_LARGEQ_HPP

#include <optional>
#include <vector>

#include "weil/cert.hpp"
#include "weil/errors.hpp"
#include "weil/poly.hpp"
#include "weil/quad.hpp"

namespace weil {

// Extremes of g^[n-2] over monic degree-n g with roots in [-2, 2] and g^[n-1] = a.
// Exact at a in Q(sqrt d); a must lie in [-2n, 2n].
QuadNum b_max(int n, const QuadNum& a);
QuadNum b_min(int n, const QuadNum& a);
QuadNum b_diff(int n, const QuadNum& a);
// 2n - sqrt(2n/(n-1)) and 2n - sqrt(4n/(n-1)), exact.
QuadNum lambda1(int n);
QuadNum lambda2(int n);

// Roots (ascending) of the configuration realizing b_min(a): all but one at +-2.
std::vector<double> b_min_roots(int n, double a);

struct GapInterval {
    Int r;               // floor(lambda sqrt q)
    Rat lo, hi;          // the closed real interval
    Int first, last;     // its integer points; empty when the width is <= 1
    bool empty = true;
};
// Requires lambda1 < |lambda| < 2n and b_diff(lambda) < 1 - 2 eps (exact); throws
// std::invalid_argument otherwise.
GapInterval gap_interval(const Int& q, int n, const Rat& lambda, const Rat& eps);

struct LargeQOptions {
    Rat lambda = make_rat(19, 10);  // m within q^n +- lambda q^{n-1/2}, lambda < lambda1
    Rat eps = make_rat(1, 100);     // region shrink, halved on window failure
    int retries = 6;
};

struct LargeQResult {
    double a = 0;              // (m - q^n) / q^{n-1/2}
    Rat b;                     // y - c_1 with y = (m - (q+1)^n) / (q+1)^{n-1}
    Rat eps;                   // shrink that succeeded
    double homotopy = 0;       // parameter in [0, 2] along the two-stage path
    std::vector<double> roots;  // roots of the normalized g
    IntPoly G;                 // final companion, monic degree n
    bool adjusted = false;     // x - (q+1) added for ordinarity
    IntPoly f;
    Certificate certificate;
};

// n >= 3, or n = 2 with q prime (the ordinarity step is then omitted). Throws
// std::invalid_argument for m outside the lambda range and ConstructionFailed("root-containment"
// | "window" | "weil-cert", ...) when q is too small for the rounding to stay inside.
LargeQResult construct_large_q(const Int& q, int n, const Int& m, const LargeQOptions& opt = {});

struct EisensteinReport {
    bool obstructed = false;
    std::optional<IntPoly> onlyG;  // x^2 + r x + c2 when it is the unique candidate
    int candidates = 0;            // monic quadratics with roots in [-2 sqrt q, 2 sqrt q] and G(q+1) = m
};
// Non-prime q, n = 2: m is obstructed when its only candidate G is Eisenstein at p.
EisensteinReport eisenstein_obstruction(const Int& q, const Int& m);
// Obstructed m with r = c_1 a multiple of p, |r| > lambda2 sqrt q, scanned over
// [(q+1)^2 + (r-1)(q+1), (q+1)^2 + (r+1)(q+1)].
std::vector<Int> eisenstein_scan(const Int& q);

}  // namespace weil

#endif
