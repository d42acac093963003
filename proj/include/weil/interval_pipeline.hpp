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

#ifndef WEIL_INTERVAL_PIPELINE_HPP
#define WEIL_INTERVAL_PIPELINE_HPP

#include <vector>

#include "weil/cert.hpp"
#include "weil/disk.hpp"
#include "weil/errors.hpp"
#include "weil/poly.hpp"

namespace weil {

// Every integer in [center - N, center + N] is the order of an ordinary n-dimensional
// variety obtained by perturbing the seed in degrees r..n.
struct RealizedInterval {
    Int q;
    int n = 0;
    RatPoly seed;  // h(0) = 1, integer below degree n, top coefficient in (1/2) Z
    Int center;    // hat(seed)(1)
    Int N;
    int r = 0;     // 1 <= r <= n + 1; r = n + 1 means N = 0
    Rat mu;        // certified lower bound of |seed| on |z| <= q^{-1/2}
    Rat muOrd;
    Int lo() const { return center - N; }
    Int hi() const { return center + N; }
};

// Throws std::invalid_argument on a malformed seed and ConstructionFailed with stage
// "disk-cert" or "mu-ord" when the seed cannot be used.
RealizedInterval realize_interval(const RatPoly& h, const Int& q, int n);

// c_r .. c_n with M = sum c_j (q^{n-j} + 1), |c_j| <= floor(q/2), c_j integral for j < n and
// c_n in (1/2) Z. Greedy: smallest |c_j| that keeps the residual coverable, nonnegative on ties.
// Throws std::out_of_range when |M| > N.
std::vector<Rat> greedy_decomposition(const RealizedInterval& iv, const Int& M);

struct IntervalWitness {
    Int target;
    std::vector<Rat> c;  // c_r .. c_n
    bool adjusted = false;
    RatPoly H;
    IntPoly fHat;
    Certificate certificate;
    DiskCertificate disk;  // re-run on the final H
};

// Throws std::out_of_range outside the interval and ConstructionFailed if certification fails.
IntervalWitness realize_integer(const RealizedInterval& iv, const Int& target);

}  // namespace weil

#endif
