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

#ifndef WEIL_CHEBYSHEV_HPP
#define WEIL_CHEBYSHEV_HPP

#include <string>
#include <utility>
#include <vector>

#include "weil/cert.hpp"
#include "weil/congruence.hpp"
#include "weil/disk.hpp"
#include "weil/errors.hpp"
#include "weil/interval.hpp"
#include "weil/poly.hpp"
#include "weil/quad.hpp"

namespace weil {

// T_k with T_0 = 1, T_1 = x, T_{k+1} = 2x T_k - T_{k-1}.
IntPoly chebyshev_T(int k);

// (tau(q/2 - sqrt q + 3/2), tau(q/2 + sqrt q - 1/2)): the limiting endpoint pair.
std::pair<RatInterval, RatInterval> attained_interval(const Int& q, long bits = 96);

// P(z) = f_d((1 - eps) sqrt q z), f_d(z) = 2 q^{-d/4} z^{d/2} T_{d/2}(l(z + 1/z)),
// l(w) = (sqrt q / 2) w - (sqrt q - 1). Exact in Q(sqrt q) because d is even.
struct ChebySeed {
    Int q;
    int d = 0;
    Rat epsilon;
    QuadPoly P;
    RatInterval leftEnd, rightEnd;  // q P(1/q)^{2/d}, q P(-1/q)^{2/d}
    // invariants, each certified separately
    bool unitAtZero = false;   // P(0) = 1
    bool positiveOnR = false;  // exact Sturm count over Q(sqrt q)
    DiskCertificate disk;      // on |z| <= q^{-1/2}
    Rat floorBound;            // upper bound of q^{-d/4}
    bool diskBound = false;    // disk.mu >= floorBound
    bool certified() const { return unitAtZero && positiveOnR && diskBound; }
};

// Throws std::invalid_argument unless d is even, d >= 2 and 0 < eps < 1. The positivity and
// disk checks are skipped (left false) when certify is false.
ChebySeed build_P(const Int& q, int d, const Rat& eps, bool certify = true);

// l = smallest integer >= 4 log_q n with d | 2n - 2l and 2n - 2l > 0; b = (2n - 2l)/d.
struct LedgerShape {
    int ell = 0;
    int b = 0;
};
LedgerShape ledger_shape(const Int& q, int n, int d);

// Q = P(s z) with hat(Q^b)(1) = m, s in [-1, 1], found by exact bisection in Q(sqrt q).
struct QChoice {
    RatInterval s;  // contains a root of s -> q^n P(s/q)^b + P(s)^b - m
    Rat sMid;       // the value used for Q
};
// Throws ConstructionFailed("containment", ...) when m is not bracketed by s = 1 and s = -1.
QChoice choose_Q(const ChebySeed& seed, int n, const Int& m, int b, long bits = 40);

struct LedgerTarget {
    Int L;
    std::vector<Int> g;  // residues mod L, ascending, length 2n + 1
};
LedgerTarget ledger_target(const CongruenceTarget& t);
// L = 1: every integer conforms; isolates the analytic part of the ledger.
LedgerTarget trivial_target(int n);

struct LedgerResult {
    bool success = false;
    std::string failedStage;  // empty on success
    int n = 0;
    Int m;
    LedgerShape shape;
    QChoice qChoice;
    long precision = 0;
    std::vector<double> a;  // a_1 .. a_{d-1}, each in [0, L/b)
    double c = 0;           // in [0, c']
    double cPrime = 0;
    std::vector<double> r;  // r_d .. r_{n-1}, each in [0, L)
    std::vector<double> s;  // s_{d+1} .. s_n
    double qTildeAtOne = 0, qTildeAtInvQ = 0;
    double maxDrift = 0;    // largest change of an already committed hat coefficient
    IntPoly fHat;           // assembled from the committed integers and m
    bool congruent = false;
    Certificate certificate;
};

// Stages that cannot proceed end the run with failedStage set; the assembled polynomial is
// then certified a posteriori, so the floating ledger is only a search device.
LedgerResult run_ledger(const ChebySeed& seed, int n, const Int& m, const LedgerTarget& target, long precision = 0);

}  // namespace weil

#endif
