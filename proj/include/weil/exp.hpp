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

#ifndef WEIL_EXP_HPP
#define WEIL_EXP_HPP

#include <string>
#include <vector>

#include "weil/cert.hpp"
#include "weil/disk.hpp"
#include "weil/errors.hpp"
#include "weil/interval.hpp"
#include "weil/poly.hpp"

namespace weil {

// floor(q log q / 2 + 1/2), exact.
Int compute_s(const Int& q);

struct ExpParams {
    Int q;
    int n = 2;
    Int m;  // q^{n-1/2} <= m < q^{n+1/2}
};
bool valid(const ExpParams& p);

struct ExpCoefficients {
    std::vector<Int> b;              // b_0 .. b_{n-1}, b_0 = 1
    std::vector<Rat> c;              // c_1 .. c_{n-1}, exact
    std::vector<RatInterval> cEnc;   // enclosures of c_1 .. c_n (c_n transcendental unless m = q^n)
};

// Step 1: each c_i is fixed by its residual window and the integrality of the z^i coefficient of
// exp(c_1 z + ... + c_i z^i); the windows are decided on log enclosures refined until unambiguous.
ExpCoefficients choose_coefficients(const ExpParams& p, long bits = 64);

struct ExpResult {
    ExpParams params;
    ExpCoefficients coeffs;
    RatPoly hInt;          // b_0 .. b_{n-1}, top coefficient in (1/2) Z
    bool adjusted = false; // z^{n-1} - ((q+1)/2) z^n added for ordinarity
    IntPoly fHat;
    Certificate certificate;
    DiskCertificate disk;
};

// Throws ConstructionFailed("disk-cert", ...) when h cannot be certified nonvanishing on the disk.
// Coefficients, hInt and fHat without certification; fHat(1) = m holds unconditionally.
ExpResult assemble_candidate(const ExpParams& p);
// Throws ConstructionFailed("disk-cert" | "weil-cert", ...) when certification does not go through.
ExpResult build_candidate(const ExpParams& p);

struct FeasibilityReport {
    Int q;
    int n = 0;
    Int s;
    // upper bounds on the pieces of the main inequality, lower bound on its right side 1/J(q^{-1/2})
    Rat tailHalf, tailFull, headAtOne, correction, lhs, rhs;
    bool main = false;       // the full inequality, certified
    Rat simplerLhs;
    bool simpler = false;    // weakened form monotone in n
    bool q7 = false;         // q >= 7 and 2^{n-1} > J(q^{-1/2}) J(2 q^{-1/2})
    bool q16 = false;        // q >= 16 and n > 3 sqrt q log q - 1/2
};
FeasibilityReport check_feasible(const Int& q, int n);

struct N0Result {
    Int q;
    int n0 = 0;
    int nStar = 0;  // first n where the weakened form holds; it then holds for all larger n
    std::vector<FeasibilityReport> transcript;  // n = n0 .. nStar, plus n0 - 1 when n0 > 2
    // q^{3 sqrt q log q} > q^{n0 - 1/2}, i.e. 3 sqrt q log q > n0 - 1/2
    bool beatsThreeRootQLogQ = false;
};
N0Result find_n0(const Int& q, int scanLimit = 400);

}  // namespace weil

#endif
