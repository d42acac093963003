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

#ifndef WEIL_DISK_HPP
#define WEIL_DISK_HPP

#include <vector>

#include "weil/arith.hpp"
#include "weil/interval.hpp"
#include "weil/poly.hpp"
#include "weil/quad.hpp"

namespace weil {

struct DiskCertificate {
    bool nonvanishing = false;
    Rat mu;                    // lower bound on min |h| over the boundary circle; 0 unless nonvanishing
    int subdivisionDepth = 0;  // deepest box used
    long boxesExamined = 0;
};

struct DiskOptions {
    int maxDepth = 18;
    long bits = 128;           // fixed-point scale 2^-bits of the box arithmetic
    Rat relTol = make_rat(1, 1000);  // stop refining mu once the worst boundary box is this tight
    long refineBudget = 6000;  // extra boundary boxes allowed for sharpening mu
};

// Zero exclusion on the closed disk |z|^2 <= rho2 for a real polynomial given by coefficient
// enclosures. Real coefficients make |h| conjugation-symmetric, so only the upper half disk is
// covered. Throws std::invalid_argument when the constant coefficient may vanish.
DiskCertificate certify_nonvanishing(const std::vector<RatInterval>& coeffs, const Rat& rho2,
                                     const DiskOptions& opt = {});

// D = closed disk of radius q^{-1/2}.
DiskCertificate certify_nonvanishing(const RatPoly& h, const Int& q, int maxDepth = 18);
DiskCertificate certify_nonvanishing(const QuadPoly& h, const Int& q, int maxDepth = 18);

// mu - q^{-(n-1)/2} - ((q+1)/2) q^{-n/2}, rounded down. Negative means the interval step must abort.
Rat mu_ord(const Rat& mu, const Int& q, int n);

}  // namespace weil

#endif
