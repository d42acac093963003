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

#ifndef WEIL_POTENTIAL_HPP
#define WEIL_POTENTIAL_HPP

#include <vector>

#include "weil/chebyshev.hpp"
#include "weil/interval.hpp"
#include "weil/quad.hpp"

namespace weil {

// M(r) = (1 - r + sqrt((1 - r)^2 + 4 r c^2)) / 2 for r <= 1; exact for rational c.
QuadNum M_exact(const Rat& c, const Rat& r);
RatInterval M_enclosure(const RatInterval& c, const Rat& r, long bits = 96);

struct BoundPoint {
    Rat r;
    RatInterval value;        // |f(r)|^{1/d}
    bool hasLower = false;    // r in [0, 1]
    RatInterval lowerMargin;  // value - M(r)
    RatInterval upperMargin;  // M(-r) - value
    bool lowerOk = false, upperOk = false;
};

struct BoundReport {
    int d = 0;
    RatInterval c;
    Rat mu;  // certified lower bound of |f| on the closed unit disk
    std::vector<BoundPoint> points;
    bool all_hold() const;
};

// f given by coefficient enclosures in the unit-disk variable, f(0) = 1 exactly, r >= 0 on the
// grid. Membership in F(d, c) is certified by disk-cert on |w| <= 1 against c^d; throws
// std::invalid_argument when it is not.
BoundReport check_lower_bound(const std::vector<RatInterval>& f, const RatInterval& c,
                              const std::vector<Rat>& grid, long bits = 96);
// Seed P on |z| <= q^{-1/2}, read as f(w) = P(q^{-1/2} w) with c = q^{-1/4}. Uses the seed's own
// disk certificate.
BoundReport check_lower_bound(const ChebySeed& seed, const std::vector<Rat>& grid, long bits = 96);

// Log-potential at real r of the equilibrium measure on the arc |z| = 1, |z - 1| <= 2c, through
// the arcsine measure on [2 - 4c^2, 2] at r + 1/r. Periodic trapezoid rule with the analytic-strip
// error bound folded into the enclosure. Throws std::domain_error when r is too close to the arc
// for the node count.
RatInterval mu_c_potential(const Rat& c, const Rat& r, int nodes = 2048);

struct PotentialRow {
    Rat c, r;
    RatInterval U;          // mu_c_potential
    RatInterval minusLogM;  // -log M(r)
    double gap = 0;         // max |U - (-log M)| over the enclosures
};
// c in {1/4, 1/2, 3/4} x r in {-2, -1, -1/2, 1/4, 1/2, 9/10}.
std::vector<PotentialRow> potential_grid(int nodes = 2048);

}  // namespace weil

#endif
