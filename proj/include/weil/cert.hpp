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

#ifndef WEIL_CERT_HPP
#define WEIL_CERT_HPP

#include <string>
#include <vector>

#include "weil/arith.hpp"
#include "weil/interval.hpp"
#include "weil/poly.hpp"

namespace weil {

struct WeilCandidate {
    Int q, p;
    int e = 0;
    int n = 0;
    IntPoly f;
    std::string provenance;
};

// Infers p, e from q and n from deg f; throws on odd degree or q not a prime power.
WeilCandidate make_candidate(IntPoly f, const Int& q, std::string provenance);

enum class HondaTate { VerifiedOrdinary, VerifiedPrimeQ, VerifiedNewton, Unknown, Failed };

const char* to_string(HondaTate h);
HondaTate honda_tate_from_string(const std::string& s);

// Lower convex hull segment of the points (i, v_p(f_i)).
struct NewtonSegment {
    int start = 0;   // x-coordinate of the left vertex
    int length = 0;
    Rat slope;       // root valuation v_p(alpha), nonnegative; divide by e for v(q) = 1 normalization
};

std::vector<NewtonSegment> newton_polygon(const IntPoly& f, const Int& p);

// Degrees of the Q_p-irreducible factors of squarefree f whose roots lie on segment s, sorted; empty when
// undetermined. Uses residual polynomials, refining repeated residual roots of integer-slope segments by translation.
std::vector<int> segment_factor_degrees(const IntPoly& f, const NewtonSegment& s, const Int& p);

struct Certificate {
    bool monic = false;       // (a): monic of degree 2n
    bool qSymmetric = false;  // (b)
    bool rootsOnCircle = false;  // (c)
    bool ordinary = false;    // (d)
    HondaTate hondaTate = HondaTate::Failed;
    int pRank = -1;           // number of p-adic unit roots; -1 only when (a) fails
    Int order;                // f(1), always recomputed
    bool squarefree = false;
    std::string note;         // first failing condition or the reason for Unknown
};

// x^{2n} h(1/x) + q^n h(x/q); requires deg h < 2n.
RatPoly hat(const RatPoly& h, int n, const Int& q);
IntPoly hat(const IntPoly& h, int n, const Int& q);

// Throws std::invalid_argument unless deg f == 2n.
bool is_q_symmetric(const IntPoly& f, const Int& q, int n);

// G with x^n G(x + q/x) = f; throws std::invalid_argument when f is not q-symmetric.
IntPoly to_companion(const IntPoly& f, const Int& q);
IntPoly from_companion(const IntPoly& g, const Int& q);

// All roots of G real and inside [-2 sqrt q, 2 sqrt q]; exact.
bool companion_roots_in_range(const IntPoly& g, const Int& q);
// Requires f q-symmetric (throws otherwise).
bool roots_on_circle(const IntPoly& f, const Int& q);

// 2n - min{i : p does not divide f_i}.
int p_rank(const IntPoly& f, const Int& p);

// Tri-state evaluation of (d') for a q-symmetric f with roots on the circle.
HondaTate newton_verdict(const IntPoly& f, const PrimePower& pp, std::string* why = nullptr);

Certificate certify(const WeilCandidate& w, bool requireOrdinary = false);

struct IntervalReport {
    Int q;
    int n = 0;
    RatInterval weilLo, weilHi;            // q -+ 2 sqrt q + 1
    RatInterval hasseWeilLo, hasseWeilHi;  // the same raised to n
    RatInterval attainedLo, attainedHi;    // tau(q/2 - sqrt q + 3/2), tau(q/2 + sqrt q - 1/2); open interval
    RatInterval simplifiedLo, simplifiedHi;  // (q -+ 2 sqrt q + {3, -1} - 1/q)^n
    Rat innerLo, innerHi, outerLo, outerHi;  // exact
};

// tau(x) = x + sqrt(x^2 - 1) for x >= 1.
RatInterval tau(const RatInterval& x, long bits);

IntervalReport interval_report(const Int& q, int n, long bits = 64);

}  // namespace weil

#endif
