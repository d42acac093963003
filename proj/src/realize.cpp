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

#include "weil/realize.hpp"

#include <sstream>
#include <stdexcept>

#include "weil/arith.hpp"
#include "weil/chebyshev.hpp"
#include "weil/enumerate.hpp"
#include "weil/exp.hpp"
#include "weil/interval_pipeline.hpp"
#include "weil/largeq.hpp"

namespace weil {

const char* to_string(RealizeStatus s) {
    switch (s) {
        case RealizeStatus::Found: return "found";
        case RealizeStatus::NotFound: return "not-found";
        case RealizeStatus::NonExistent: return "non-existent";
    }
    return "?";
}

namespace {

bool enumerable(const Int& q, int n) {
    switch (n) {
        case 1: return true;
        case 2: return q <= 5000;
        case 3: return q <= 64;
        case 4: return q <= 9;
        default: return false;
    }
}

// Sign of (sqrt q + 1)^{2n} - m, exact: (sqrt q + 1)^2 = q + 1 + 2 sqrt q.
bool below_weil_ceiling(const Int& q, int n, const Int& m) {
    const QuadNum top = QuadNum(Rat(q + 1), Rat(2), q);
    QuadNum acc(1);
    for (int i = 0; i < n; ++i) acc = acc * top;
    return !(acc < QuadNum(m));
}

bool acceptable(const Certificate& c, const Int& m, bool ordinary) {
    if (c.order != m || c.hondaTate == HondaTate::Failed || c.hondaTate == HondaTate::Unknown) return false;
    return !ordinary || c.ordinary;
}

std::optional<int> exp_dimension(const Int& q, const Int& m) {
    for (int n = 1; n < 4096; ++n) {
        if (valid(ExpParams{q, n, m})) return n;
        if (pow_int(q, static_cast<unsigned long>(n)) > m) break;
    }
    return {};
}

}  // namespace

RealizeOutcome realize(const Int& q, const Int& m, const RealizeOptions& opt) {
    (void)prime_power(q);
    if (m < 1) throw std::invalid_argument("realize: m >= 1");
    const std::string& method = opt.method;
    if (method != "auto" && method != "enumerate" && method != "exp" && method != "interval" && method != "largeq" &&
        method != "chebyshev")
        throw std::invalid_argument("realize: unknown method " + method);
    RealizeOutcome out;
    const auto found = [&](const IntPoly& f, const std::string& how) {
        out.status = RealizeStatus::Found;
        out.witness = make_witness(f, q, how);
        return out;
    };

    if (method == "auto" || method == "enumerate") {
        const EnumMode mode = opt.ordinary ? EnumMode::Ordinary : EnumMode::Any;
        bool allExhausted = true;
        std::ostringstream dims;
        int floorFrom = 0;
        for (int n = 1;; ++n) {
            // (sqrt q - 1)^{2n} > m: no dimension >= n can reach m
            if (compare_weil_floor(q, n, m) > 0) {
                floorFrom = n;
                break;
            }
            if (n > 64) {
                allExhausted = false;
                break;
            }
            if (!below_weil_ceiling(q, n, m)) continue;
            if (!enumerable(q, n)) {
                allExhausted = false;
                if (n > 4) break;
                continue;
            }
            std::optional<IntPoly> hit;
            bool unknownHit = false;
            enum_weil(EnumTask{q, n, mode, {}}, [&](const EnumRecord& r) {
                if (hit || r.cert.order != m) return;
                if (acceptable(r.cert, m, opt.ordinary))
                    hit = r.w.f;
                else
                    unknownHit = true;
            }, opt.threads);
            out.attempts.push_back("enumerate n=" + std::to_string(n) + (hit ? ": found" : unknownHit ? ": undecided (Unknown verdict)" : ": absent"));
            if (hit) return found(*hit, "enumerate");
            if (unknownHit) allExhausted = false;
            dims << (dims.tellp() > 0 ? "," : "") << n;
        }
        if (allExhausted && m > 1) {
            out.status = RealizeStatus::NonExistent;
            const std::string listed = dims.str().empty() ? "none" : "n in {" + dims.str() + "}";
            out.completeness = "(sqrt q - 1)^{2n} > m for all n >= " + std::to_string(floorFrom);
            if (floorFrom > 1)
                out.completeness += "; enumerated exhaustively: " + listed + "; every other n < " + std::to_string(floorFrom) +
                                    " has m above (sqrt q + 1)^{2n}";
            return out;
        }
        if (m == 1) {
            out.attempts.push_back("m = 1: the zero-dimensional variety");
            return out;
        }
        if (method == "enumerate") return out;
    }

    const std::optional<int> nExp = exp_dimension(q, m);
    if (method == "auto" || method == "exp") {
        if (!nExp) {
            out.attempts.push_back("exp: no n with q^{n-1/2} <= m < q^{n+1/2}");
        } else {
            try {
                const ExpResult r = build_candidate(ExpParams{q, *nExp, m});
                out.attempts.push_back("exp n=" + std::to_string(*nExp) + ": certified");
                return found(r.fHat, "exp");
            } catch (const ConstructionFailed& e) {
                out.attempts.push_back("exp n=" + std::to_string(*nExp) + ": " + e.stage() + " (" + e.what() + ")");
            }
        }
        if (method == "exp") return out;
    }

    if ((method == "auto" || method == "interval") && nExp && *nExp >= 2) {
        // seed from an exp success at a nearby center
        const int n = *nExp;
        const Int step = sqrt(pow_int(q, static_cast<unsigned long>(n))) + 1;
        bool done = false;
        for (int j = 1; j <= 8 && !done; ++j)
            for (int sgn : {1, -1}) {
                const Int center = m + sgn * j * step;
                if (!valid(ExpParams{q, n, center})) continue;
                try {
                    const ExpResult seed = build_candidate(ExpParams{q, n, center});
                    const RealizedInterval iv = realize_interval(seed.hInt, q, n);
                    if (m < iv.lo() || m > iv.hi()) continue;
                    const IntervalWitness w = realize_integer(iv, m);
                    out.attempts.push_back("interval n=" + std::to_string(n) + " seeded at " + center.get_str() + ": certified");
                    return found(w.fHat, "interval");
                } catch (const ConstructionFailed& e) {
                    continue;
                } catch (const std::invalid_argument&) {
                    continue;
                }
            }
        out.attempts.push_back("interval: no exp-seeded interval covering m");
        if (method == "interval") return out;
    }

    if (method == "auto" || method == "largeq") {
        // n with m nearest q^n
        for (int n = 2; n <= 64; ++n) {
            if (pow_int(q, static_cast<unsigned long>(n - 1)) > m) break;
            if (n == 2 && prime_power(q).e != 1) continue;
            try {
                const LargeQResult r = construct_large_q(q, n, m);
                if (!acceptable(r.certificate, m, opt.ordinary)) continue;
                out.attempts.push_back("largeq n=" + std::to_string(n) + ": certified");
                return found(r.f, "largeq");
            } catch (const std::invalid_argument&) {
                continue;
            } catch (const ConstructionFailed& e) {
                out.attempts.push_back("largeq n=" + std::to_string(n) + ": " + e.stage());
            }
        }
        if (method == "largeq") return out;
    }

    if (method == "chebyshev") {
        if (!nExp) {
            out.attempts.push_back("chebyshev: no dimension for m");
            return out;
        }
        const ChebySeed seed = build_P(q, opt.chebyshevDegree, opt.chebyshevEpsilon);
        if (!seed.certified()) {
            out.attempts.push_back("chebyshev: seed not certified");
            return out;
        }
        const LedgerResult r = run_ledger(seed, *nExp, m, trivial_target(*nExp));
        if (r.success && acceptable(r.certificate, m, opt.ordinary)) {
            out.attempts.push_back("chebyshev n=" + std::to_string(*nExp) + ": certified");
            return found(r.fHat, "chebyshev");
        }
        out.attempts.push_back("chebyshev n=" + std::to_string(*nExp) + ": " + r.failedStage);
    }
    return out;
}

}  // namespace weil
