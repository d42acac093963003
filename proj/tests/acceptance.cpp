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

// Acceptance runner: one PASS/FAIL line per criterion. Exit status is 0 when every criterion
// outside --known-red passes. A known-red criterion that passes is reported, so the list cannot
// silently go stale.

#include <gmpxx.h>

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "oracle.hpp"
#include "weil/arith.hpp"
#include "weil/chebyshev.hpp"
#include "weil/congruence.hpp"
#include "weil/enumerate.hpp"
#include "weil/exp.hpp"
#include "weil/interval_pipeline.hpp"
#include "weil/largeq.hpp"
#include "weil/potential.hpp"

using namespace weil;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string join(const std::vector<Int>& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

std::set<Int> orders_n2(const Int& q) {
    std::set<Int> s;
    enum_weil(EnumTask{q, 2, EnumMode::Any, {}}, [&](const EnumRecord& r) { s.insert(r.cert.order); });
    return s;
}

Verdict c1() {
    std::set<Int> all, ord;
    long classes = 0;
    enum_weil(EnumTask{Int(2), 1, EnumMode::Any, {}}, [&](const EnumRecord& r) {
        ++classes;
        all.insert(r.cert.order);
        if (r.cert.ordinary) ord.insert(r.cert.order);
    });
    const bool ok = classes == 5 && all == std::set<Int>{1, 2, 3, 4, 5} && ord == std::set<Int>{2, 4};
    return {ok, std::to_string(classes) + " classes, orders {" + join({all.begin(), all.end()}) + "}, ordinary {" + join({ord.begin(), ord.end()}) + "}"};
}

Verdict c2() {
    const ExceptionReport a = exceptions(Int(7), Int(53), EnumMode::Any);
    const ExceptionReport o = exceptions(Int(7), Int(146), EnumMode::Ordinary, 4);
    const ExceptionReport s = exceptions(Int(7), Int(53), EnumMode::Squarefree);
    const bool ok = a.exceptions == std::vector<Int>{2, 14, 17} && a.complete && a.undecided.empty() &&
                    o.exceptions == std::vector<Int>{2, 8, 14, 17, 73} && o.complete && o.undecided.empty() &&
                    s.exceptions == std::vector<Int>{2, 14, 16, 17} && s.complete && s.undecided.empty();
    return {ok, "any<=53 {" + join(a.exceptions) + "}, ordinary<=146 n<=4 {" + join(o.exceptions) + "}, squarefree<=53 {" + join(s.exceptions) + "}"};
}

Verdict c3() {
    const RealizableSet r = realizable_orders(Int(4), 4, EnumMode::Ordinary, Int(64));
    const bool absent = r.orders.count(Int(3)) == 0 && r.unknownOrders.count(Int(3)) == 0;
    return {absent, std::string("3 ") + (absent ? "absent" : "present") + " for n <= 4 (dimension-limited: (sqrt 4 - 1)^{2n} = 1)"};
}

Verdict c4() {
    bool ok = true;
    std::ostringstream d;
    for (long q : {3, 4, 5, 7, 8, 9, 11, 13}) {
        const N0Result r = find_n0(Int(q));
        bool transcript = !r.transcript.empty();
        for (const FeasibilityReport& f : r.transcript)
            if (f.n >= r.n0 && !f.main) transcript = false;
        const bool thisOk = r.n0 > 0 && r.n0 <= 25 && transcript && (q < 11 || r.beatsThreeRootQLogQ);
        ok = ok && thisOk;
        d << (q == 3 ? "" : " ") << q << ":" << r.n0 << (thisOk ? "" : "!");
    }
    return {ok, "n0 " + d.str()};
}

Verdict c5() {
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(20261016);
    bool ok = true;
    std::ostringstream d;
    for (long qv : {2, 3, 5}) {
        const Int q(qv);
        const int n = find_n0(q).n0;
        // [q^{n-1/2}, q^{n+1/2}): ceil(sqrt(q^{2n-1})) .. ceil(sqrt(q^{2n+1})) - 1
        const auto ceil_sqrt = [](const Int& x) {
            Int s = sqrt(x);
            if (s * s < x) ++s;
            return s;
        };
        const Int lo = ceil_sqrt(pow_int(q, static_cast<unsigned long>(2 * n - 1)));
        const Int hi = ceil_sqrt(pow_int(q, static_cast<unsigned long>(2 * n + 1)));
        int pass = 0;
        for (int i = 0; i < 100; ++i) {
            const Int m = lo + Int(rng.get_z_range(hi - lo));
            try {
                const ExpResult r = build_candidate(ExpParams{q, n, m});
                pass += r.certificate.hondaTate == HondaTate::VerifiedOrdinary && r.certificate.order == m && r.certificate.squarefree;
            } catch (const ConstructionFailed&) {
            }
        }
        ok = ok && pass == 100;
        d << (qv == 2 ? "" : ", ") << "q=" << qv << " n=" << n << " " << pass << "/100";
    }
    return {ok, d.str()};
}

Verdict c6() {
    const RealizedInterval iv = realize_interval(RatPoly::constant(Rat(1)), Int(2), 10);
    bool ok = iv.mu == 1 && iv.r == 4 && iv.N == 134 && iv.lo() == 891 && iv.hi() == 1159;
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(6);
    int pass = 0;
    for (int i = 0; i < 20; ++i) {
        const Int t = iv.lo() + Int(rng.get_z_range(iv.hi() - iv.lo() + 1));
        try {
            const IntervalWitness w = realize_integer(iv, t);
            pass += w.certificate.hondaTate == HondaTate::VerifiedOrdinary && w.certificate.order == t;
        } catch (const ConstructionFailed&) {
        }
    }
    ok = ok && pass == 20;
    return {ok, "mu=" + iv.mu.get_str() + " r=" + std::to_string(iv.r) + " N=" + iv.N.get_str() + " [" + iv.lo().get_str() + "," +
                    iv.hi().get_str() + "], " + std::to_string(pass) + "/20 targets"};
}

Verdict c7() {
    std::ostringstream d;
    const ChebySeed s54 = build_P(Int(2), 54, make_rat(1, 10));
    const auto [lim, limHi] = attained_interval(Int(2));
    const ChebySeed s200 = build_P(Int(2), 200, make_rat(1, 1000), false);
    const double e1 = std::fabs(s200.leftEnd.to_double() - lim.to_double());
    const double e2 = std::fabs(s200.rightEnd.to_double() - limHi.to_double());
    const bool seedOk = s54.certified() && e1 < 0.05 && e2 < 0.05;
    d << "seed d=54 " << (s54.certified() ? "certified" : "NOT certified") << ", d=200 endpoint errors " << e1 << " " << e2;
    bool ledgerOk = false;
    for (int n : {60, 90, 120}) {
        const Int m = pow_int(Int(2), static_cast<unsigned long>(n));
        const CongruenceTarget t = assemble_target(Int(2), n, m);
        const LedgerResult r = run_ledger(s54, n, m, ledger_target(t));
        d << "; ledger n=" << n << ": " << (r.success ? "success" : r.failedStage.substr(0, r.failedStage.find(' ')));
        if (r.success && r.certificate.rootsOnCircle && r.certificate.qSymmetric && r.fHat.eval(Int(1)) == m && conforms(r.fHat, t)) {
            ledgerOk = true;
            break;
        }
    }
    return {seedOk && ledgerOk, d.str()};
}

Verdict c8() {
    const Int q(1009);
    const Int w = sqrt(Int(361 * q * q * q / 100));
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(8);
    int pass = 0;
    for (int i = 0; i < 50; ++i) {
        const Int m = q * q - w + Int(rng.get_z_range(2 * w + 1));
        try {
            const LargeQResult r = construct_large_q(q, 2, m);
            pass += r.certificate.order == m && r.certificate.rootsOnCircle;
        } catch (const std::exception&) {
        }
    }
    const GapInterval g = gap_interval(q, 2, Rat(3), make_rat(1, 8));
    const std::set<Int> s = orders_n2(q);
    long hits = 0, size = 0;
    for (Int m = g.first; !g.empty && m <= g.last; ++m, ++size) hits += static_cast<long>(s.count(m));
    return {pass == 50 && !g.empty && hits == 0,
            std::to_string(pass) + "/50 constructed; gap [" + g.first.get_str() + "," + g.last.get_str() + "] " + std::to_string(size) +
                " integers, " + std::to_string(hits) + " realized"};
}

Verdict c9() {
    const std::vector<Int> scan = eisenstein_scan(Int(9));
    const std::set<Int> s9 = orders_n2(Int(9));
    bool absent = !scan.empty();
    for (const Int& m : scan) absent = absent && s9.count(m) == 0;
    bool figOk = true;
    std::ostringstream d;
    for (long q : {9, 11}) {
        long count = 0;
        enum_weil(EnumTask{Int(q), 2, EnumMode::Any, {}}, [&](const EnumRecord&) { ++count; });
        const auto fig = figure_data(Int(q));
        figOk = figOk && static_cast<long>(fig.size()) == count;
        d << ", figure q=" << q << " " << fig.size() << " points / " << count << " classes";
    }
    return {absent && figOk, "obstructed q=9 {" + join(scan) + "} " + (absent ? "all unrealized" : "REALIZED") + d.str()};
}

Verdict c10() {
    double worst = 0;
    for (const PotentialRow& r : potential_grid()) worst = std::max(worst, r.gap);
    bool exact = true;
    for (const Rat& c : {make_rat(1, 4), make_rat(1, 2), make_rat(3, 4)})
        exact = exact && M_exact(c, Rat(0)) == QuadNum(1) && M_exact(c, Rat(1)) == QuadNum(c);
    std::vector<Rat> grid;
    for (int k = 0; k <= 24; ++k) grid.push_back(make_rat(k, 8));
    bool margins = true;
    int members = 0;
    for (int d : {16, 20, 30, 54}) {
        const ChebySeed s = build_P(Int(2), d, make_rat(1, 10));
        if (!s.certified()) continue;
        ++members;
        margins = margins && check_lower_bound(s, grid).all_hold();
    }
    std::ostringstream o;
    o << "max |U + log M| = " << worst << ", M(0)=1 and M(1)=c " << (exact ? "exact" : "WRONG") << ", margins >= 0 on " << members
      << " certified seeds: " << (margins ? "yes" : "NO");
    return {worst < 1e-6 && exact && margins && members == 4, o.str()};
}

Verdict c11() {
    std::mt19937_64 rng(11);
    const std::vector<long> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49};
    int on = 0, off = 0, disagree = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const long q = qs[static_cast<std::size_t>(trial) % qs.size()];
        const int n = 1 + trial % 7;
        const IntPoly g = oracle::planted_companion(rng, q, n, 0.15);
        const IntPoly f = from_companion(g, Int(q));
        const bool exact = roots_on_circle(f, Int(q));
        disagree += exact != oracle::on_circle_via_companion(g, static_cast<double>(q));
        (exact ? on : off)++;
    }
    return {disagree == 0 && on > 1000 && off > 1000,
            "10000 planted: " + std::to_string(on) + " on, " + std::to_string(off) + " off, " + std::to_string(disagree) + " disagreements"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> knownRed, only;
    app.add_option("--known-red", knownRed, "criteria expected to fail")->delimiter(',');
    app.add_option("--only", only, "run a subset")->delimiter(',');
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"enumeration q=2 n=1", c1},      {"q=7 exceptions", c2},           {"q=4 ordinary, 3 absent", c3},
        {"n0 <= 25 for q in 3..13", c4},  {"exp round trip at n0", c5},     {"interval trace q=2 n=10", c6},
        {"Chebyshev pipeline", c7},       {"large-q consistency", c8},      {"q=9 Eisenstein gap and figure data", c9},
        {"potential identity", c10},      {"Sturm soundness sweep", c11}};
    const std::set<int> red(knownRed.begin(), knownRed.end()), sel(only.begin(), only.end());
    int unexpected = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!sel.empty() && !sel.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string tag;
        if (red.count(id)) tag = v.pass ? " (listed known-red but passes)" : " (known-red)";
        else if (!v.pass) ++unexpected;
        std::cout << (v.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << ": " << v.detail << " [" << std::fixed
                  << std::setprecision(1) << secs << "s]" << tag << std::endl;
        std::cout.unsetf(std::ios::fixed);
        std::cout << std::setprecision(6);
    }
    return unexpected == 0 ? 0 : 1;
}
