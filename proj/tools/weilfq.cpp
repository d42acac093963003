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

// weilfq: command-line front end. Exit codes: 0 success or verified, 2 structured failure,
// 1 usage error. Output is deterministic for fixed inputs.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weil/arith.hpp"
#include "weil/chebyshev.hpp"
#include "weil/enumerate.hpp"
#include "weil/exp.hpp"
#include "weil/interval_pipeline.hpp"
#include "weil/largeq.hpp"
#include "weil/potential.hpp"
#include "weil/realize.hpp"
#include "weil/witness.hpp"

using namespace weil;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kUsage = 1, kFailed = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& s, const char* what) {
    Int v;
    if (s.empty() || v.set_str(s, 10) != 0) throw UsageError(std::string(what) + ": not an integer: " + s);
    return v;
}

// "3", "-1/8" or "0.125"
Rat parse_rat(const std::string& s, const char* what) {
    Rat r;
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        if (s.empty() || r.set_str(s, 10) != 0) throw UsageError(std::string(what) + ": not a rational: " + s);
        r.canonicalize();
        if (r.get_den() == 0) throw UsageError(std::string(what) + ": zero denominator");
        return r;
    }
    const std::string frac = s.substr(dot + 1);
    const Int whole = parse_int(s.substr(0, dot) + frac, what);
    return Rat(whole) / Rat(pow_int(Int(10), static_cast<unsigned long>(frac.size())));
}

Int parse_q(const std::string& s) {
    const Int q = parse_int(s, "--q");
    try {
        (void)prime_power(q);
    } catch (const std::exception&) {
        throw UsageError("--q: not a prime power: " + s);
    }
    return q;
}

json interval_json(const RatInterval& x) { return json{{"lo", x.lo.get_d()}, {"hi", x.hi.get_d()}, {"exactLo", x.lo.get_str()}, {"exactHi", x.hi.get_str()}}; }

json poly_json(const IntPoly& f) {
    json a = json::array();
    for (const Int& x : f.c) a.push_back(x.get_str());
    return a;
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weil polynomials over F_q: certified construction and enumeration of abelian variety orders"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "weilfq 1.0.0");

    std::string qs, ms, modeS = "any", emit = "count", method = "auto", file, lambdaS, epsS, cS, rS, seedS = "one";
    int n = 0, nmax = -1, d = 54, nodes = 2048, scan = 400;
    bool ordinary = false, asJson = false, grid = false;
    std::string epsilonS = "1/10", boundS;

    auto* realizeCmd = app.add_subcommand("realize", "find a certified Weil polynomial with f(1) = m");
    realizeCmd->add_option("--q", qs, "prime power")->required();
    realizeCmd->add_option("--m", ms, "target order")->required();
    realizeCmd->add_flag("--ordinary", ordinary, "require an ordinary witness");
    realizeCmd->add_option("--method", method, "auto|enumerate|exp|interval|largeq|chebyshev")
        ->check(CLI::IsMember({"auto", "enumerate", "exp", "interval", "largeq", "chebyshev"}));

    auto* certifyCmd = app.add_subcommand("certify", "re-certify a witness JSON file");
    certifyCmd->add_option("file", file, "witness file, - for stdin")->required();

    auto* enumCmd = app.add_subcommand("enumerate", "all Weil polynomials of dimension n");
    enumCmd->add_option("--q", qs)->required();
    enumCmd->add_option("--n", n)->required()->check(CLI::Range(1, 6));
    enumCmd->add_option("--mode", modeS)->check(CLI::IsMember({"any", "ordinary", "squarefree", "ordinary-squarefree"}));
    enumCmd->add_option("--emit", emit, "count|csv|json")->check(CLI::IsMember({"count", "csv", "json"}));

    auto* excCmd = app.add_subcommand("exceptions", "integers up to a bound that are not orders");
    excCmd->add_option("--q", qs)->required();
    excCmd->add_option("--bound", boundS)->required();
    excCmd->add_option("--mode", modeS)->check(CLI::IsMember({"any", "ordinary", "squarefree", "ordinary-squarefree"}));
    excCmd->add_option("--nmax", nmax, "dimension cap; default: smallest complete");
    excCmd->add_flag("--json", asJson);

    auto* ivCmd = app.add_subcommand("interval", "realized interval around a seed");
    ivCmd->add_option("--q", qs)->required();
    ivCmd->add_option("--n", n)->required()->check(CLI::Range(2, 4096));
    ivCmd->add_option("--seed", seedS, "one (h = 1) or an exp target m");

    auto* feasCmd = app.add_subcommand("feasible", "n0 search with certified transcripts");
    feasCmd->add_option("--q", qs)->required();
    feasCmd->add_option("--scan", scan, "scan limit")->check(CLI::Range(2, 100000));
    feasCmd->add_flag("--json", asJson);

    auto* chebCmd = app.add_subcommand("chebyshev", "Chebyshev seed and ledger run");
    chebCmd->add_option("--q", qs)->required();
    chebCmd->add_option("--n", n)->required()->check(CLI::Range(2, 100000));
    chebCmd->add_option("--m", ms)->required();
    chebCmd->add_option("--d", d)->check(CLI::Range(2, 100000));
    chebCmd->add_option("--epsilon", epsilonS);

    auto* lqCmd = app.add_subcommand("largeq", "large-q construction, or the gap interval with --gap-lambda");
    lqCmd->add_option("--q", qs)->required();
    lqCmd->add_option("--n", n)->required()->check(CLI::Range(2, 4096));
    lqCmd->add_option("--m", ms);
    lqCmd->add_option("--lambda", lambdaS, "construction range, < lambda1");
    lqCmd->add_option("--gap-lambda", cS, "gap predictor lambda, lambda1 < |lambda| < 2n");
    lqCmd->add_option("--eps", epsS, "region shrink");

    auto* figCmd = app.add_subcommand("figure", "CSV of (order, c1) over dimension-2 classes");
    figCmd->add_option("--q", qs)->required();

    auto* potCmd = app.add_subcommand("potential", "arc equilibrium potential against -log M(r)");
    potCmd->add_option("--c", cS);
    potCmd->add_option("--r", rS);
    potCmd->add_option("--nodes", nodes)->check(CLI::Range(8, 1 << 22));
    potCmd->add_flag("--grid", grid, "the 18-point check grid");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*realizeCmd) {
            const Int q = parse_q(qs), m = parse_int(ms, "--m");
            if (m < 1) throw UsageError("--m: must be >= 1");
            RealizeOptions opt;
            opt.ordinary = ordinary;
            opt.method = method;
            const RealizeOutcome r = realize(q, m, opt);
            if (r.witness) {
                std::cout << to_json(*r.witness) << "\n";
                return kOk;
            }
            json j{{"status", to_string(r.status)}, {"q", q.get_str()}, {"m", m.get_str()}, {"attempts", r.attempts}};
            if (r.status == RealizeStatus::NonExistent) j["completeness"] = r.completeness;
            else j["note"] = "not found by implemented methods; this is not a non-existence claim";
            print(j);
            return kFailed;
        }
        if (*certifyCmd) {
            std::stringstream buf;
            if (file == "-") {
                buf << std::cin.rdbuf();
            } else {
                std::ifstream in(file);
                if (!in) throw UsageError("certify: cannot read " + file);
                buf << in.rdbuf();
            }
            WitnessRecord w;
            try {
                w = witness_from_json(buf.str());
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            const Recertification rc = recertify(w);
            const bool verified = rc.flagsReproduced && rc.certificate.hondaTate != HondaTate::Failed && rc.certificate.hondaTate != HondaTate::Unknown;
            json j{{"verified", verified},
                   {"flagsReproduced", rc.flagsReproduced},
                   {"mismatch", rc.mismatch},
                   {"certificate", json::parse(certificate_json(rc.certificate))}};
            print(j);
            return verified ? kOk : kFailed;
        }
        if (*enumCmd) {
            const Int q = parse_q(qs);
            EnumTask task{q, n, enum_mode_from_string(modeS), {}};
            long count = 0;
            if (emit == "csv") std::cout << "c,order,hondaTate,ordinary,squarefree\n";
            json all = json::array();
            enum_weil(task, [&](const EnumRecord& r) {
                ++count;
                if (emit == "csv") {
                    std::ostringstream c;
                    for (std::size_t i = 0; i < r.c.size(); ++i) c << (i ? ";" : "") << r.c[i];
                    std::cout << c.str() << "," << r.cert.order << "," << to_string(r.cert.hondaTate) << "," << r.cert.ordinary << ","
                              << r.cert.squarefree << "\n";
                } else if (emit == "json") {
                    all.push_back(json{{"c", r.c}, {"f", poly_json(r.w.f)}, {"order", r.cert.order.get_str()},
                                       {"hondaTate", to_string(r.cert.hondaTate)}, {"ordinary", r.cert.ordinary}, {"squarefree", r.cert.squarefree}});
                }
            });
            if (emit == "count") std::cout << count << "\n";
            if (emit == "json") print(all);
            return kOk;
        }
        if (*excCmd) {
            const Int q = parse_q(qs), bound = parse_int(boundS, "--bound");
            const ExceptionReport rep = exceptions(q, bound, enum_mode_from_string(modeS), nmax);
            if (asJson) {
                json ex = json::array(), und = json::array();
                for (const Int& x : rep.exceptions) ex.push_back(x.get_str());
                for (const Int& x : rep.undecided) und.push_back(x.get_str());
                print(json{{"q", q.get_str()}, {"bound", bound.get_str()}, {"mode", to_string(rep.mode)}, {"nMax", rep.nMax},
                           {"exceptions", ex}, {"undecided", und}, {"complete", rep.complete},
                           {"dimensionLimited", rep.dimensionLimited}, {"note", rep.note}});
            } else {
                for (std::size_t i = 0; i < rep.exceptions.size(); ++i) std::cout << (i ? " " : "") << rep.exceptions[i];
                std::cout << "\n";
            }
            return kOk;
        }
        if (*ivCmd) {
            const Int q = parse_q(qs);
            RatPoly h = RatPoly::constant(Rat(1));
            if (seedS != "one") h = build_candidate(ExpParams{q, n, parse_int(seedS, "--seed")}).hInt;
            const RealizedInterval iv = realize_interval(h, q, n);
            print(json{{"q", q.get_str()}, {"n", n}, {"center", iv.center.get_str()}, {"N", iv.N.get_str()}, {"r", iv.r},
                       {"mu", iv.mu.get_d()}, {"muOrd", iv.muOrd.get_d()}, {"lo", iv.lo().get_str()}, {"hi", iv.hi().get_str()}});
            return kOk;
        }
        if (*feasCmd) {
            const Int q = parse_q(qs);
            const N0Result r = find_n0(q, scan);
            if (asJson) {
                json t = json::array();
                for (const FeasibilityReport& f : r.transcript)
                    t.push_back(json{{"n", f.n}, {"main", f.main}, {"lhs", f.lhs.get_d()}, {"rhs", f.rhs.get_d()}, {"simpler", f.simpler},
                                     {"q7", f.q7}, {"q16", f.q16}});
                print(json{{"q", q.get_str()}, {"n0", r.n0}, {"nStar", r.nStar}, {"beatsThreeRootQLogQ", r.beatsThreeRootQLogQ}, {"transcript", t}});
            } else {
                std::cout << "n0 " << r.n0 << "\nnStar " << r.nStar << "\n";
            }
            return r.n0 > 0 ? kOk : kFailed;
        }
        if (*chebCmd) {
            const Int q = parse_q(qs), m = parse_int(ms, "--m");
            const ChebySeed seed = build_P(q, d, parse_rat(epsilonS, "--epsilon"));
            json j{{"seed",
                    {{"d", seed.d}, {"unitAtZero", seed.unitAtZero}, {"positiveOnR", seed.positiveOnR}, {"diskMu", seed.disk.mu.get_d()},
                     {"floorBound", seed.floorBound.get_d()}, {"certified", seed.certified()}, {"leftEnd", interval_json(seed.leftEnd)},
                     {"rightEnd", interval_json(seed.rightEnd)}}}};
            if (!seed.certified()) {
                j["ledger"] = nullptr;
                print(j);
                return kFailed;
            }
            const LedgerResult r = run_ledger(seed, n, m, trivial_target(n));
            j["ledger"] = json{{"success", r.success}, {"failedStage", r.failedStage}, {"ell", r.shape.ell}, {"b", r.shape.b},
                               {"precision", r.precision}};
            if (r.success) j["witness"] = json::parse(to_json(make_witness(r.fHat, q, "chebyshev")));
            print(j);
            return r.success ? kOk : kFailed;
        }
        if (*lqCmd) {
            const Int q = parse_q(qs);
            if (!cS.empty()) {
                const Rat eps = epsS.empty() ? make_rat(1, 8) : parse_rat(epsS, "--eps");
                const GapInterval g = gap_interval(q, n, parse_rat(cS, "--gap-lambda"), eps);
                print(json{{"q", q.get_str()}, {"n", n}, {"r", g.r.get_str()}, {"lo", g.lo.get_d()}, {"hi", g.hi.get_d()},
                           {"empty", g.empty}, {"first", g.empty ? json(nullptr) : json(g.first.get_str())},
                           {"last", g.empty ? json(nullptr) : json(g.last.get_str())}});
                return kOk;
            }
            if (ms.empty()) throw UsageError("largeq: --m or --gap-lambda is required");
            LargeQOptions opt;
            if (!lambdaS.empty()) opt.lambda = parse_rat(lambdaS, "--lambda");
            if (!epsS.empty()) opt.eps = parse_rat(epsS, "--eps");
            try {
                const LargeQResult r = construct_large_q(q, n, parse_int(ms, "--m"), opt);
                std::cout << to_json(make_witness(r.f, q, "largeq")) << "\n";
                return kOk;
            } catch (const ConstructionFailed& e) {
                print(json{{"status", "failed"}, {"stage", e.stage()}, {"message", e.what()}});
                return kFailed;
            }
        }
        if (*figCmd) {
            const Int q = parse_q(qs);
            std::cout << "order,c1\n";
            for (const auto& [order, c1] : figure_data(q)) std::cout << order << "," << c1 << "\n";
            return kOk;
        }
        if (*potCmd) {
            json rows = json::array();
            if (grid) {
                for (const PotentialRow& row : potential_grid(nodes))
                    rows.push_back(json{{"c", row.c.get_str()}, {"r", row.r.get_str()}, {"U", row.U.to_double()},
                                        {"minusLogM", row.minusLogM.to_double()}, {"gap", row.gap}});
            } else {
                if (cS.empty() || rS.empty()) throw UsageError("potential: --c and --r, or --grid");
                const Rat c = parse_rat(cS, "--c"), r = parse_rat(rS, "--r");
                const RatInterval U = mu_c_potential(c, r, nodes);
                const RatInterval mlm = -log(M_exact(c, r).enclose(200), 200);
                const RatInterval diff = U - mlm;
                rows.push_back(json{{"c", c.get_str()}, {"r", r.get_str()}, {"U", U.to_double()}, {"minusLogM", mlm.to_double()},
                                    {"gap", std::max(std::fabs(diff.lo.get_d()), std::fabs(diff.hi.get_d()))}});
            }
            print(rows);
            return kOk;
        }
    } catch (const UsageError& e) {
        print(json{{"error", "usage"}, {"message", e.what()}});
        return kUsage;
    } catch (const std::invalid_argument& e) {
        print(json{{"error", "precondition"}, {"message", e.what()}});
        return kUsage;
    } catch (const std::domain_error& e) {
        print(json{{"error", "domain"}, {"message", e.what()}});
        return kFailed;
    } catch (const ConstructionFailed& e) {
        print(json{{"status", "failed"}, {"stage", e.stage()}, {"message", e.what()}});
        return kFailed;
    }
    return kUsage;
}
