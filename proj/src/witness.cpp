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

#include "weil/witness.hpp"

#include <stdexcept>

#include "json.hpp"

namespace weil {

namespace {

using json = nlohmann::ordered_json;

Int parse_int(const json& j, const char* field) {
    if (!j.is_string()) throw std::invalid_argument(std::string("witness: ") + field + " must be a decimal string");
    Int v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument(std::string("witness: bad integer in ") + field);
    return v;
}

const json& need(const json& j, const char* field) {
    if (!j.contains(field)) throw std::invalid_argument(std::string("witness: missing ") + field);
    return j.at(field);
}

json certificate_object(const Certificate& c) {
    return json{{"monic", c.monic},
                {"qSymmetric", c.qSymmetric},
                {"rootsOnCircle", c.rootsOnCircle},
                {"ordinary", c.ordinary},
                {"hondaTate", to_string(c.hondaTate)},
                {"pRank", c.pRank},
                {"order", c.order.get_str()},
                {"squarefree", c.squarefree},
                {"note", c.note}};
}

}  // namespace

WitnessRecord make_witness(const IntPoly& f, const Int& q, const std::string& method) {
    const WeilCandidate w = make_candidate(f, q, method);
    const Certificate c = certify(w, false);
    WitnessRecord r;
    r.q = q;
    r.p = w.p;
    r.e = w.e;
    r.n = w.n;
    r.f = f;
    r.order = c.order;
    r.ordinary = c.ordinary;
    r.squarefree = c.squarefree;
    r.hondaTate = c.hondaTate;
    r.method = method;
    return r;
}

std::string to_json(const WitnessRecord& w, int indent) {
    json f = json::array();
    for (const Int& x : w.f.c) f.push_back(x.get_str());
    json j{{"schema", "weilfq.witness.v1"},
           {"q", w.q.get_str()},
           {"p", w.p.get_str()},
           {"e", w.e},
           {"n", w.n},
           {"f", f},
           {"order", w.order.get_str()},
           {"flags",
            {{"ordinary", w.ordinary},
             {"squarefree", w.squarefree},
             {"hondaTate", to_string(w.hondaTate)},
             {"congruenceConformant", w.congruenceModulus ? json(w.congruenceModulus->get_str()) : json(nullptr)}}},
           {"method", w.method},
           {"transcriptRef", w.transcriptRef ? json(*w.transcriptRef) : json(nullptr)}};
    return j.dump(indent);
}

WitnessRecord witness_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("witness: ") + e.what());
    }
    if (!j.is_object() || need(j, "schema") != "weilfq.witness.v1") throw std::invalid_argument("witness: schema must be weilfq.witness.v1");
    WitnessRecord w;
    try {
        w.q = parse_int(need(j, "q"), "q");
        w.p = parse_int(need(j, "p"), "p");
        w.e = need(j, "e").get<int>();
        w.n = need(j, "n").get<int>();
        std::vector<Int> c;
        for (const json& x : need(j, "f")) c.push_back(parse_int(x, "f"));
        w.f = IntPoly(std::move(c));
        w.order = parse_int(need(j, "order"), "order");
        const json& fl = need(j, "flags");
        w.ordinary = need(fl, "ordinary").get<bool>();
        w.squarefree = need(fl, "squarefree").get<bool>();
        w.hondaTate = honda_tate_from_string(need(fl, "hondaTate").get<std::string>());
        if (fl.contains("congruenceConformant") && !fl.at("congruenceConformant").is_null())
            w.congruenceModulus = parse_int(fl.at("congruenceConformant"), "congruenceConformant");
        w.method = need(j, "method").get<std::string>();
        if (j.contains("transcriptRef") && !j.at("transcriptRef").is_null()) w.transcriptRef = j.at("transcriptRef").get<std::string>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("witness: ") + e.what());
    }
    return w;
}

Recertification recertify(const WitnessRecord& w) {
    Recertification r;
    const WeilCandidate c = make_candidate(w.f, w.q, w.method);
    r.certificate = certify(c, false);
    const Certificate& k = r.certificate;
    if (c.p != w.p || c.e != w.e) r.mismatch = "p/e";
    else if (c.n != w.n) r.mismatch = "n";
    else if (k.order != w.order) r.mismatch = "order";
    else if (k.ordinary != w.ordinary) r.mismatch = "ordinary";
    else if (k.squarefree != w.squarefree) r.mismatch = "squarefree";
    else if (k.hondaTate != w.hondaTate) r.mismatch = "hondaTate";
    r.flagsReproduced = r.mismatch.empty();
    return r;
}

std::string certificate_json(const Certificate& c, int indent) { return certificate_object(c).dump(indent); }

}  // namespace weil
