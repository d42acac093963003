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

#ifndef WEIL_WITNESS_HPP
#define WEIL_WITNESS_HPP

#include <optional>
#include <string>

#include "weil/cert.hpp"

namespace weil {

// Serialized form "weilfq.witness.v1": integers as decimal strings, coefficients ascending.
struct WitnessRecord {
    Int q, p;
    int e = 0;
    int n = 0;
    IntPoly f;
    Int order;
    bool ordinary = false;
    bool squarefree = false;
    HondaTate hondaTate = HondaTate::Failed;
    std::optional<Int> congruenceModulus;  // L when f was built to match a congruence target
    std::string method;                    // enumerate | exp | interval | chebyshev | largeq
    std::optional<std::string> transcriptRef;
};

WitnessRecord make_witness(const IntPoly& f, const Int& q, const std::string& method);
std::string to_json(const WitnessRecord& w, int indent = 2);
// Throws std::invalid_argument on a malformed record or wrong schema tag.
WitnessRecord witness_from_json(const std::string& text);

struct Recertification {
    Certificate certificate;
    bool flagsReproduced = false;
    std::string mismatch;  // first differing field
};
// Recomputes every flag from (q, f) alone.
Recertification recertify(const WitnessRecord& w);

std::string certificate_json(const Certificate& c, int indent = 2);

}  // namespace weil

#endif
