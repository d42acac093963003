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

#ifndef WEIL_REALIZE_HPP
#define WEIL_REALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "weil/witness.hpp"

namespace weil {

struct RealizeOptions {
    bool ordinary = false;
    std::string method = "auto";  // auto | enumerate | exp | interval | largeq | chebyshev
    int chebyshevDegree = 54;
    Rat chebyshevEpsilon = make_rat(1, 10);
    int threads = 0;
};

enum class RealizeStatus { Found, NotFound, NonExistent };
const char* to_string(RealizeStatus s);

struct RealizeOutcome {
    RealizeStatus status = RealizeStatus::NotFound;
    std::optional<WitnessRecord> witness;
    std::vector<std::string> attempts;  // one line per method tried, in order
    // NonExistent only: every dimension whose Weil range [(sqrt q - 1)^{2n}, (sqrt q + 1)^{2n}]
    // contains m was enumerated exhaustively.
    std::string completeness;
};

// Enumeration is used for dimensions small enough to exhaust (n = 1; n = 2 with q <= 5000;
// n = 3 with q <= 64; n = 4 with q <= 9). Throws std::invalid_argument for q not a prime power,
// m < 1 or an unknown method.
RealizeOutcome realize(const Int& q, const Int& m, const RealizeOptions& opt = {});

}  // namespace weil

#endif
