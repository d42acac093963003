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

#ifndef WEIL_ENUMERATE_HPP
#define WEIL_ENUMERATE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weil/cert.hpp"

namespace weil {

enum class EnumMode { Any, Ordinary, Squarefree, OrdinarySquarefree };

const char* to_string(EnumMode m);
EnumMode enum_mode_from_string(const std::string& s);

struct EnumTask {
    Int q;
    int n = 1;
    EnumMode mode = EnumMode::Any;
    std::vector<long> prefix;  // fixes c_1..c_k of G = x^n + c_1 x^{n-1} + ... + c_n
};

struct EnumRecord {
    WeilCandidate w;
    Certificate cert;
    std::vector<long> c;  // c_1..c_n
};

struct EnumStats {
    long nodes = 0;     // interior search nodes
    long leaves = 0;    // complete G tested exactly
    long emitted = 0;
    long unknown = 0;   // emitted with an Unknown (d') verdict
};

// Worker count: WEILFQ_THREADS if set and positive, else the hardware concurrency.
int thread_count();

// Streams every Weil candidate of the task. The visitor runs on the calling thread, in increasing
// lexicographic order of (c_1, ..., c_n); Failed verdicts are never emitted. Requires 1 <= n <= 6.
EnumStats enum_weil(const EnumTask& task, const std::function<void(const EnumRecord&)>& visit, int threads = 0);
std::vector<EnumRecord> enum_weil(const EnumTask& task, int threads = 0);

// Reference enumerator without interlacing pruning: full coefficient box |c_i| <= C(n,i) (2 sqrt q)^i
// and an exact Sturm test per point. Exponential; only for cross-checking small cases.
std::vector<std::vector<long>> enum_weil_bruteforce(const Int& q, int n);

struct RealizableSet {
    Int q;
    int nMax = 0;
    EnumMode mode = EnumMode::Any;
    std::map<Int, EnumRecord> orders;         // verified; witness = first in (n, c) order
    std::map<Int, EnumRecord> unknownOrders;  // reached only through Unknown verdicts
};

// maxOrder, when set, drops larger orders to bound memory.
RealizableSet realizable_orders(const Int& q, int nMax, EnumMode mode, std::optional<Int> maxOrder = {},
                                int threads = 0);

struct ExceptionReport {
    Int q, bound;
    EnumMode mode = EnumMode::Any;
    int nMax = 0;
    std::vector<Int> exceptions;  // no candidate of dimension <= nMax has this order
    std::vector<Int> undecided;   // realized only by Unknown verdicts
    // Every non-realized integer <= bound lies below (sqrt q - 1)^{2(nMax+1)}, so higher dimensions
    // cannot reach it: the list is then exact for all dimensions.
    bool complete = false;
    bool dimensionLimited = false;
    std::string note;
};

// nMax < 0 selects the smallest dimension cap that makes the answer complete, where one exists.
ExceptionReport exceptions(const Int& q, const Int& bound, EnumMode mode, int nMax = -1, int threads = 0);

// (order, c_1) for every emitted class of dimension 2, sorted.
std::vector<std::pair<Int, long>> figure_data(const Int& q, int threads = 0);

// Sign of (sqrt q - 1)^{2k} - x, exact.
int compare_weil_floor(const Int& q, int k, const Int& x);

}  // namespace weil

#endif
