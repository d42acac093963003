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

#ifndef WEIL_ERRORS_HPP
#define WEIL_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <utility>

namespace weil {

// A construction ran but could not certify its output; stage names the failing step.
class ConstructionFailed : public std::runtime_error {
   public:
    ConstructionFailed(std::string stage, const std::string& what)
        : std::runtime_error(stage + ": " + what), stage_(std::move(stage)) {}
    const std::string& stage() const { return stage_; }

   private:
    std::string stage_;
};

}  // namespace weil

#endif
