// Copyright 2026 The zetalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETALAB_VERIFY_HPP
#define ZETALAB_VERIFY_HPP

#include "zetalab/ball.hpp"

#include <string>
#include <vector>

namespace zetalab {

enum class CheckOutcome { Pass, Fail, Indeterminate };

struct CriterionResult {
    int id = 0;
    std::string name;
    CheckOutcome outcome = CheckOutcome::Fail;
    std::string detail;
    double seconds = 0.0;
    double time_limit = 0.0;
};

// Ids of the acceptance criteria, 1-based.
std::vector<int> criterion_ids();

// Runs one criterion. Runtime limits are part of the pass condition.
CriterionResult run_criterion(int id, const PrecisionContext& ctx);

// "all" or a comma-separated list of ids.
std::vector<CriterionResult> run_suite(const std::string& suite, const PrecisionContext& ctx);

std::string to_string(CheckOutcome o);

} // namespace zetalab

#endif // ZETALAB_VERIFY_HPP
