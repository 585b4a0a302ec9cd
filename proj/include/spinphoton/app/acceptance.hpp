// Copyright 2026 The spinphoton Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "spinphoton/app/config_file.hpp"

namespace spinphoton::app {

struct Criterion {
  int id = 0;
  std::string title;
};

struct CriterionResult {
  int id = 0;
  bool pass = false;
  std::string detail;  ///< measured values against the pinned tolerances
};

/// The nine acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the selected criteria (all when `only` is empty) for `cfg`. Errors
/// raised while evaluating a criterion mark it failed. Progress lines go to
/// `progress` when given.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* progress = nullptr,
                                            const std::vector<int>& only = {});

/// "PASS  3  coherence time: ..." style line.
std::string format_result(const CriterionResult& r);

}  // namespace spinphoton::app
