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

#include "spinphoton/traces.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinphoton {

void require_increasing_grid(const std::vector<double>& tau, const char* what) {
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (!std::isfinite(tau[i])) throw std::invalid_argument(std::string(what) + ": non-finite delay");
    if (i > 0 && !(tau[i] > tau[i - 1])) {
      throw std::invalid_argument(std::string(what) + ": delay grid not strictly increasing");
    }
  }
}

void StokesTrace::push_back(double t, const StokesVector& s) {
  tau.push_back(t);
  s_HV.push_back(s.s_HV);
  s_DA.push_back(s.s_DA);
  s_RL.push_back(s.s_RL);
}

void StokesTrace::validate() const {
  if (s_HV.size() != tau.size() || s_DA.size() != tau.size() || s_RL.size() != tau.size()) {
    throw std::invalid_argument("StokesTrace: component lengths differ");
  }
  require_increasing_grid(tau, "StokesTrace");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    for (double v : {s_HV[i], s_DA[i], s_RL[i]}) {
      if (!std::isfinite(v) || std::abs(v) > 1.0 + 1e-9) {
        throw std::invalid_argument("StokesTrace: component outside [-1, 1]");
      }
    }
  }
}

void BlochTrace::validate() const {
  if (sx.size() != tau.size() || sy.size() != tau.size() || sz.size() != tau.size()) {
    throw std::invalid_argument("BlochTrace: component lengths differ");
  }
  require_increasing_grid(tau, "BlochTrace");
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const double n2 = sx[i] * sx[i] + sy[i] * sy[i] + sz[i] * sz[i];
    if (!std::isfinite(n2) || n2 > 1.0 + 1e-9) throw std::invalid_argument("BlochTrace: Bloch vector outside the ball");
  }
}

}  // namespace spinphoton
