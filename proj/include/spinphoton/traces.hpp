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

#include <cstddef>
#include <vector>

namespace spinphoton {

/// Conditional Stokes vector of the second reflected photon.
struct StokesVector {
  double s_HV = 0.0;
  double s_DA = 0.0;
  double s_RL = 0.0;

  [[nodiscard]] double norm_squared() const { return s_HV * s_HV + s_DA * s_DA + s_RL * s_RL; }
};

/// (s_HV, s_DA, s_RL) sampled on a delay grid (seconds).
struct StokesTrace {
  std::vector<double> tau;
  std::vector<double> s_HV;
  std::vector<double> s_DA;
  std::vector<double> s_RL;

  [[nodiscard]] std::size_t size() const { return tau.size(); }
  void push_back(double t, const StokesVector& s);
  /// Equal lengths, strictly increasing finite grid, components in [−1, 1] (1e-9 slack).
  void validate() const;
};

/// Reduced-spin Pauli expectations (⟨σx⟩, ⟨σy⟩, ⟨σz⟩) on a delay grid (seconds).
struct BlochTrace {
  std::vector<double> tau;
  std::vector<double> sx;
  std::vector<double> sy;
  std::vector<double> sz;

  [[nodiscard]] std::size_t size() const { return tau.size(); }
  void validate() const;
};

/// Throws std::invalid_argument unless strictly increasing and finite.
void require_increasing_grid(const std::vector<double>& tau, const char* what);

}  // namespace spinphoton
