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

#include <cstdint>
#include <vector>

#include "spinphoton/device/params.hpp"

namespace spinphoton::lindblad {

/// Which steady state normalizes g²: the charge-blended one (default) or the charged dot alone.
enum class G2Normalization { charge_blended, charged_only };

/// Uniform delay grid in seconds.
struct TauGrid {
  double start = 0.0;
  double stop = 20e-9;
  int points = 401;

  [[nodiscard]] std::vector<double> values() const;
  void validate() const;
};

struct SimulationConfig {
  device::DeviceParams device;
  int fock_cutoff = 2;
  /// ω_laser − ω₁ at zero Overhauser field, rad/s. Places the laser on the
  /// blue side of the Lamb-shifted ω₁ line.
  double laser_detuning = units::ghz_to_angular(-0.21);
  int overhauser_nodes = 9;
  bool gamma_sp_per_transition = true;
  G2Normalization g2_normalization = G2Normalization::charge_blended;
  TauGrid tau_grid;
  std::uint64_t rng_seed = 0;

  /// fock_cutoff ≥ 1, odd node count ≥ 1, valid device and grid.
  void validate() const;

  /// Absolute laser angular frequency (cavity-centre origin).
  [[nodiscard]] double laser_frequency() const;
};

}  // namespace spinphoton::lindblad
