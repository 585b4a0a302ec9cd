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

#include "spinphoton/lindblad/config.hpp"

#include <cmath>
#include <stdexcept>

#include "spinphoton/device/levels.hpp"

namespace spinphoton::lindblad {

std::vector<double> TauGrid::values() const {
  validate();
  std::vector<double> v(static_cast<std::size_t>(points));
  if (points == 1) {
    v[0] = start;
    return v;
  }
  const double step = (stop - start) / (points - 1);
  for (int i = 0; i < points; ++i) v[static_cast<std::size_t>(i)] = start + step * i;
  v.back() = stop;
  return v;
}

void TauGrid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(stop)) throw std::invalid_argument("tau grid: bounds must be finite");
  if (points < 1) throw std::invalid_argument("tau grid: at least one point required");
  if (points > 1 && !(stop > start)) throw std::invalid_argument("tau grid: stop must exceed start");
}

void SimulationConfig::validate() const {
  device.validate();
  if (fock_cutoff < 1) throw std::invalid_argument("simulation.fock_cutoff must be >= 1");
  if (overhauser_nodes < 1 || overhauser_nodes % 2 == 0) {
    throw std::invalid_argument("simulation.overhauser_nodes must be odd and >= 1");
  }
  if (!std::isfinite(laser_detuning)) throw std::invalid_argument("simulation.laser_detuning must be finite");
  tau_grid.validate();
}

double SimulationConfig::laser_frequency() const {
  return device::level_structure(device).omega_1() + laser_detuning;
}

}  // namespace spinphoton::lindblad
