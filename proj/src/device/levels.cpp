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

#include "spinphoton/device/levels.hpp"

#include <cmath>
#include <limits>

namespace spinphoton::device {

double electron_zeeman(const DeviceParams& p) { return p.g_e_perp * units::kBohrMagneton * p.B / units::kHbar; }

double LevelStructure::larmor_period() const {
  if (electron_zeeman == 0.0) return std::numeric_limits<double>::infinity();
  return units::kTwoPi / std::abs(electron_zeeman);
}

LevelStructure level_structure(const DeviceParams& p, double electron_offset) {
  LevelStructure s;
  s.electron_zeeman = electron_zeeman(p) + electron_offset;
  s.hole_zeeman = p.g_h_perp * units::kBohrMagneton * p.B / units::kHbar;
  s.energy_up = 0.5 * s.electron_zeeman;
  s.energy_down = -0.5 * s.electron_zeeman;
  s.energy_trion_1 = p.delta_QD + 0.5 * s.hole_zeeman;
  s.energy_trion_2 = p.delta_QD - 0.5 * s.hole_zeeman;
  s.omega = {s.energy_trion_1 - s.energy_down, s.energy_trion_1 - s.energy_up, s.energy_trion_2 - s.energy_down,
             s.energy_trion_2 - s.energy_up};
  return s;
}

}  // namespace spinphoton::device
