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

#include <array>

#include "spinphoton/device/params.hpp"
#include "spinphoton/device/polarization.hpp"

namespace spinphoton::device {

/// Ground spins |↑⟩, |↓⟩ and trions |T1⟩, |T2⟩ of the dot in the transverse field.
///
/// Transitions: 1 = T1↔↓ (V), 2 = T1↔↑ (H), 3 = T2↔↓ (H), 4 = T2↔↑ (V).
/// Energies are angular frequencies measured from the cavity centre.
struct LevelStructure {
  double energy_up = 0.0;
  double energy_down = 0.0;
  double energy_trion_1 = 0.0;
  double energy_trion_2 = 0.0;
  double electron_zeeman = 0.0;  ///< E↑ − E↓
  double hole_zeeman = 0.0;      ///< E_T1 − E_T2
  std::array<double, 4> omega{};
  std::array<CavityMode, 4> polarization_of{CavityMode::V, CavityMode::H, CavityMode::H, CavityMode::V};

  [[nodiscard]] double omega_1() const { return omega[0]; }
  [[nodiscard]] double omega_2() const { return omega[1]; }
  [[nodiscard]] double omega_3() const { return omega[2]; }
  [[nodiscard]] double omega_4() const { return omega[3]; }

  /// h/(g_e μ_B B); infinite at zero field.
  [[nodiscard]] double larmor_period() const;
};

/// Level structure with an optional static offset added to the electron Zeeman splitting.
LevelStructure level_structure(const DeviceParams& params, double electron_offset = 0.0);

/// Bare electron Zeeman angular frequency g_e μ_B B/ħ.
double electron_zeeman(const DeviceParams& params);

}  // namespace spinphoton::device
