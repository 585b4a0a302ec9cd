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

#include "spinphoton/device/units.hpp"

namespace spinphoton::device {

/// Physical constants of the charged-dot micropillar. SI units, angular frequencies in rad/s.
///
/// Frequencies of the cavity and the dot are measured from the cavity centre
/// ω_c = (ω_H + ω_V)/2, which is taken as the origin.
struct DeviceParams {
  double kappa_H = units::ghz_to_angular(44.5);
  double kappa_V = units::ghz_to_angular(45.0);
  double eta_top_H = 0.65;
  double eta_top_V = 0.63;
  double delta_c = units::ghz_to_angular(36.4);    ///< ω_H − ω_V
  double delta_QD = units::ghz_to_angular(-51.2);  ///< ω_QD − ω_c
  double g = units::ghz_to_angular(3.1);
  double gamma_sp = units::ghz_to_angular(0.157);
  double gamma_star = units::ghz_to_angular(0.024);
  double g_e_perp = 0.48;
  double g_h_perp = 0.10;  ///< not given numerically for this device; configurable
  double B = 0.200;        ///< tesla
  double gamma_e = units::ghz_to_angular(0.120);
  double tau_esc = 4.1e-9;
  double P_charge = 0.96;
  double drive_photon_rate = 1.8e7;  ///< incident photons per second in V

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace spinphoton::device
