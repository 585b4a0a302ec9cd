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

#include "spinphoton/device/params.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/qcore/matrix.hpp"

namespace spinphoton::device {

/// Spin-resolved reflection amplitudes: r↑↑, r↓↓ (spin and polarization preserving) and r↓↑ (Raman).
struct ReflectionSet {
  qcore::Complex r_uu;
  qcore::Complex r_dd;
  qcore::Complex r_du;

  /// Throws std::invalid_argument if an amplitude exceeds unit modulus.
  void validate() const;

  /// Amplitudes with real, non-negative values from the given reflectivities.
  static ReflectionSet real_positive(double R_uu, double R_dd, double R_du);
};

/// ω_H = +Δc/2 or ω_V = −Δc/2.
double cavity_frequency(const DeviceParams& params, CavityMode mode);

/// r(ω) = 1 − η κ / (i(ω_mode − ω) + κ/2).
qcore::Complex empty_cavity_reflection(const DeviceParams& params, CavityMode mode, double omega_laser);

/// V-mode reflection with transition 1 as a single linear dipole; γ_tot = γ_sp + 2γ*.
qcore::Complex coupled_reflection_estimate(const DeviceParams& params, double omega_laser);

}  // namespace spinphoton::device
