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

#include <span>
#include <vector>

#include "spinphoton/backaction/spin_state.hpp"
#include "spinphoton/device/params.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/traces.hpp"

namespace spinphoton::backaction {

using device::ReflectionSet;

enum class Envelope { gaussian, exponential };

/// exp(−(τ/T)²) or exp(−τ/T).
double envelope_value(Envelope env, double tau, double T);

/// Free spin evolution between detections.
struct SpinDynamicsParams {
  double omega_L = 0.0;  ///< rad/s
  double T1 = 0.0;       ///< s
  double T2_star = 0.0;  ///< s
  SpinState stationary = SpinState::from_elements(0.5, 0.5, 0.0);
  Envelope envelope = Envelope::gaussian;

  /// Positive times; stationary state diagonal.
  void validate() const;

  /// ω_L = g_e μ_B B/ħ, T1 = τ_esc, T2* = √2/γ_e.
  static SpinDynamicsParams from_device(const device::DeviceParams& params, double p_up, double p_down,
                                        Envelope envelope = Envelope::gaussian);
};

/// (cos(φ/2), sin(φ/2)).
device::PolarizationState measurement_state(double phi);

/// P_M(φ) = P↑|r↑↑|² sin²(φ/2) + P↓(|r↓↓|² sin²(φ/2) + |r↓↑|² cos²(φ/2)).
double detection_probability(double phi, double p_up, double p_down, const ReflectionSet& r);

/// Spin state after detecting an M(φ)-polarized reflected photon.
///
/// ρ↓↓ = P↓|r↓↓|² sin²(φ/2)/P_M, ρ↓↑ = P↓ r↓↓ r↓↑* sin φ/(2 P_M),
/// ρ↑↑ = 1 − ρ↓↓. Throws std::domain_error if P_M = 0.
SpinState conditional_spin_state(double phi, double p_up, double p_down, const ReflectionSet& r);

/// Populations relax to the stationary state with T1; ρ↓↑ is multiplied by
/// env(τ) e^{iω_L τ}.
SpinState evolve_spin(const SpinState& state, double tau, const SpinDynamicsParams& dyn);

struct ConditionalProbabilities {
  double P_H = 0.0;
  double P_V = 0.0;
  double P_refl = 0.0;
};

/// P_H|M = |r↓↑|² ρ↓↓, P_V|M = |r↓↓|² ρ↓↓ + |r↑↑|² ρ↑↑, P_refl = P_H + P_V.
ConditionalProbabilities conditional_probabilities(const SpinState& state, const ReflectionSet& r);

/// Polarization of the next reflected photon. Throws std::domain_error if P_refl = 0.
StokesVector conditional_stokes(const SpinState& state, const ReflectionSet& r);

struct CoherencePoint {
  double phi = 0.0;
  double C_B = 0.0;
  double C_S = 0.0;
};

/// C_B and C_S = √(s_DA² + s_RL²) after conditioning on M(φ) and evolving for `at_tau`.
std::vector<CoherencePoint> coherence_sweep(std::span<const double> phi_grid, double p_up, double p_down,
                                            const ReflectionSet& r, double at_tau, const SpinDynamicsParams& dyn);

/// Conditional Stokes trace following a detection in M(φ).
StokesTrace stokes_trace(double phi, double p_up, double p_down, const ReflectionSet& r,
                         const SpinDynamicsParams& dyn, std::span<const double> tau_grid);

/// Conditional Bloch trace following a detection in M(φ).
BlochTrace bloch_trace(double phi, double p_up, double p_down, const ReflectionSet& r,
                       const SpinDynamicsParams& dyn, std::span<const double> tau_grid);

}  // namespace spinphoton::backaction
