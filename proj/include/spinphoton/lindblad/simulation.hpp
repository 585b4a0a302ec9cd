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

#include <memory>
#include <span>
#include <vector>

#include "spinphoton/backaction/spin_state.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/device/reflection.hpp"
#include "spinphoton/lindblad/config.hpp"
#include "spinphoton/lindblad/system.hpp"
#include "spinphoton/qcore/correlation.hpp"
#include "spinphoton/traces.hpp"

namespace spinphoton::lindblad {

/// State of the charged dot right after an M(φ)-polarized click, averaged over Overhauser nodes.
struct ClickConditionedState {
  qcore::DensityOperator joint;
  backaction::SpinState reduced_spin;  ///< ground-manifold block, renormalized
  double click_probability = 0.0;      ///< Tr[b†b ρ_ss]/|β_in|², charged dot
  double trion_population = 0.0;       ///< trion weight of `joint`
};

/// Spin-sector populations of the Overhauser-averaged charged steady state.
struct SteadySummary {
  double p_up = 0.0;    ///< ground-manifold, renormalized
  double p_down = 0.0;  ///< ground-manifold, renormalized
  double trion_population = 0.0;
};

/// Overhauser-node models with their spectral decompositions, for repeated
/// correlation and trace evaluations on one configuration.
///
/// Construction performs one dense eigen-decomposition per node, which
/// dominates the cost; every query afterwards is a const, pure evaluation.
class Simulation {
 public:
  explicit Simulation(SimulationConfig cfg);
  ~Simulation();
  Simulation(Simulation&&) noexcept;
  Simulation& operator=(Simulation&&) noexcept;

  [[nodiscard]] const SimulationConfig& config() const { return cfg_; }
  [[nodiscard]] std::size_t node_count() const;
  [[nodiscard]] SteadySummary steady_summary() const;

  [[nodiscard]] ClickConditionedState click(double phi) const;

  /// Node-averaged, normalized state a delay τ after an M(φ) click.
  [[nodiscard]] qcore::DensityOperator conditioned_state(double phi, double tau) const;

  /// g²_{second|first}(τ). Negative delays give g²_{first|second}(|τ|).
  [[nodiscard]] qcore::CorrelationTrace g2(const device::PolarizationState& first,
                                           const device::PolarizationState& second,
                                           std::span<const double> tau_grid) const;
  [[nodiscard]] qcore::CorrelationTrace g2(double phi_first, device::Basis second,
                                           std::span<const double> tau_grid) const;

  /// Conditional Stokes parameters from the three basis pairs (τ ≥ 0).
  [[nodiscard]] StokesTrace stokes(double phi, std::span<const double> tau_grid) const;

  /// Reduced-spin Pauli expectations along the conditioned evolution (τ ≥ 0).
  [[nodiscard]] BlochTrace bloch(double phi, std::span<const double> tau_grid) const;

  /// Longest decay time 1/|Re λ| over the non-stationary modes of all nodes.
  [[nodiscard]] double slowest_timescale() const;

  /// Largest steady-state population of a top Fock level over all nodes.
  [[nodiscard]] double max_top_fock_population() const;

 private:
  struct Node;
  struct PairCorrelation {
    std::vector<double> G;  // blended or charged, per the configured normalization
    double I_first = 0.0;
    double I_second = 0.0;
  };
  [[nodiscard]] PairCorrelation correlation(const device::PolarizationState& first,
                                            const device::PolarizationState& second,
                                            std::span<const double> tau_grid) const;
  [[nodiscard]] double empty_intensity(const device::PolarizationState& pol) const;

  SimulationConfig cfg_;
  std::vector<std::unique_ptr<Node>> nodes_;
};

/// Click conditioning from the steady states alone (no spectral decomposition).
ClickConditionedState click_condition(const SimulationConfig& cfg, double phi);

/// Overhauser-averaged steady-state populations of the charged dot.
SteadySummary steady_summary(const SimulationConfig& cfg);

qcore::CorrelationTrace g2_correlation(const SimulationConfig& cfg, double phi_first, device::Basis second,
                                       std::span<const double> tau_grid);
StokesTrace conditional_stokes_sim(const SimulationConfig& cfg, double phi, std::span<const double> tau_grid);
BlochTrace bloch_trace_sim(const SimulationConfig& cfg, double phi, std::span<const double> tau_grid);

/// Reflectivities versus laser detuning from the zero-field dot frequency ω_QD.
struct ReflectivityScan {
  std::vector<double> detuning;  ///< ω_laser − ω_QD, rad/s
  std::vector<double> P_VtoV;    ///< charge blended
  std::vector<double> P_VtoH;    ///< charge blended
  std::vector<double> P_cav;     ///< |r_cav,V|²
};

ReflectivityScan unconditional_reflectivities(const SimulationConfig& cfg, std::span<const double> detuning_grid);

/// Reflection amplitudes and populations inferred from the charged steady state at the configured laser.
struct ReflectionExtraction {
  device::ReflectionSet r;
  double p_up = 0.0;
  double p_down = 0.0;
  double P_VtoV = 0.0;  ///< charged dot
  double P_VtoH = 0.0;  ///< charged dot
};

ReflectionExtraction extract_reflection_data(const SimulationConfig& cfg);
device::ReflectionSet extract_reflection_set(const SimulationConfig& cfg);

/// 1/e decay time of the T1 trion through the driven transition (↓ ↔ T1 with
/// the V mode and γ_sp), from a decay simulation without drive.
double radiative_lifetime(const SimulationConfig& cfg);

}  // namespace spinphoton::lindblad
