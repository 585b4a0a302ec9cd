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

#include <vector>

#include "spinphoton/device/polarization.hpp"
#include "spinphoton/lindblad/config.hpp"
#include "spinphoton/qcore/density_operator.hpp"
#include "spinphoton/qcore/liouvillian.hpp"

namespace spinphoton::lindblad {

using qcore::ComplexMatrix;
using qcore::Index;

/// Dot levels in the order used by QdCavitySpace.
enum Level : Index { kUp = 0, kDown = 1, kTrion1 = 2, kTrion2 = 3 };

/// Operators on dot(4) ⊗ H-mode(n+1) ⊗ V-mode(n+1).
class QdCavitySpace {
 public:
  explicit QdCavitySpace(int fock_cutoff);

  [[nodiscard]] Index fock_dim() const { return fock_dim_; }
  [[nodiscard]] Index dim() const { return 4 * fock_dim_ * fock_dim_; }
  [[nodiscard]] const ComplexMatrix& a_H() const { return a_H_; }
  [[nodiscard]] const ComplexMatrix& a_V() const { return a_V_; }
  /// |i⟩⟨j| on the dot, identity on the modes.
  [[nodiscard]] ComplexMatrix dot(Index i, Index j) const;
  [[nodiscard]] std::vector<qcore::SubsystemLabel> labels() const;

  /// Population of the highest Fock level of each mode.
  [[nodiscard]] double top_fock_population(const ComplexMatrix& rho) const;

  /// ⟨i|Tr_modes(x)|j⟩ for dot levels i, j.
  [[nodiscard]] qcore::Complex dot_element(const ComplexMatrix& x, Index i, Index j) const;

 private:
  Index fock_dim_;
  ComplexMatrix a_H_;
  ComplexMatrix a_V_;
};

/// Hamiltonian, collapse operators and drive of one Overhauser node at a given laser frequency.
struct SystemModel {
  QdCavitySpace space;
  ComplexMatrix hamiltonian;
  std::vector<qcore::JumpOperator> jumps;
  double omega_laser = 0.0;
  double input_amplitude = 0.0;  ///< β_in,V = √(photon rate)
};

SystemModel build_system_model(const SimulationConfig& cfg, double overhauser_offset, double omega_laser);

/// Liouvillian of the driven dot–cavity system in the frame of the configured laser.
qcore::Liouvillian build_system(const SimulationConfig& cfg, double overhauser_offset);

/// Steady state of one Overhauser node with output-field helpers.
///
/// Construction solves the steady state and throws CutoffError if a mode's
/// highest Fock level holds more than 1e-4 of the population.
class NodeModel {
 public:
  NodeModel(const SimulationConfig& cfg, double overhauser_offset, double omega_laser);
  NodeModel(const SimulationConfig& cfg, double overhauser_offset);

  [[nodiscard]] const QdCavitySpace& space() const { return model_.space; }
  [[nodiscard]] const qcore::Liouvillian& liouvillian() const { return liouvillian_; }
  [[nodiscard]] const qcore::DensityOperator& steady_state() const { return steady_; }
  [[nodiscard]] double input_amplitude() const { return model_.input_amplitude; }
  [[nodiscard]] double omega_laser() const { return model_.omega_laser; }
  [[nodiscard]] double overhauser_offset() const { return offset_; }

  /// Output field projected on `pol` (photon-flux amplitude units).
  [[nodiscard]] ComplexMatrix output_operator(const device::PolarizationState& pol) const;
  /// ⟨b†b⟩ in photons per second.
  [[nodiscard]] double intensity(const device::PolarizationState& pol) const;

 private:
  SystemModel model_;
  double offset_;
  device::DeviceParams params_;
  qcore::Liouvillian liouvillian_;
  qcore::DensityOperator steady_;
};

/// Ground-manifold spin block of an (unnormalized) operator, traced over the modes.
struct GroundBlock {
  Eigen::Matrix2cd block;    ///< index 0 = ↑
  double trion_weight = 0.0; ///< trace carried by the trion levels
};

GroundBlock ground_block(const QdCavitySpace& space, const ComplexMatrix& x);

}  // namespace spinphoton::lindblad
