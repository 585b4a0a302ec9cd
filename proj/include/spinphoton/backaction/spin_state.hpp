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

#include <Eigen/Dense>

#include "spinphoton/qcore/density_operator.hpp"

namespace spinphoton::backaction {

using qcore::Complex;
using Matrix2c = Eigen::Matrix2cd;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  [[nodiscard]] double norm() const;
};

/// Spin density matrix in the {|↑⟩, |↓⟩} eigenbasis of the transverse field (index 0 = ↑).
///
/// Populations sit on the x axis: ⟨σx⟩ = ρ↑↑ − ρ↓↓, ⟨σy⟩ = 2 Re ρ↓↑,
/// ⟨σz⟩ = 2 Im ρ↓↑, so C_B = 2|ρ↓↑| = √(⟨σy⟩² + ⟨σz⟩²).
class SpinState {
 public:
  /// Validates the density-operator invariants; throws InvariantError.
  explicit SpinState(const Matrix2c& matrix);

  /// Hermitian completion of populations and ρ↓↑.
  static SpinState from_elements(double rho_uu, double rho_dd, Complex rho_du);

  [[nodiscard]] const Matrix2c& matrix() const { return matrix_; }
  [[nodiscard]] double rho_uu() const { return matrix_(0, 0).real(); }
  [[nodiscard]] double rho_dd() const { return matrix_(1, 1).real(); }
  /// ρ↓↑ = ⟨↓|ρ|↑⟩.
  [[nodiscard]] Complex rho_du() const { return matrix_(1, 0); }
  [[nodiscard]] Complex rho_ud() const { return matrix_(0, 1); }

  [[nodiscard]] BlochVector bloch() const;
  /// C_B = 2|ρ↓↑|.
  [[nodiscard]] double coherence() const;
  [[nodiscard]] qcore::DensityOperator as_density() const;

 private:
  Matrix2c matrix_;
};

}  // namespace spinphoton::backaction
