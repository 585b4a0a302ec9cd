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

#include "spinphoton/qcore/density_operator.hpp"
#include "spinphoton/qcore/matrix.hpp"

namespace spinphoton::qcore {

/// Collapse operator c with its rate γ, entering as γ(cρc† − ½{c†c, ρ}).
struct JumpOperator {
  ComplexMatrix op;
  double rate = 0.0;
};

/// Generator of Lindblad dynamics acting on column-stacked density operators.
///
/// Tolerances are relative to rate_scale(), the largest entry magnitude, so
/// that SI angular-frequency units (~1e11 s⁻¹) and dimensionless test models
/// are treated alike.
class Liouvillian {
 public:
  /// Wraps an N²×N² superoperator; throws InvariantError if trace is not preserved.
  Liouvillian(ComplexMatrix superop, Index hilbert_dim);

  [[nodiscard]] const ComplexMatrix& matrix() const { return matrix_; }
  [[nodiscard]] Index hilbert_dim() const { return hilbert_dim_; }
  [[nodiscard]] double rate_scale() const { return rate_scale_; }

  /// L applied to an operator.
  [[nodiscard]] ComplexMatrix apply(const ComplexMatrix& rho) const;

  /// max |vec(I)ᵀ L| / rate_scale.
  [[nodiscard]] double trace_preservation_error() const;

  /// Largest real part over the spectrum (dense eigen-decomposition).
  [[nodiscard]] double max_real_eigenvalue() const;

  /// ‖L ρ‖_max / rate_scale.
  [[nodiscard]] double stationarity_residual(const ComplexMatrix& rho) const;

  static constexpr double kTraceTolerance = 1e-9;
  static constexpr double kSpectrumTolerance = 1e-8;

 private:
  ComplexMatrix matrix_;
  Index hilbert_dim_;
  double rate_scale_;
};

/// L ρ = −i[H, ρ] + Σ γ (c ρ c† − ½{c†c, ρ}).
///
/// Throws std::invalid_argument on dimension mismatch, negative rate or a
/// non-Hermitian H (1e-12 relative).
Liouvillian build_lindblad(const ComplexMatrix& hamiltonian, const std::vector<JumpOperator>& jumps);

/// Unique stationary state of L.
///
/// One equation of Lρ = 0 is replaced by Tr ρ = 1. A singular system means
/// the null space is degenerate and raises NumericalError. The residual
/// ‖Lρ‖ must be below 1e-9 relative to rate_scale.
DensityOperator steady_state(const Liouvillian& L, std::vector<SubsystemLabel> labels = {});

}  // namespace spinphoton::qcore
