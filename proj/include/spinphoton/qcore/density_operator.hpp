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

#include <string>
#include <vector>

#include "spinphoton/qcore/matrix.hpp"

namespace spinphoton::qcore {

/// Tolerances of the DensityOperator invariants.
struct DensityTolerances {
  double trace = 1e-9;
  double hermiticity = 1e-10;
  double min_eigenvalue = -1e-8;
};

/// One tensor factor of the Hilbert space.
struct SubsystemLabel {
  std::string name;
  Index dim = 0;
};

/// Result of an invariant check. Never clips or renormalizes.
struct DensityCheck {
  double trace_error = 0.0;
  double hermiticity_error = 0.0;
  double min_eigenvalue = 0.0;

  [[nodiscard]] bool ok(const DensityTolerances& tol = {}) const;
  [[nodiscard]] std::string describe() const;
};

/// Evaluate the density-operator invariants of a square matrix.
DensityCheck check_density(const ComplexMatrix& rho);

/// Hermitian, unit-trace, positive-semidefinite operator on a labelled space.
///
/// Construction validates the invariants and throws InvariantError on
/// violation. The stored matrix is exactly the one given.
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix matrix, std::vector<SubsystemLabel> labels = {});

  [[nodiscard]] const ComplexMatrix& matrix() const { return matrix_; }
  [[nodiscard]] Index dim() const { return matrix_.rows(); }
  [[nodiscard]] const std::vector<SubsystemLabel>& labels() const { return labels_; }
  [[nodiscard]] DensityCheck check() const { return check_density(matrix_); }

  /// Tr[A ρ].
  [[nodiscard]] Complex expectation(const ComplexMatrix& a) const;

 private:
  ComplexMatrix matrix_;
  std::vector<SubsystemLabel> labels_;
};

/// Pure state |psi><psi| (psi is normalized first).
DensityOperator pure_state(const ComplexVector& psi, std::vector<SubsystemLabel> labels = {});

}  // namespace spinphoton::qcore
