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

#include "spinphoton/qcore/liouvillian.hpp"

namespace spinphoton::qcore {

/// Eigenvalues of a general complex square matrix (LAPACK zgeev).
ComplexVector general_eigenvalues(const ComplexMatrix& a);

/// Eigen-decomposition L = V Λ V⁻¹ for evaluating e^{Lτ} on many delays.
///
/// Immutable after construction. Throws NumericalError if the eigenvector
/// matrix is too ill-conditioned to be trusted (estimated condition > 1e10).
class SpectralPropagator {
 public:
  explicit SpectralPropagator(const Liouvillian& L);

  [[nodiscard]] const ComplexVector& eigenvalues() const { return eigenvalues_; }
  [[nodiscard]] double condition_estimate() const { return condition_; }
  [[nodiscard]] Index hilbert_dim() const { return n_; }

  /// Modal coefficients V⁻¹ vec(x).
  [[nodiscard]] ComplexVector modal_coefficients(const ComplexMatrix& x) const;

  /// Row weights w with Tr[A e^{Lτ}x] = Σ_k w_k c_k e^{λ_k τ}.
  [[nodiscard]] ComplexVector observable_weights(const ComplexMatrix& a) const;

  /// Σ_k w_k c_k e^{λ_k τ}.
  [[nodiscard]] Complex expectation(const ComplexVector& weights, const ComplexVector& coefficients,
                                    double tau) const;

  /// e^{Lτ}x reconstructed from its modal coefficients.
  [[nodiscard]] ComplexMatrix evolve(const ComplexVector& coefficients, double tau) const;

  /// Index of the eigenvalue closest to zero (the stationary mode).
  [[nodiscard]] Index stationary_mode() const;

 private:
  Index n_;
  ComplexVector eigenvalues_;
  ComplexMatrix vectors_;
  Eigen::PartialPivLU<ComplexMatrix> lu_;
  double condition_;
};

}  // namespace spinphoton::qcore
