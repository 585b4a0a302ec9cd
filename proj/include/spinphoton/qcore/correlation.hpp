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

#include "spinphoton/qcore/liouvillian.hpp"
#include "spinphoton/qcore/spectral.hpp"

namespace spinphoton::qcore {

/// Values on a strictly increasing delay grid (seconds).
class CorrelationTrace {
 public:
  CorrelationTrace() = default;
  /// Throws std::invalid_argument if sizes differ, the grid is not strictly
  /// increasing or a value is not finite.
  CorrelationTrace(std::vector<double> tau, std::vector<double> values);

  [[nodiscard]] const std::vector<double>& tau() const { return tau_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] std::size_t size() const { return tau_.size(); }

 private:
  std::vector<double> tau_;
  std::vector<double> values_;
};

/// Quantum regression: G(τ) = Tr[ A e^{Lτ}(c ρ_ss c†) ].
///
/// Requires τ ≥ 0 and a stationary ρ_ss (residual ≤ 1e-9 relative). When A is
/// Hermitian the imaginary part must vanish to 1e-9 of max|G|.
CorrelationTrace two_time_correlation(const Liouvillian& L, const DensityOperator& rho_ss,
                                      const ComplexMatrix& collapse, const ComplexMatrix& observable,
                                      std::span<const double> tau_grid);

/// Same, reusing a precomputed spectral decomposition of L.
CorrelationTrace two_time_correlation(const Liouvillian& L, const SpectralPropagator& spectral,
                                      const DensityOperator& rho_ss, const ComplexMatrix& collapse,
                                      const ComplexMatrix& observable, std::span<const double> tau_grid);

}  // namespace spinphoton::qcore
