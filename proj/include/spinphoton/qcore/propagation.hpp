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

enum class PropagationMethod {
  automatic,           ///< matrix exponential for hilbert_dim ≤ 40, adaptive otherwise
  matrix_exponential,  ///< scaling-and-squaring Padé
  adaptive,            ///< embedded Runge–Kutta 5(4) with error control
};

struct AdaptiveOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  long max_steps = 2'000'000;
};

/// e^{Lτ} applied to an arbitrary (possibly unnormalized) operator.
ComplexMatrix propagate_operator(const Liouvillian& L, const ComplexMatrix& x, double tau,
                                 PropagationMethod method = PropagationMethod::automatic,
                                 const AdaptiveOptions& options = {});

/// e^{Lτ} ρ0, validated as a density operator. τ = 0 returns ρ0 unchanged.
DensityOperator propagate(const Liouvillian& L, const DensityOperator& rho0, double tau,
                          PropagationMethod method = PropagationMethod::automatic,
                          const AdaptiveOptions& options = {});

}  // namespace spinphoton::qcore
