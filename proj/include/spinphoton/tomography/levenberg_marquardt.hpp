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

#include <functional>

#include <Eigen/Dense>

namespace spinphoton::tomography {

/// Residuals r(p) and Jacobian ∂r/∂p of a least-squares problem.
using ResidualFunction = std::function<void(const Eigen::VectorXd& p, Eigen::VectorXd& r, Eigen::MatrixXd& J)>;

/// Damped Gauss–Newton settings.
///
/// Each iteration solves (JᵀJ + λ diag(JᵀJ)) δ = −Jᵀr. An accepted step
/// divides λ by 3, a rejected one multiplies it by 4. Convergence is declared
/// when an accepted step has ‖δ‖ < step_tol (‖p‖ + step_tol) or changes the
/// cost by less than cost_tol relative.
struct LmOptions {
  int max_iterations = 200;
  double step_tol = 1e-10;
  double cost_tol = 1e-12;
  double initial_lambda = 1e-3;
};

struct LmResult {
  Eigen::VectorXd params;
  Eigen::VectorXd residuals;
  Eigen::MatrixXd jacobian;
  double residual_norm = 0.0;
  int iterations = 0;
};

/// Minimizes ½‖r(p)‖². Throws ConvergenceError after max_iterations or on a non-finite cost.
LmResult levenberg_marquardt(const ResidualFunction& f, Eigen::VectorXd p0, const LmOptions& options = {});

/// One-sigma parameter errors from σ²(JᵀJ)⁻¹ with σ² = ‖r‖²/(N − p).
Eigen::VectorXd standard_errors(const LmResult& result);

}  // namespace spinphoton::tomography
