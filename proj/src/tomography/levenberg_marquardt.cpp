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

#include "spinphoton/tomography/levenberg_marquardt.hpp"

#include <cmath>
#include <sstream>

#include "spinphoton/errors.hpp"

namespace spinphoton::tomography {

LmResult levenberg_marquardt(const ResidualFunction& f, Eigen::VectorXd p, const LmOptions& opt) {
  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  f(p, r, J);
  double cost = 0.5 * r.squaredNorm();
  if (!std::isfinite(cost)) throw ConvergenceError("least squares: non-finite initial cost");
  double lambda = opt.initial_lambda;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;
    Eigen::VectorXd diag = JtJ.diagonal().cwiseMax(1e-300);
    bool accepted = false;
    while (!accepted) {
      Eigen::MatrixXd A = JtJ;
      A.diagonal() += lambda * diag;
      const Eigen::VectorXd step = A.ldlt().solve(-g);
      const Eigen::VectorXd trial = p + step;
      Eigen::VectorXd r_trial;
      Eigen::MatrixXd J_trial;
      f(trial, r_trial, J_trial);
      const double trial_cost = 0.5 * r_trial.squaredNorm();
      if (std::isfinite(trial_cost) && trial_cost <= cost) {
        const double rel_change = cost > 0.0 ? (cost - trial_cost) / cost : 0.0;
        const bool small_step = step.norm() < opt.step_tol * (p.norm() + opt.step_tol);
        p = trial;
        r = std::move(r_trial);
        J = std::move(J_trial);
        cost = trial_cost;
        lambda = std::max(lambda / 3.0, 1e-15);
        accepted = true;
        if (small_step || rel_change < opt.cost_tol || cost == 0.0) {
          return {p, r, J, std::sqrt(2.0 * cost), it};
        }
      } else {
        lambda *= 4.0;
        if (lambda > 1e16) {
          // no descent direction left: the current point is stationary to machine precision
          return {p, r, J, std::sqrt(2.0 * cost), it};
        }
      }
    }
  }
  std::ostringstream os;
  os << "least squares did not converge within " << opt.max_iterations << " iterations";
  throw ConvergenceError(os.str());
}

Eigen::VectorXd standard_errors(const LmResult& res) {
  const auto n = res.residuals.size();
  const auto m = res.params.size();
  if (n <= m) return Eigen::VectorXd::Constant(m, INFINITY);
  const double sigma2 = res.residuals.squaredNorm() / static_cast<double>(n - m);
  const Eigen::MatrixXd JtJ = res.jacobian.transpose() * res.jacobian;
  const Eigen::MatrixXd cov = JtJ.completeOrthogonalDecomposition().pseudoInverse() * sigma2;
  return cov.diagonal().cwiseMax(0.0).cwiseSqrt();
}

}  // namespace spinphoton::tomography
