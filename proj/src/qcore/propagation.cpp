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

#include "spinphoton/qcore/propagation.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/errors.hpp"

namespace spinphoton::qcore {

namespace {

// Dormand–Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

ComplexVector integrate_adaptive(const ComplexMatrix& L, double scale, ComplexVector y, double tau,
                                 const AdaptiveOptions& opt) {
  // time is measured in units of 1/scale to keep step sizes O(1)
  const ComplexMatrix A = L / scale;
  const double T = tau * scale;
  const double atol = opt.abs_tol * std::max(y.cwiseAbs().maxCoeff(), 1e-300);
  double t = 0.0;
  double h = std::min(T, 0.05);
  ComplexVector k1 = A * y;
  long steps = 0;
  while (t < T) {
    if (++steps > opt.max_steps) throw ConvergenceError("adaptive propagation exceeded the step limit");
    h = std::min(h, T - t);
    const ComplexVector k2 = A * (y + h * a21 * k1);
    const ComplexVector k3 = A * (y + h * (a31 * k1 + a32 * k2));
    const ComplexVector k4 = A * (y + h * (a41 * k1 + a42 * k2 + a43 * k3));
    const ComplexVector k5 = A * (y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
    const ComplexVector k6 = A * (y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
    const ComplexVector y5 = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    const ComplexVector k7 = A * y5;
    const ComplexVector err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);
    double norm = 0.0;
    for (Index i = 0; i < y.size(); ++i) {
      const double sc = atol + opt.rel_tol * std::max(std::abs(y(i)), std::abs(y5(i)));
      norm = std::max(norm, std::abs(err(i)) / sc);
    }
    if (!std::isfinite(norm)) throw ConvergenceError("adaptive propagation produced a non-finite error estimate");
    if (norm <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;
    }
    const double factor = norm == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(norm, -0.2), 0.2, 5.0);
    h *= factor;
    if (h < 1e-14 * std::max(T, 1.0)) throw ConvergenceError("adaptive propagation step size underflow");
  }
  return y;
}

}  // namespace

ComplexMatrix propagate_operator(const Liouvillian& L, const ComplexMatrix& x, double tau, PropagationMethod method,
                                 const AdaptiveOptions& options) {
  const Index n = L.hilbert_dim();
  if (x.rows() != n || x.cols() != n) throw std::invalid_argument("propagate: dimension mismatch");
  if (!(tau >= 0.0) || !std::isfinite(tau)) throw std::invalid_argument("propagate: tau must be finite and >= 0");
  if (tau == 0.0) return x;
  if (method == PropagationMethod::automatic) {
    method = n <= 40 ? PropagationMethod::matrix_exponential : PropagationMethod::adaptive;
  }
  const ComplexVector v = vectorize(x);
  if (method == PropagationMethod::matrix_exponential) {
    const ComplexMatrix lt = L.matrix() * tau;
    const ComplexMatrix e = lt.exp();
    return unvectorize(e * v, n);
  }
  return unvectorize(integrate_adaptive(L.matrix(), L.rate_scale(), v, tau, options), n);
}

DensityOperator propagate(const Liouvillian& L, const DensityOperator& rho0, double tau, PropagationMethod method,
                          const AdaptiveOptions& options) {
  if (tau == 0.0) return rho0;
  return DensityOperator(propagate_operator(L, rho0.matrix(), tau, method, options), rho0.labels());
}

}  // namespace spinphoton::qcore
