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

#include "spinphoton/lindblad/overhauser.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

namespace spinphoton::lindblad {

std::vector<QuadratureNode> overhauser_quadrature(double gamma_e, int nodes) {
  if (nodes < 1 || nodes % 2 == 0) throw std::invalid_argument("overhauser_quadrature: nodes must be odd and >= 1");
  if (!(gamma_e >= 0.0)) throw std::invalid_argument("overhauser_quadrature: gamma_e must be >= 0");
  if (nodes == 1) return {{0.0, 1.0}};
  // Jacobi matrix of the probabilists' Hermite polynomials: b_k = √k
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(nodes, nodes);
  for (int k = 1; k < nodes; ++k) {
    J(k, k - 1) = std::sqrt(static_cast<double>(k));
    J(k - 1, k) = J(k, k - 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  std::vector<QuadratureNode> q(static_cast<std::size_t>(nodes));
  double total = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double v0 = es.eigenvectors()(0, k);
    q[static_cast<std::size_t>(k)] = {gamma_e * es.eigenvalues()(k), v0 * v0};
    total += v0 * v0;
  }
  // symmetrize: exact zero at the centre and mirror-equal weights
  const int m = nodes / 2;
  q[static_cast<std::size_t>(m)].offset = 0.0;
  for (int k = 0; k < m; ++k) {
    auto& lo = q[static_cast<std::size_t>(k)];
    auto& hi = q[static_cast<std::size_t>(nodes - 1 - k)];
    const double off = 0.5 * (hi.offset - lo.offset);
    const double w = 0.5 * (hi.weight + lo.weight);
    lo = {-off, w};
    hi = {off, w};
  }
  for (auto& n : q) n.weight /= total;
  return q;
}

double quadrature_horizon(double gamma_e, int nodes, double tol) {
  const std::vector<QuadratureNode> q = overhauser_quadrature(gamma_e, nodes);
  if (nodes == 1 || gamma_e == 0.0) return std::numeric_limits<double>::infinity();
  const double step = 1e-3 / gamma_e;
  for (double t = step;; t += step) {
    double avg = 0.0;
    for (const QuadratureNode& n : q) avg += n.weight * std::cos(n.offset * t);
    const double x = gamma_e * t;
    if (std::abs(avg - std::exp(-0.5 * x * x)) > tol) return t - step;
  }
}

}  // namespace spinphoton::lindblad
