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

#include "spinphoton/qcore/density_operator.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/errors.hpp"

namespace spinphoton::qcore {

bool DensityCheck::ok(const DensityTolerances& tol) const {
  return trace_error <= tol.trace && hermiticity_error <= tol.hermiticity &&
         min_eigenvalue >= tol.min_eigenvalue;
}

std::string DensityCheck::describe() const {
  std::ostringstream os;
  os << "trace error " << trace_error << ", hermiticity error " << hermiticity_error
     << ", min eigenvalue " << min_eigenvalue;
  return os.str();
}

DensityCheck check_density(const ComplexMatrix& rho) {
  if (rho.rows() != rho.cols() || rho.rows() == 0) {
    throw std::invalid_argument("density operator must be a non-empty square matrix");
  }
  DensityCheck c;
  c.trace_error = std::abs(rho.trace() - Complex(1.0, 0.0));
  c.hermiticity_error = hermiticity_error(rho);
  const ComplexMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues().minCoeff();
  return c;
}

DensityOperator::DensityOperator(ComplexMatrix matrix, std::vector<SubsystemLabel> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  const DensityCheck c = check_density(matrix_);
  if (!c.ok()) throw InvariantError("density operator invariant violated: " + c.describe());
  if (!labels_.empty()) {
    Index prod = 1;
    for (const auto& l : labels_) prod *= l.dim;
    if (prod != matrix_.rows()) {
      throw std::invalid_argument("subsystem dimensions do not multiply to the matrix dimension");
    }
  }
}

Complex DensityOperator::expectation(const ComplexMatrix& a) const {
  if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("expectation: dimension mismatch");
  return (a * matrix_).trace();
}

DensityOperator pure_state(const ComplexVector& psi, std::vector<SubsystemLabel> labels) {
  const double norm = psi.norm();
  if (norm == 0.0) throw std::invalid_argument("pure_state: zero vector");
  const ComplexVector u = psi / norm;
  return DensityOperator(u * u.adjoint(), std::move(labels));
}

}  // namespace spinphoton::qcore
