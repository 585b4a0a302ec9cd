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

#include "spinphoton/qcore/liouvillian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/errors.hpp"
#include "spinphoton/qcore/spectral.hpp"

namespace spinphoton::qcore {

namespace {

// vec(I) as a row: ones at the diagonal positions i + n*i.
double trace_row_error(const ComplexMatrix& L, Index n) {
  Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(L.cols());
  for (Index i = 0; i < n; ++i) row += L.row(i + n * i);
  return row.cwiseAbs().maxCoeff();
}

}  // namespace

Liouvillian::Liouvillian(ComplexMatrix superop, Index hilbert_dim)
    : matrix_(std::move(superop)), hilbert_dim_(hilbert_dim) {
  if (hilbert_dim_ <= 0 || matrix_.rows() != hilbert_dim_ * hilbert_dim_ || matrix_.cols() != matrix_.rows()) {
    throw std::invalid_argument("Liouvillian: matrix must be N^2 x N^2");
  }
  rate_scale_ = matrix_.size() ? matrix_.cwiseAbs().maxCoeff() : 0.0;
  if (rate_scale_ == 0.0) rate_scale_ = 1.0;
  const double err = trace_preservation_error();
  if (!(err <= kTraceTolerance)) {
    std::ostringstream os;
    os << "Liouvillian is not trace preserving (relative error " << err << ")";
    throw InvariantError(os.str());
  }
}

ComplexMatrix Liouvillian::apply(const ComplexMatrix& rho) const {
  return unvectorize(matrix_ * vectorize(rho), hilbert_dim_);
}

double Liouvillian::trace_preservation_error() const {
  return trace_row_error(matrix_, hilbert_dim_) / rate_scale_;
}

double Liouvillian::max_real_eigenvalue() const {
  const ComplexVector ev = general_eigenvalues(matrix_);
  return ev.real().maxCoeff();
}

double Liouvillian::stationarity_residual(const ComplexMatrix& rho) const {
  return (matrix_ * vectorize(rho)).cwiseAbs().maxCoeff() / rate_scale_;
}

Liouvillian build_lindblad(const ComplexMatrix& hamiltonian, const std::vector<JumpOperator>& jumps) {
  const Index n = hamiltonian.rows();
  if (n == 0 || hamiltonian.cols() != n) throw std::invalid_argument("build_lindblad: H must be square");
  if (!is_hermitian(hamiltonian, 1e-12)) throw std::invalid_argument("build_lindblad: H is not Hermitian");
  const ComplexMatrix id = identity(n);
  ComplexMatrix L = -kI * (kron(id, hamiltonian) - kron(hamiltonian.transpose(), id));
  for (const auto& j : jumps) {
    if (j.op.rows() != n || j.op.cols() != n) throw std::invalid_argument("build_lindblad: jump dimension mismatch");
    if (!(j.rate >= 0.0) || !std::isfinite(j.rate)) throw std::invalid_argument("build_lindblad: negative rate");
    if (j.rate == 0.0) continue;
    const ComplexMatrix cdc = j.op.adjoint() * j.op;
    L += j.rate * (kron(j.op.conjugate(), j.op) - 0.5 * kron(id, cdc) - 0.5 * kron(cdc.transpose(), id));
  }
  return Liouvillian(std::move(L), n);
}

DensityOperator steady_state(const Liouvillian& L, std::vector<SubsystemLabel> labels) {
  const Index n = L.hilbert_dim();
  const Index n2 = n * n;
  ComplexMatrix a = L.matrix() / L.rate_scale();
  a.row(0).setZero();
  for (Index i = 0; i < n; ++i) a(0, i + n * i) = 1.0;
  ComplexVector b = ComplexVector::Zero(n2);
  b(0) = 1.0;
  Eigen::PartialPivLU<ComplexMatrix> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-13)) {
    std::ostringstream os;
    os << "steady_state: stationary state is not unique (reciprocal condition " << rcond << ")";
    throw NumericalError(os.str());
  }
  ComplexMatrix rho = unvectorize(lu.solve(b), n);
  rho = 0.5 * (rho + rho.adjoint());
  const double residual = L.stationarity_residual(rho);
  if (!(residual <= 1e-9)) {
    std::ostringstream os;
    os << "steady_state: residual " << residual << " exceeds 1e-9";
    throw NumericalError(os.str());
  }
  return DensityOperator(std::move(rho), std::move(labels));
}

}  // namespace spinphoton::qcore
