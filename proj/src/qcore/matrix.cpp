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

#include "spinphoton/qcore/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinphoton::qcore {

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j) {
    for (Index i = 0; i < a.rows(); ++i) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors) {
  if (factors.size() == 0) throw std::invalid_argument("kron: empty factor list");
  auto it = factors.begin();
  ComplexMatrix out = *it;
  for (++it; it != factors.end(); ++it) out = kron(out, *it);
  return out;
}

ComplexVector vectorize(const ComplexMatrix& a) {
  return Eigen::Map<const ComplexVector>(a.data(), a.size());
}

ComplexMatrix unvectorize(const ComplexVector& v, Index n) {
  if (v.size() != n * n) throw std::invalid_argument("unvectorize: size is not n*n");
  return Eigen::Map<const ComplexMatrix>(v.data(), n, n);
}

double hermiticity_error(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermiticity_error: matrix not square");
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& a, double rel_tol) {
  if (a.rows() != a.cols()) return false;
  if (a.size() == 0) return true;
  const double scale = std::max(a.cwiseAbs().maxCoeff(), 1e-300);
  return hermiticity_error(a) <= rel_tol * scale;
}

ComplexMatrix annihilation(Index dim) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (Index n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

ComplexMatrix ket_bra(Index dim, Index i, Index j) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix identity(Index dim) { return ComplexMatrix::Identity(dim, dim); }

}  // namespace spinphoton::qcore
