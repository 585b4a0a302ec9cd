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

#include <complex>

#include <Eigen/Dense>

namespace spinphoton::qcore {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr Complex kI{0.0, 1.0};

/// Kronecker product a ⊗ b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of a list of factors, left to right.
ComplexMatrix kron(std::initializer_list<ComplexMatrix> factors);

/// Column-stacking vectorization: vec(A)[i + n*j] = A(i, j).
///
/// This is the only vectorization used in the library, so that
/// vec(A X B) = (Bᵀ ⊗ A) vec(X).
ComplexVector vectorize(const ComplexMatrix& a);

/// Inverse of vectorize for a square n×n matrix.
ComplexMatrix unvectorize(const ComplexVector& v, Index n);

/// max |A - A†| over all entries.
double hermiticity_error(const ComplexMatrix& a);

/// Hermitian within `rel_tol` relative to the largest entry magnitude.
bool is_hermitian(const ComplexMatrix& a, double rel_tol = 1e-12);

/// Bosonic annihilation operator truncated to `dim` Fock states.
ComplexMatrix annihilation(Index dim);

/// |i><j| on a space of dimension `dim`.
ComplexMatrix ket_bra(Index dim, Index i, Index j);

/// Identity of dimension `dim`.
ComplexMatrix identity(Index dim);

}  // namespace spinphoton::qcore
