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

#include "spinphoton/qcore/spectral.hpp"

#include <lapacke.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/errors.hpp"

namespace spinphoton::qcore {

namespace {

lapack_complex_double* as_lapack(Complex* p) { return reinterpret_cast<lapack_complex_double*>(p); }

// zgeev on a copy of `a`; fills eigenvalues and, if requested, right eigenvectors.
void zgeev(const ComplexMatrix& a, ComplexVector& w, ComplexMatrix* vr) {
  const Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("eigen-decomposition of a non-square matrix");
  ComplexMatrix work = a;
  w.resize(n);
  if (vr) vr->resize(n, n);
  const lapack_int info =
      LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', vr ? 'V' : 'N', static_cast<lapack_int>(n), as_lapack(work.data()),
                    static_cast<lapack_int>(n), as_lapack(w.data()), nullptr, static_cast<lapack_int>(n),
                    vr ? as_lapack(vr->data()) : nullptr, static_cast<lapack_int>(n));
  if (info != 0) {
    std::ostringstream os;
    os << "zgeev failed with info = " << info;
    throw NumericalError(os.str());
  }
}

}  // namespace

ComplexVector general_eigenvalues(const ComplexMatrix& a) {
  ComplexVector w;
  zgeev(a, w, nullptr);
  return w;
}

SpectralPropagator::SpectralPropagator(const Liouvillian& L) : n_(L.hilbert_dim()) {
  zgeev(L.matrix(), eigenvalues_, &vectors_);
  lu_.compute(vectors_);
  const double rcond = lu_.rcond();
  condition_ = rcond > 0.0 ? 1.0 / rcond : INFINITY;
  if (!(condition_ < 1e10)) {
    std::ostringstream os;
    os << "spectral propagator: eigenvector matrix condition estimate " << condition_ << " exceeds 1e10";
    throw NumericalError(os.str());
  }
  const double worst = eigenvalues_.real().maxCoeff() / L.rate_scale();
  if (worst > Liouvillian::kSpectrumTolerance) {
    std::ostringstream os;
    os << "Liouvillian has an eigenvalue with positive real part (relative " << worst << ")";
    throw InvariantError(os.str());
  }
}

ComplexVector SpectralPropagator::modal_coefficients(const ComplexMatrix& x) const {
  if (x.rows() != n_ || x.cols() != n_) throw std::invalid_argument("modal_coefficients: dimension mismatch");
  return lu_.solve(vectorize(x));
}

ComplexVector SpectralPropagator::observable_weights(const ComplexMatrix& a) const {
  if (a.rows() != n_ || a.cols() != n_) throw std::invalid_argument("observable_weights: dimension mismatch");
  // Tr[A X] = vec(Aᵀ)ᵀ vec(X)
  const ComplexMatrix at = a.transpose();
  return vectors_.transpose() * vectorize(at);
}

Complex SpectralPropagator::expectation(const ComplexVector& weights, const ComplexVector& coefficients,
                                        double tau) const {
  Complex sum = 0.0;
  for (Index k = 0; k < eigenvalues_.size(); ++k) {
    sum += weights(k) * coefficients(k) * std::exp(eigenvalues_(k) * tau);
  }
  return sum;
}

ComplexMatrix SpectralPropagator::evolve(const ComplexVector& coefficients, double tau) const {
  ComplexVector scaled(coefficients.size());
  for (Index k = 0; k < eigenvalues_.size(); ++k) scaled(k) = coefficients(k) * std::exp(eigenvalues_(k) * tau);
  return unvectorize(vectors_ * scaled, n_);
}

Index SpectralPropagator::stationary_mode() const {
  Index best = 0;
  eigenvalues_.cwiseAbs().minCoeff(&best);
  return best;
}

}  // namespace spinphoton::qcore
