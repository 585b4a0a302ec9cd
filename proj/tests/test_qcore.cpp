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

#include <doctest.h>

#include <cmath>
#include <complex>

#include "spinphoton/errors.hpp"
#include "spinphoton/qcore/correlation.hpp"
#include "spinphoton/qcore/density_operator.hpp"
#include "spinphoton/qcore/liouvillian.hpp"
#include "spinphoton/qcore/matrix.hpp"
#include "spinphoton/qcore/propagation.hpp"
#include "spinphoton/qcore/spectral.hpp"

using namespace spinphoton;
using namespace spinphoton::qcore;

namespace {

// Driven two-level atom in the laser frame: H = Δ σ†σ + Ω/2 (σ + σ†), decay γ.
struct TwoLevel {
  double delta, omega, gamma;
  [[nodiscard]] Liouvillian liouvillian() const {
    const ComplexMatrix s = ket_bra(2, 0, 1);  // |g⟩⟨e|, g = 0
    const ComplexMatrix h = delta * s.adjoint() * s + 0.5 * omega * (s + s.adjoint());
    return build_lindblad(h, {{s, gamma}});
  }
  // excited population from the optical Bloch equations
  [[nodiscard]] double excited() const {
    return 0.25 * omega * omega / (delta * delta + 0.5 * omega * omega + 0.25 * gamma * gamma);
  }
};

ComplexMatrix taylor_exp(const ComplexMatrix& a) {
  // scaled Taylor series with repeated squaring, independent of the Padé code
  int s = 0;
  const double n = a.cwiseAbs().rowwise().sum().maxCoeff();
  while (n / std::pow(2.0, s) > 0.1) ++s;
  const ComplexMatrix b = a / std::pow(2.0, s);
  ComplexMatrix term = ComplexMatrix::Identity(a.rows(), a.cols());
  ComplexMatrix sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

TEST_CASE("kron and column-stacking vectorization") {
  const ComplexMatrix a = ComplexMatrix::Random(2, 2);
  const ComplexMatrix b = ComplexMatrix::Random(3, 3);
  const ComplexMatrix x = ComplexMatrix::Random(3, 2);
  // vec(B X Aᵀ) = (A ⊗ B) vec(X)
  const ComplexVector lhs = vectorize(b * x * a.transpose());
  const ComplexVector rhs = kron(a, b) * vectorize(x);
  CHECK((lhs - rhs).norm() < 1e-12);
  CHECK((unvectorize(vectorize(x.leftCols(2).topRows(2)), 2) - x.leftCols(2).topRows(2)).norm() == 0.0);
  CHECK(kron({a, b, a}).rows() == 12);
}

TEST_CASE("annihilation operator commutator on the truncated space") {
  const ComplexMatrix a = annihilation(4);
  const ComplexMatrix c = a * a.adjoint() - a.adjoint() * a;
  for (int i = 0; i < 3; ++i) CHECK(std::abs(c(i, i) - 1.0) < 1e-14);
  CHECK(std::abs(c(3, 3) + 3.0) < 1e-14);
}

TEST_CASE("density checks reject invalid states") {
  ComplexMatrix rho = ComplexMatrix::Zero(2, 2);
  rho(0, 0) = 0.6;
  rho(1, 1) = 0.4;
  CHECK_NOTHROW(DensityOperator{rho});
  ComplexMatrix bad = rho;
  bad(0, 0) = 0.7;
  CHECK_THROWS_AS(DensityOperator{bad}, InvariantError);
  bad = rho;
  bad(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityOperator{bad}, InvariantError);
  bad = rho;
  bad(0, 0) = 1.2;
  bad(1, 1) = -0.2;
  CHECK_FALSE(check_density(bad).ok());
}

TEST_CASE("steady state matches the optical Bloch solution") {
  for (const TwoLevel t : {TwoLevel{0.0, 1.0, 1.0}, TwoLevel{0.7, 0.3, 1.3}, TwoLevel{-2.0, 4.0, 0.5}}) {
    const Liouvillian L = t.liouvillian();
    CHECK(L.trace_preservation_error() < 1e-12);
    const DensityOperator rho = steady_state(L);
    CHECK(std::abs(rho.matrix()(1, 1).real() - t.excited()) < 1e-12);
    CHECK(L.stationarity_residual(rho.matrix()) < 1e-12);
    CHECK(L.max_real_eigenvalue() < 1e-10);
  }
}

TEST_CASE("build_lindblad rejects bad input") {
  CHECK_THROWS_AS(build_lindblad(ComplexMatrix::Zero(2, 3), {}), std::invalid_argument);
  CHECK_THROWS_AS(build_lindblad(ComplexMatrix::Zero(2, 2), {{ket_bra(2, 0, 1), -1.0}}), std::invalid_argument);
}

TEST_CASE("propagation agrees with a Taylor-series exponential") {
  const Liouvillian L = TwoLevel{0.4, 1.7, 0.9}.liouvillian();
  const DensityOperator rho0 = pure_state(ComplexVector::Unit(2, 0));
  const double t = 2.3;
  const ComplexMatrix ref = unvectorize(taylor_exp(L.matrix() * t) * vectorize(rho0.matrix()), 2);
  for (auto m : {PropagationMethod::matrix_exponential, PropagationMethod::adaptive}) {
    const DensityOperator r = propagate(L, rho0, t, m);
    CHECK((r.matrix() - ref).norm() < 1e-9);
  }
  const SpectralPropagator sp(L);
  CHECK((sp.evolve(sp.modal_coefficients(rho0.matrix()), t) - ref).norm() < 1e-10);
}

TEST_CASE("propagation is a semigroup") {
  const Liouvillian L = TwoLevel{-0.3, 2.0, 0.6}.liouvillian();
  const DensityOperator rho0 = pure_state(ComplexVector::Unit(2, 0));
  for (auto m : {PropagationMethod::matrix_exponential, PropagationMethod::adaptive}) {
    const DensityOperator a = propagate(L, rho0, 3.0, m);
    const DensityOperator b = propagate(L, propagate(L, rho0, 1.1, m), 1.9, m);
    CHECK((a.matrix() - b.matrix()).norm() < 1e-8);
  }
  CHECK_THROWS_AS(propagate(L, rho0, -1.0), std::invalid_argument);
}

TEST_CASE("incoherent jumps reproduce a classical rate matrix") {
  // four levels, jumps j→i at rate k(i, j); populations obey dp/dt = K p
  Eigen::Matrix4d k;
  k << 0, 0.3, 1.1, 0.0,  //
      0.5, 0, 0.2, 0.9,   //
      0.0, 0.4, 0, 0.6,   //
      0.7, 0.0, 0.1, 0;
  std::vector<JumpOperator> jumps;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (k(i, j) > 0.0) jumps.push_back({ket_bra(4, i, j), k(i, j)});
    }
  }
  const Liouvillian L = build_lindblad(ComplexMatrix::Zero(4, 4), jumps);
  Eigen::Matrix4d K = k;
  for (int j = 0; j < 4; ++j) K(j, j) = -k.col(j).sum();
  Eigen::Vector4d p0(0.1, 0.2, 0.3, 0.4);
  ComplexMatrix rho0 = ComplexMatrix::Zero(4, 4);
  for (int i = 0; i < 4; ++i) rho0(i, i) = p0(i);
  const double t = 1.7;
  const Eigen::Vector4d p = taylor_exp(K.cast<Complex>() * t).real() * p0;
  const DensityOperator r = propagate(L, DensityOperator(rho0), t);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(r.matrix()(i, i).real() - p(i)) < 1e-10);
  // stationary populations: null vector of K
  Eigen::FullPivLU<Eigen::Matrix4d> lu(K);
  Eigen::Vector4d ns = lu.kernel().col(0);
  ns /= ns.sum();
  const DensityOperator ss = steady_state(L);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ss.matrix()(i, i).real() - ns(i)) < 1e-10);
}

TEST_CASE("resonance fluorescence g2 follows the Mollow formula") {
  const double gamma = 1.0;
  const double omega = 3.0;
  const TwoLevel t{0.0, omega, gamma};
  const Liouvillian L = t.liouvillian();
  const DensityOperator rho = steady_state(L);
  const ComplexMatrix s = ket_bra(2, 0, 1);
  std::vector<double> tau;
  for (int i = 0; i <= 60; ++i) tau.push_back(0.1 * i);
  const CorrelationTrace g = two_time_correlation(L, rho, s, s.adjoint() * s, tau);
  const double n = t.excited();
  const double mu = std::sqrt(omega * omega - gamma * gamma / 16.0);
  for (std::size_t i = 0; i < tau.size(); ++i) {
    const double x = tau[i];
    const double ref = 1.0 - std::exp(-0.75 * gamma * x) * (std::cos(mu * x) + 0.75 * gamma / mu * std::sin(mu * x));
    CHECK(std::abs(g.values()[i] / (n * n) - ref) < 1e-9);
  }
  CHECK(std::abs(g.values()[0]) < 1e-12);
}

TEST_CASE("correlation preconditions") {
  const Liouvillian L = TwoLevel{0.0, 1.0, 1.0}.liouvillian();
  const DensityOperator rho = steady_state(L);
  const ComplexMatrix s = ket_bra(2, 0, 1);
  const std::vector<double> neg{-1.0, 0.0};
  CHECK_THROWS_AS(two_time_correlation(L, rho, s, s.adjoint() * s, neg), std::invalid_argument);
  const std::vector<double> ok{0.0, 1.0};
  CHECK_THROWS_AS(two_time_correlation(L, pure_state(ComplexVector::Unit(2, 1)), s, s.adjoint() * s, ok),
                  std::invalid_argument);
}

TEST_CASE("spectral propagator observable weights match direct traces") {
  const Liouvillian L = TwoLevel{0.5, 1.2, 0.8}.liouvillian();
  const SpectralPropagator sp(L);
  const ComplexMatrix x = pure_state(ComplexVector::Unit(2, 0)).matrix();
  const ComplexMatrix a = ket_bra(2, 1, 0) + 0.3 * ket_bra(2, 1, 1);
  const ComplexVector c = sp.modal_coefficients(x);
  const ComplexVector w = sp.observable_weights(a);
  for (double t : {0.0, 0.5, 3.0}) {
    const Complex direct = (a * sp.evolve(c, t)).trace();
    CHECK(std::abs(sp.expectation(w, c, t) - direct) < 1e-12);
  }
  CHECK(sp.stationary_mode() >= 0);
}
