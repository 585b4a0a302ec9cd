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

#include "spinphoton/qcore/correlation.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinphoton/errors.hpp"
#include "spinphoton/qcore/propagation.hpp"

namespace spinphoton::qcore {

CorrelationTrace::CorrelationTrace(std::vector<double> tau, std::vector<double> values)
    : tau_(std::move(tau)), values_(std::move(values)) {
  if (tau_.size() != values_.size()) throw std::invalid_argument("CorrelationTrace: size mismatch");
  for (std::size_t i = 0; i < tau_.size(); ++i) {
    if (!std::isfinite(tau_[i]) || !std::isfinite(values_[i])) {
      throw std::invalid_argument("CorrelationTrace: non-finite entry");
    }
    if (i > 0 && !(tau_[i] > tau_[i - 1])) throw std::invalid_argument("CorrelationTrace: grid not strictly increasing");
  }
}

namespace {

void check_inputs(const Liouvillian& L, const DensityOperator& rho_ss, const ComplexMatrix& collapse,
                  const ComplexMatrix& observable, std::span<const double> tau_grid) {
  const Index n = L.hilbert_dim();
  if (rho_ss.dim() != n || collapse.rows() != n || collapse.cols() != n || observable.rows() != n ||
      observable.cols() != n) {
    throw std::invalid_argument("two_time_correlation: dimension mismatch");
  }
  for (double t : tau_grid) {
    if (!(t >= 0.0)) throw std::invalid_argument("two_time_correlation: delays must be >= 0");
  }
  const double residual = L.stationarity_residual(rho_ss.matrix());
  if (!(residual <= 1e-9)) {
    std::ostringstream os;
    os << "two_time_correlation: rho_ss is not stationary (residual " << residual << ")";
    throw std::invalid_argument(os.str());
  }
}

CorrelationTrace finish(std::span<const double> tau_grid, const std::vector<Complex>& g, bool hermitian) {
  double gmax = 0.0;
  for (const auto& v : g) gmax = std::max(gmax, std::abs(v));
  std::vector<double> values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (hermitian && std::abs(g[i].imag()) > 1e-9 * gmax + 1e-300) {
      throw NumericalError("two_time_correlation: imaginary part exceeds 1e-9 of the correlation scale");
    }
    values[i] = g[i].real();
  }
  return CorrelationTrace(std::vector<double>(tau_grid.begin(), tau_grid.end()), std::move(values));
}

}  // namespace

CorrelationTrace two_time_correlation(const Liouvillian& L, const SpectralPropagator& spectral,
                                      const DensityOperator& rho_ss, const ComplexMatrix& collapse,
                                      const ComplexMatrix& observable, std::span<const double> tau_grid) {
  check_inputs(L, rho_ss, collapse, observable, tau_grid);
  const ComplexMatrix x = collapse * rho_ss.matrix() * collapse.adjoint();
  const ComplexVector c = spectral.modal_coefficients(x);
  const ComplexVector w = spectral.observable_weights(observable);
  std::vector<Complex> g;
  g.reserve(tau_grid.size());
  for (double t : tau_grid) g.push_back(spectral.expectation(w, c, t));
  return finish(tau_grid, g, is_hermitian(observable));
}

CorrelationTrace two_time_correlation(const Liouvillian& L, const DensityOperator& rho_ss,
                                      const ComplexMatrix& collapse, const ComplexMatrix& observable,
                                      std::span<const double> tau_grid) {
  check_inputs(L, rho_ss, collapse, observable, tau_grid);
  try {
    const SpectralPropagator spectral(L);
    return two_time_correlation(L, spectral, rho_ss, collapse, observable, tau_grid);
  } catch (const InvariantError&) {
    throw;
  } catch (const NumericalError&) {
    // ill-conditioned eigenvectors: step through the grid instead
  }
  ComplexMatrix x = collapse * rho_ss.matrix() * collapse.adjoint();
  std::vector<Complex> g;
  g.reserve(tau_grid.size());
  double t_prev = 0.0;
  for (double t : tau_grid) {
    if (t < t_prev) {
      x = collapse * rho_ss.matrix() * collapse.adjoint();
      t_prev = 0.0;
    }
    x = propagate_operator(L, x, t - t_prev);
    t_prev = t;
    g.push_back((observable * x).trace());
  }
  return finish(tau_grid, g, is_hermitian(observable));
}

}  // namespace spinphoton::qcore
