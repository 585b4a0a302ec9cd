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

#include <type_traits>
#include <vector>

namespace spinphoton::lindblad {

struct QuadratureNode {
  double offset = 0.0;  ///< electron Zeeman offset δ, rad/s
  double weight = 0.0;  ///< normalized, Σ weight = 1
};

/// Gauss–Hermite rule for δ ~ Normal(0, γ_e²), by the Golub–Welsch method.
///
/// `nodes` must be odd and ≥ 1; a single node is δ = 0. Nodes are ordered by
/// increasing offset and the weights are symmetric.
std::vector<QuadratureNode> overhauser_quadrature(double gamma_e, int nodes);

/// Largest delay (s) up to which the rule reproduces the bare-spin envelope
/// e^{−(γ_e τ)²/2} within `tol`. A finite rule revives beyond it.
/// Infinite for a single node or γ_e = 0.
double quadrature_horizon(double gamma_e, int nodes, double tol = 1e-3);

namespace detail {

template <class T>
T scaled(const T& v, double w) {
  if constexpr (std::is_same_v<T, std::vector<double>>) {
    T out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = w * v[i];
    return out;
  } else {
    return T(w * v);
  }
}

template <class T>
void add_scaled(T& acc, const T& v, double w) {
  if constexpr (std::is_same_v<T, std::vector<double>>) {
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] += w * v[i];
  } else {
    acc += w * v;
  }
}

}  // namespace detail

/// Weighted average of inner(δ) over the Overhauser distribution.
///
/// The result type of `inner` must support scaling by a double and addition
/// (scalars, Eigen objects) or be std::vector<double>. Nodes are combined in
/// a fixed order.
template <class F>
auto overhauser_average(F&& inner, double gamma_e, int nodes) {
  using T = std::decay_t<decltype(inner(0.0))>;
  const std::vector<QuadratureNode> q = overhauser_quadrature(gamma_e, nodes);
  T acc = detail::scaled<T>(inner(q[0].offset), q[0].weight);
  for (std::size_t k = 1; k < q.size(); ++k) detail::add_scaled<T>(acc, inner(q[k].offset), q[k].weight);
  return acc;
}

}  // namespace spinphoton::lindblad
