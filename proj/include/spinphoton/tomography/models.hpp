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

#include <span>

#include <Eigen/Dense>

#include "spinphoton/backaction/backaction.hpp"

namespace spinphoton::tomography {

using backaction::Envelope;

/// Known multiplicative factor applied to an oscillation:
/// [e^{−τ/(2T1)} if t1_coherence_decay] / (1 + γ e^{−τ/T1}).
///
/// The denominator is the conditional-reflectivity normalization shared with
/// the rational relaxation model; γ = 0 disables it.
struct OscillationModifiers {
  double T1 = 0.0;  ///< s; ignored when ≤ 0
  double norm_gamma = 0.0;
  bool t1_coherence_decay = false;

  [[nodiscard]] double multiplier(double tau) const;
};

/// Damped oscillation A·env(τ)·m(τ)·cos(ωτ + θ) + c.
struct OscillationParams {
  double amplitude = 0.0;
  double omega = 0.0;       ///< rad/s
  double decay_time = 0.0;  ///< s
  double phase = 0.0;       ///< rad, in (−π, π]
  double offset = 0.0;
};

double oscillation_value(const OscillationParams& p, Envelope env, const OscillationModifiers& mod, double tau);

/// (c + B x)/(1 + γ x), x = e^{−τ/T1}; pure exponential when γ = 0.
struct RelaxationParams {
  double offset = 0.0;
  double amplitude = 0.0;
  double T1 = 0.0;  ///< s
  double norm_gamma = 0.0;
};

double relaxation_value(const RelaxationParams& p, double tau);

/// Partial derivatives of oscillation_value with respect to each parameter.
/// Unit-agnostic: τ, decay_time and modifiers.T1 only need a common time unit.
struct OscillationGradient {
  double amplitude = 0.0;
  double omega = 0.0;
  double decay_time = 0.0;
  double phase = 0.0;
  double offset = 0.0;
};
OscillationGradient oscillation_gradient(const OscillationParams& p, Envelope env, const OscillationModifiers& mod,
                                         double tau);

struct RelaxationGradient {
  double offset = 0.0;
  double amplitude = 0.0;
  double T1 = 0.0;
  double norm_gamma = 0.0;
};
RelaxationGradient relaxation_gradient(const RelaxationParams& p, double tau);

/// Samples of a model on a grid.
template <class F>
Eigen::VectorXd sample(F&& f, std::span<const double> tau) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(tau.size()));
  for (std::size_t i = 0; i < tau.size(); ++i) v(static_cast<Eigen::Index>(i)) = f(tau[i]);
  return v;
}

}  // namespace spinphoton::tomography
