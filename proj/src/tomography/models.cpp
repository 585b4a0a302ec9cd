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

#include "spinphoton/tomography/models.hpp"

#include <cmath>

namespace spinphoton::tomography {

double OscillationModifiers::multiplier(double tau) const {
  if (!(T1 > 0.0)) return 1.0;
  const double x = std::exp(-tau / T1);
  double m = 1.0 / (1.0 + norm_gamma * x);
  if (t1_coherence_decay) m *= std::exp(-tau / (2.0 * T1));
  return m;
}

double oscillation_value(const OscillationParams& p, Envelope env, const OscillationModifiers& mod, double tau) {
  return p.amplitude * backaction::envelope_value(env, tau, p.decay_time) * mod.multiplier(tau) *
             std::cos(p.omega * tau + p.phase) +
         p.offset;
}

double relaxation_value(const RelaxationParams& p, double tau) {
  const double x = std::exp(-tau / p.T1);
  return (p.offset + p.amplitude * x) / (1.0 + p.norm_gamma * x);
}

OscillationGradient oscillation_gradient(const OscillationParams& p, Envelope env, const OscillationModifiers& mod,
                                         double tau) {
  const double T = p.decay_time;
  const double e = backaction::envelope_value(env, tau, T);
  const double de = env == Envelope::gaussian ? e * 2.0 * tau * tau / (T * T * T) : e * tau / (T * T);
  const double m = mod.multiplier(tau);
  const double c = std::cos(p.omega * tau + p.phase);
  const double s = std::sin(p.omega * tau + p.phase);
  return {e * m * c, -p.amplitude * e * m * tau * s, p.amplitude * de * m * c, -p.amplitude * e * m * s, 1.0};
}

RelaxationGradient relaxation_gradient(const RelaxationParams& p, double tau) {
  const double x = std::exp(-tau / p.T1);
  const double d = 1.0 + p.norm_gamma * x;
  return {1.0 / d, x / d, (p.amplitude - p.norm_gamma * p.offset) / (d * d) * x * tau / (p.T1 * p.T1),
          -(p.offset + p.amplitude * x) * x / (d * d)};
}

}  // namespace spinphoton::tomography
