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

#include "spinphoton/device/output_field.hpp"

#include <cmath>
#include <stdexcept>

namespace spinphoton::device {

using qcore::Complex;
using qcore::ComplexMatrix;

ComplexMatrix output_field_operator(const DeviceParams& p, const PolarizationState& pol, const ComplexMatrix& a_H,
                                    const ComplexMatrix& a_V, Complex input_amplitude) {
  if (a_H.rows() != a_H.cols() || a_V.rows() != a_H.rows() || a_V.cols() != a_H.cols()) {
    throw std::invalid_argument("output_field_operator: mode operators must be square and of equal dimension");
  }
  const ComplexMatrix id = ComplexMatrix::Identity(a_H.rows(), a_H.cols());
  const ComplexMatrix b_H = -std::sqrt(p.eta_top_H * p.kappa_H) * a_H;
  const ComplexMatrix b_V = input_amplitude * id - std::sqrt(p.eta_top_V * p.kappa_V) * a_V;
  return std::conj(pol.c_H) * b_H + std::conj(pol.c_V) * b_V;
}

ComplexMatrix output_field_operator(const DeviceParams& p, double phi, const ComplexMatrix& a_H,
                                    const ComplexMatrix& a_V, Complex input_amplitude) {
  return output_field_operator(p, measurement_polarization(phi), a_H, a_V, input_amplitude);
}

}  // namespace spinphoton::device
