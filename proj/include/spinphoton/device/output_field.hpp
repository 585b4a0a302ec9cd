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

#include "spinphoton/device/params.hpp"
#include "spinphoton/device/polarization.hpp"
#include "spinphoton/qcore/matrix.hpp"

namespace spinphoton::device {

/// conj(c_H) b_H + conj(c_V) b_V with b_X = β_X − √(η_X κ_X) a_X.
///
/// The drive is V-polarized so β_H = 0 and β_V = `input_amplitude`
/// (units √(photons/s)).
qcore::ComplexMatrix output_field_operator(const DeviceParams& params, const PolarizationState& pol,
                                           const qcore::ComplexMatrix& a_H, const qcore::ComplexMatrix& a_V,
                                           qcore::Complex input_amplitude);

/// Output field projected on the measurement polarization cos(φ/2)H + sin(φ/2)V.
qcore::ComplexMatrix output_field_operator(const DeviceParams& params, double phi, const qcore::ComplexMatrix& a_H,
                                           const qcore::ComplexMatrix& a_V, qcore::Complex input_amplitude);

}  // namespace spinphoton::device
