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

#include <string_view>

#include "spinphoton/qcore/matrix.hpp"

namespace spinphoton::device {

enum class CavityMode { H, V };

enum class Basis { H, V, D, A, R, L };

inline constexpr Basis kAllBases[] = {Basis::H, Basis::V, Basis::D, Basis::A, Basis::R, Basis::L};

/// Polarization c_H|H⟩ + c_V|V⟩.
struct PolarizationState {
  qcore::Complex c_H;
  qcore::Complex c_V;
};

/// D = (H+V)/√2, A = (H−V)/√2, R = (H+iV)/√2, L = (H−iV)/√2.
PolarizationState basis_state(Basis b);

/// cos(φ/2)|H⟩ + sin(φ/2)|V⟩.
PolarizationState measurement_polarization(double phi);

/// The orthogonal partner within a Stokes pair (H↔V, D↔A, R↔L).
Basis partner(Basis b);

std::string_view basis_name(Basis b);
Basis parse_basis(std::string_view name);

}  // namespace spinphoton::device
