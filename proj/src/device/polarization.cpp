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

#include "spinphoton/device/polarization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace spinphoton::device {

using qcore::Complex;

PolarizationState basis_state(Basis b) {
  const double s = std::numbers::sqrt2 / 2.0;
  switch (b) {
    case Basis::H: return {1.0, 0.0};
    case Basis::V: return {0.0, 1.0};
    case Basis::D: return {s, s};
    case Basis::A: return {s, -s};
    case Basis::R: return {s, Complex(0.0, s)};
    case Basis::L: return {s, Complex(0.0, -s)};
  }
  throw std::invalid_argument("unknown polarization basis");
}

PolarizationState measurement_polarization(double phi) { return {std::cos(phi / 2.0), std::sin(phi / 2.0)}; }

Basis partner(Basis b) {
  switch (b) {
    case Basis::H: return Basis::V;
    case Basis::V: return Basis::H;
    case Basis::D: return Basis::A;
    case Basis::A: return Basis::D;
    case Basis::R: return Basis::L;
    case Basis::L: return Basis::R;
  }
  throw std::invalid_argument("unknown polarization basis");
}

std::string_view basis_name(Basis b) {
  static constexpr std::string_view names[] = {"H", "V", "D", "A", "R", "L"};
  return names[static_cast<int>(b)];
}

Basis parse_basis(std::string_view name) {
  for (Basis b : kAllBases) {
    if (basis_name(b) == name) return b;
  }
  throw std::invalid_argument("unknown polarization basis '" + std::string(name) + "'");
}

}  // namespace spinphoton::device
