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

#include <numbers>

namespace spinphoton::units {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// CODATA 2018
inline constexpr double kBohrMagneton = 9.2740100783e-24;  // J/T
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kHbar = kPlanck / kTwoPi;          // J s

/// Ordinary frequency in GHz to angular frequency in rad/s.
constexpr double ghz_to_angular(double f_ghz) { return kTwoPi * f_ghz * 1e9; }
/// Angular frequency in rad/s to ordinary frequency in GHz.
constexpr double angular_to_ghz(double w) { return w / (kTwoPi * 1e9); }

constexpr double ns_to_s(double t) { return t * 1e-9; }
constexpr double s_to_ns(double t) { return t * 1e9; }
constexpr double mt_to_tesla(double b) { return b * 1e-3; }
constexpr double deg_to_rad(double d) { return d * kPi / 180.0; }
constexpr double rad_to_deg(double r) { return r * 180.0 / kPi; }

}  // namespace spinphoton::units
