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

#include "spinphoton/device/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spinphoton::device {

namespace {

void require(bool ok, const char* field, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("DeviceParams.") + field + ": " + what);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }
bool unit_interval(double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; }

}  // namespace

void DeviceParams::validate() const {
  require(positive(kappa_H), "kappa_H", "must be > 0");
  require(positive(kappa_V), "kappa_V", "must be > 0");
  require(unit_interval(eta_top_H), "eta_top_H", "must lie in [0, 1]");
  require(unit_interval(eta_top_V), "eta_top_V", "must lie in [0, 1]");
  require(std::isfinite(delta_c), "delta_c", "must be finite");
  require(std::isfinite(delta_QD), "delta_QD", "must be finite");
  require(std::isfinite(g) && g >= 0.0, "g", "must be >= 0");
  require(positive(gamma_sp), "gamma_sp", "must be > 0");
  require(std::isfinite(gamma_star) && gamma_star >= 0.0, "gamma_star", "must be >= 0");
  require(std::isfinite(g_e_perp), "g_e_perp", "must be finite");
  require(std::isfinite(g_h_perp), "g_h_perp", "must be finite");
  require(std::isfinite(B) && B >= 0.0, "B", "must be >= 0");
  require(std::isfinite(gamma_e) && gamma_e >= 0.0, "gamma_e", "must be >= 0");
  require(positive(tau_esc), "tau_esc", "must be > 0");
  require(unit_interval(P_charge), "P_charge", "must lie in [0, 1]");
  require(std::isfinite(drive_photon_rate) && drive_photon_rate >= 0.0, "drive_photon_rate", "must be >= 0");
}

}  // namespace spinphoton::device
