// Copyright 2026 The lcopt Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCOPT_REPEATER_H
#define LCOPT_REPEATER_H

#include <cstddef>

namespace lcopt {

/// All-photonic repeater chain built from RGS stations.
struct RepeaterModel {
    /// Photons per RGS.
    double n = 4;
    /// Number of stations.
    std::size_t stations = 1;
    /// Bell measurement success probability per link.
    double p_bell = 1;
};

/// End-to-end success probability (1 - (1 - P_b)^(n/4))^N.
double success_probability(const RepeaterModel &rm);

/// P_b from fiber loss: bsm_success * 10^(-loss * 2 * half_link / 10).
double link_probability(double loss_db_per_km, double half_link_km, double bsm_success);

}  // namespace lcopt

#endif
