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

#include "lcopt/repeater.h"

#include <cmath>
#include <stdexcept>

using namespace lcopt;

double lcopt::success_probability(const RepeaterModel &rm) {
    if (!(rm.n >= 4) || rm.stations < 1 || !(rm.p_bell >= 0 && rm.p_bell <= 1)) {
        throw std::invalid_argument("Repeater model needs n >= 4, N >= 1 and 0 <= P_b <= 1.");
    }
    double arm_fail = std::pow(1 - rm.p_bell, rm.n / 4);
    return std::pow(1 - arm_fail, (double)rm.stations);
}

double lcopt::link_probability(double loss_db_per_km, double half_link_km, double bsm_success) {
    if (!(loss_db_per_km >= 0) || !(half_link_km >= 0) || !(bsm_success >= 0 && bsm_success <= 1)) {
        throw std::invalid_argument("link_probability needs nonnegative loss and distance and 0 <= bsm <= 1.");
    }
    return bsm_success * std::pow(10.0, -loss_db_per_km * 2 * half_link_km / 10);
}
