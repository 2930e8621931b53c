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

#ifndef LCOPT_CIRCUIT_IO_H
#define LCOPT_CIRCUIT_IO_H

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lcopt/circuit.h"

namespace lcopt {

/// "Z_3 X_5" <-> terms. Empty string means no correction.
std::string correction_to_str(const std::vector<PauliTerm> &terms);
std::vector<PauliTerm> correction_from_str(std::string_view text);

nlohmann::json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &doc);

nlohmann::json cost_report_to_json(const CostReport &r);

}  // namespace lcopt

#endif
