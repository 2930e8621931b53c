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

#ifndef LCOPT_SURVEY_H
#define LCOPT_SURVEY_H

#include <array>
#include <cstddef>
#include <vector>

#include "lcopt/classes.h"
#include "lcopt/optimizer.h"

namespace lcopt {

constexpr std::array<Metric, 5> SURVEY_METRICS = {
    Metric::NEmitters, Metric::EeCnots, Metric::EmitterDepth, Metric::UnitaryCount, Metric::Depth};

struct SurveyRow {
    std::size_t class_id = 0;
    std::size_t n = 0;
    /// Labeled connected graphs in the class.
    std::size_t class_size = 0;
    std::size_t unlabeled_count = 0;
    Graph representative{1};
    /// Indexed like SURVEY_METRICS. Each best is taken independently.
    std::array<std::size_t, 5> best{};
    std::array<std::size_t, 5> max{};
};

struct SurveyResult {
    std::vector<SurveyRow> rows;
    /// Labeled connected graphs mapped (each is one orbit member in one emission order).
    std::size_t graphs_processed = 0;
};

/// Maps every labeled connected graph with 2..n_max nodes in natural order and
/// aggregates per entanglement class. Since a class is closed under relabeling,
/// this covers every member in every emission order.
SurveyResult survey_small_graphs(std::size_t n_max);

}  // namespace lcopt

#endif
