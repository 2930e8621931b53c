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

#include "lcopt/survey.h"

#include <stdexcept>

#include "lcopt/mapper.h"

using namespace lcopt;

SurveyResult lcopt::survey_small_graphs(std::size_t n_max) {
    if (n_max < 2 || n_max > CLASS_ENUMERATION_MAX_NODES) {
        throw std::invalid_argument(
            "survey_small_graphs supports 2 <= n_max <= " + std::to_string(CLASS_ENUMERATION_MAX_NODES) + ".");
    }
    SurveyResult out;
    MapperOptions fast{false};
    for (std::size_t n = 2; n <= n_max; n++) {
        ClassTable table = build_class_table(n);
        std::size_t base = out.rows.size();
        for (std::size_t cid = 0; cid < table.classes.size(); cid++) {
            const auto &c = table.classes[cid];
            SurveyRow row;
            row.class_id = base + cid;
            row.n = n;
            row.class_size = c.labeled_count;
            row.unlabeled_count = c.unlabeled_count;
            row.representative = c.representative;
            row.best.fill(SIZE_MAX);
            out.rows.push_back(row);
        }
        for (uint64_t code = 0; code < table.class_of_code.size(); code++) {
            uint16_t cid = table.class_of_code[code];
            if (cid == ClassTable::NONE) {
                continue;
            }
            CostReport r = cost_report(map_to_circuit(graph_from_adjacency_code(n, code), fast));
            SurveyRow &row = out.rows[base + cid];
            for (std::size_t k = 0; k < SURVEY_METRICS.size(); k++) {
                std::size_t v = metric_value(r, SURVEY_METRICS[k]);
                row.best[k] = std::min(row.best[k], v);
                row.max[k] = std::max(row.max[k], v);
            }
            out.graphs_processed++;
        }
    }
    return out;
}
