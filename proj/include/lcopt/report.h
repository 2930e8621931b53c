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

#ifndef LCOPT_REPORT_H
#define LCOPT_REPORT_H

#include <cstdint>
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "lcopt/fidelity.h"
#include "lcopt/optimizer.h"
#include "lcopt/statistics.h"
#include "lcopt/survey.h"

namespace lcopt {

/// "x,mean_y,std_y,count" rows.
void write_correlation_csv(std::ostream &out, const CorrelationSeries &s);

struct FidelityRow {
    std::size_t n = 0;
    std::string variant;
    double p_dep = 0;
    FidelityEstimate estimate;
};

/// "n,variant,p_dep,trials,fidelity,stderr,min_pair_fidelity,min_pair_stderr" rows.
void write_fidelity_csv(std::ostream &out, std::span<const FidelityRow> rows);

/// "class_id,n,class_size,best_<metric>...,max_<metric>..." rows.
void write_survey_csv(std::ostream &out, const SurveyResult &s);

/// Standalone SVG scatter plot.
std::string svg_scatter(std::span<const double> xs, std::span<const double> ys, const std::string &title,
                        const std::string &x_label, const std::string &y_label);

nlohmann::json orbit_record_to_json(const OrbitRecord &r);
nlohmann::json optimization_report_json(const Graph &input, const OptimizationResult &r);
nlohmann::json search_report_json(const Graph &input, const CostReport &original, const SearchResult &r);
nlohmann::json rgs_report_json(const RgsOptimization &r);

}  // namespace lcopt

#endif
