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

#ifndef LCOPT_STATISTICS_H
#define LCOPT_STATISTICS_H

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcopt/orbit.h"

namespace lcopt {

/// Raised when a statistic is undefined for the given data (e.g. zero variance).
struct StatisticsError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sample Pearson correlation coefficient.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Per-record feature: "edges" or any cost metric name (needs a cost report).
double record_feature(const OrbitRecord &r, std::string_view name);

struct CorrelationRow {
    double x = 0;
    double mean_y = 0;
    /// Sample standard deviation; 0 for singleton groups.
    double std_y = 0;
    std::size_t count = 0;
};

struct CorrelationSeries {
    std::string x_name;
    std::string y_name;
    /// Sorted by x.
    std::vector<CorrelationRow> rows;
    /// Pearson over (x, mean_y) of the groups; empty when undefined.
    std::optional<double> pearson_of_means;
};

CorrelationSeries correlation_series(
    std::span<const OrbitRecord> records, std::string_view x_name, std::string_view y_name);

}  // namespace lcopt

#endif
