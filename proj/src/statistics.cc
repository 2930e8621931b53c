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

#include "lcopt/statistics.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "lcopt/optimizer.h"

using namespace lcopt;

double lcopt::pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("pearson: length mismatch.");
    }
    if (xs.size() < 2) {
        throw StatisticsError("pearson: need at least two points.");
    }
    double n = (double)xs.size();
    double mx = 0;
    double my = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0;
    double sxx = 0;
    double syy = 0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        double dx = xs[i] - mx;
        double dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) {
        throw StatisticsError("pearson: zero variance.");
    }
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

double lcopt::record_feature(const OrbitRecord &r, std::string_view name) {
    if (name == "edges") {
        return (double)r.graph.num_edges();
    }
    Metric m = metric_from_name(name);
    if (!r.cost.has_value()) {
        throw std::invalid_argument("Record has no cost report for metric '" + std::string(name) + "'.");
    }
    return (double)metric_value(*r.cost, m);
}

CorrelationSeries lcopt::correlation_series(
    std::span<const OrbitRecord> records, std::string_view x_name, std::string_view y_name) {
    if (records.empty()) {
        throw std::invalid_argument("correlation_series: no records.");
    }
    std::map<double, std::vector<double>> groups;
    for (const auto &r : records) {
        groups[record_feature(r, x_name)].push_back(record_feature(r, y_name));
    }
    CorrelationSeries out;
    out.x_name = x_name;
    out.y_name = y_name;
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto &[x, vals] : groups) {
        CorrelationRow row;
        row.x = x;
        row.count = vals.size();
        for (double v : vals) {
            row.mean_y += v;
        }
        row.mean_y /= (double)vals.size();
        if (vals.size() > 1) {
            double ss = 0;
            for (double v : vals) {
                ss += (v - row.mean_y) * (v - row.mean_y);
            }
            row.std_y = std::sqrt(ss / (double)(vals.size() - 1));
        }
        xs.push_back(x);
        ys.push_back(row.mean_y);
        out.rows.push_back(row);
    }
    try {
        out.pearson_of_means = pearson(xs, ys);
    } catch (const StatisticsError &) {
    }
    return out;
}
