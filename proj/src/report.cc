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

#include "lcopt/report.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "lcopt/circuit_io.h"
#include "lcopt/graph_io.h"

using namespace lcopt;

namespace {

std::string num(double v) {
    std::ostringstream ss;
    ss << std::setprecision(10) << v;
    return ss.str();
}

std::string xml_escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '&':
                out += "&amp;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

nlohmann::json order_json(const std::vector<Node> &order) {
    nlohmann::json a = nlohmann::json::array();
    for (Node v : order) {
        a.push_back(v);
    }
    return a;
}

nlohmann::json gates_json(const std::vector<CliffordGate> &gates) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto &g : gates) {
        a.push_back({{"gate", gate_name(g.kind)}, {"qubit", g.target}});
    }
    return a;
}

}  // namespace

void lcopt::write_correlation_csv(std::ostream &out, const CorrelationSeries &s) {
    out << "x,mean_y,std_y,count\n";
    for (const auto &r : s.rows) {
        out << num(r.x) << "," << num(r.mean_y) << "," << num(r.std_y) << "," << r.count << "\n";
    }
}

void lcopt::write_fidelity_csv(std::ostream &out, std::span<const FidelityRow> rows) {
    out << "n,variant,p_dep,trials,fidelity,stderr,min_pair_fidelity,min_pair_stderr\n";
    for (const auto &r : rows) {
        const auto &e = r.estimate;
        out << r.n << "," << r.variant << "," << num(r.p_dep) << "," << e.trials << "," << num(e.mean) << ","
            << num(e.stderr_) << "," << num(e.min_pair) << "," << num(e.min_pair_stderr) << "\n";
    }
}

void lcopt::write_survey_csv(std::ostream &out, const SurveyResult &s) {
    out << "class_id,n,class_size";
    for (const char *prefix : {"best_", "max_"}) {
        for (Metric m : SURVEY_METRICS) {
            out << "," << prefix << metric_name(m);
        }
    }
    out << "\n";
    for (const auto &r : s.rows) {
        out << r.class_id << "," << r.n << "," << r.class_size;
        for (std::size_t v : r.best) {
            out << "," << v;
        }
        for (std::size_t v : r.max) {
            out << "," << v;
        }
        out << "\n";
    }
}

std::string lcopt::svg_scatter(std::span<const double> xs, std::span<const double> ys, const std::string &title,
                               const std::string &x_label, const std::string &y_label) {
    if (xs.size() != ys.size()) {
        throw std::invalid_argument("svg_scatter: length mismatch.");
    }
    const double w = 480, h = 360, left = 60, right = 20, top = 40, bottom = 50;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    if (!xs.empty()) {
        auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
        auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
        x0 = *xmin;
        x1 = *xmax;
        y0 = *ymin;
        y1 = *ymax;
    }
    if (x1 == x0) {
        x1 = x0 + 1;
    }
    if (y1 == y0) {
        y1 = y0 + 1;
    }
    auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (w - left - right); };
    auto py = [&](double y) { return h - bottom - (y - y0) / (y1 - y0) * (h - top - bottom); };

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << xml_escape(title)
        << "</text>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
        << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
        << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << w / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
        << xml_escape(x_label) << " [" << num(x0) << ", " << num(x1) << "]</text>\n";
    svg << "<text x=\"16\" y=\"" << h / 2 << "\" text-anchor=\"middle\" font-size=\"12\" transform=\"rotate(-90 16 "
        << h / 2 << ")\">" << xml_escape(y_label) << " [" << num(y0) << ", " << num(y1) << "]</text>\n";
    for (std::size_t i = 0; i < xs.size(); i++) {
        svg << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i]) << "\" r=\"3\" fill=\"steelblue\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

nlohmann::json lcopt::orbit_record_to_json(const OrbitRecord &r) {
    nlohmann::json j = {
        {"graph6", to_graph6(r.graph)},
        {"edges", r.graph.num_edges()},
        {"lc_sequence", order_json(r.lc_sequence.nodes)},
    };
    if (r.cost.has_value()) {
        j["cost"] = cost_report_to_json(*r.cost);
    }
    return j;
}

nlohmann::json lcopt::optimization_report_json(const Graph &input, const OptimizationResult &r) {
    return {
        {"input_graph6", to_graph6(input)},
        {"witness", order_json(r.record.lc_sequence.nodes)},
        {"chosen_graph6", to_graph6(r.record.graph)},
        {"order", order_json(r.order)},
        {"cost_before", cost_report_to_json(r.original)},
        {"cost_after", cost_report_to_json(r.report)},
        {"circuit", circuit_to_json(r.circuit)},
    };
}

nlohmann::json lcopt::search_report_json(const Graph &input, const CostReport &original, const SearchResult &r) {
    std::vector<Node> natural(input.num_nodes());
    for (Node v = 0; v < natural.size(); v++) {
        natural[v] = v;
    }
    return {
        {"input_graph6", to_graph6(input)},
        {"witness", order_json(r.record.lc_sequence.nodes)},
        {"chosen_graph6", to_graph6(r.record.graph)},
        {"order", order_json(natural)},
        {"evaluated", r.evaluated},
        {"cost_before", cost_report_to_json(original)},
        {"cost_after", cost_report_to_json(r.report)},
        {"circuit", circuit_to_json(r.circuit)},
    };
}

nlohmann::json lcopt::rgs_report_json(const RgsOptimization &r) {
    return {
        {"arms", r.arms},
        {"photons", 2 * r.arms},
        {"witness", order_json(r.record.lc_sequence.nodes)},
        {"optimized_graph6", to_graph6(r.record.graph)},
        {"original", {{"cost", cost_report_to_json(r.original_report)}, {"circuit", circuit_to_json(r.original_circuit)}}},
        {"optimized",
         {{"cost", cost_report_to_json(r.report)},
          {"circuit", circuit_to_json(r.circuit)},
          {"inverse_local_layer", gates_json(r.inverse_local_layer)}}},
    };
}
