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

#ifndef LCOPT_OPTIMIZER_H
#define LCOPT_OPTIMIZER_H

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcopt/circuit.h"
#include "lcopt/orbit.h"

namespace lcopt {

enum class Metric : uint8_t {
    NEmitters,
    EeCnots,
    EmitterDepth,
    UnitaryCount,
    Depth,
};

const char *metric_name(Metric m);
Metric metric_from_name(std::string_view name);
std::size_t metric_value(const CostReport &r, Metric m);

/// Lexicographic or weighted objective over cost metrics.
///
/// Text form: "ee_cnots", "lex:n_emitters,ee_cnots" or
/// "weighted:ee_cnots=1,depth=0.5".
struct CostFunction {
    enum class Mode { Lexicographic, Weighted };
    Mode mode = Mode::Lexicographic;
    std::vector<Metric> metrics;
    std::vector<double> weights;

    /// (n_emitters, ee_cnots, emitter_depth, unitary_count), lexicographic.
    static CostFunction standard();
    static CostFunction single(Metric m);
    static CostFunction parse(std::string_view text);
    std::string str() const;

    /// Comparison key; smaller is better.
    std::vector<double> key(const CostReport &r) const;
    bool less(const CostReport &a, const CostReport &b) const {
        return key(a) < key(b);
    }
};

struct OptimizerLimits {
    std::size_t orbit_cap = 100000;
    /// Graphs up to this size get all n! emission orders; larger ones are sampled.
    std::size_t max_full_order_nodes = 7;
    std::size_t sampled_orders = 200;
    uint64_t seed = 0;
};

struct OptimizationResult {
    OrbitRecord record;
    /// order[t] = original node emitted at time t.
    std::vector<Node> order;
    Circuit circuit;
    CostReport report;
    /// Identity member, natural order.
    CostReport original;
};

/// Graph whose node t is `order[t]` of `g`.
Graph reorder(const Graph &g, const std::vector<Node> &order);

/// Minimum-cost circuit over every orbit member and emission order.
OptimizationResult optimize_exhaustive(const Graph &g, const CostFunction &cost, const OptimizerLimits &limits = {});

/// Active edge reduction: repeatedly complement the node maximizing
/// degree * clustering coefficient while that strictly lowers the edge count.
OrbitRecord edge_reduce(const Graph &g);

struct SearchResult {
    OrbitRecord record;
    Circuit circuit;
    CostReport report;
    std::size_t evaluated = 0;
};

/// Best natural-order circuit over the seed plus `sample_size` random-walk samples.
SearchResult random_search(const Graph &g, std::size_t sample_size, std::size_t walk_len, const CostFunction &cost,
                           std::mt19937_64 &rng);

struct RgsOptimization {
    std::size_t arms = 0;
    OrbitRecord record;
    Circuit circuit;
    CostReport report;
    /// Photon-local gates that turn the optimized state back into the RGS.
    std::vector<CliffordGate> inverse_local_layer;
    Circuit original_circuit;
    CostReport original_report;
};

/// Photon gates undoing the LC unitaries of `seq` applied to `seed`.
std::vector<CliffordGate> inverse_lc_layer(const Graph &seed, const LcSequence &seq);

/// Appends `layer` to a copy of `c` as photon single-qubit ops.
Circuit with_local_layer(const Circuit &c, const std::vector<CliffordGate> &layer);

RgsOptimization rgs_optimize(std::size_t arms, bool verify = true);

}  // namespace lcopt

#endif
