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

#include "lcopt/optimizer.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "lcopt/mapper.h"

using namespace lcopt;

namespace {

constexpr std::array<std::pair<Metric, const char *>, 5> METRIC_NAMES = {{
    {Metric::NEmitters, "n_emitters"},
    {Metric::EeCnots, "ee_cnots"},
    {Metric::EmitterDepth, "emitter_depth"},
    {Metric::UnitaryCount, "unitary_count"},
    {Metric::Depth, "depth"},
}};

std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

const char *lcopt::metric_name(Metric m) {
    return METRIC_NAMES[(std::size_t)m].second;
}

Metric lcopt::metric_from_name(std::string_view name) {
    for (const auto &[m, s] : METRIC_NAMES) {
        if (name == s) {
            return m;
        }
    }
    throw std::invalid_argument("Unknown cost metric '" + std::string(name) + "'.");
}

std::size_t lcopt::metric_value(const CostReport &r, Metric m) {
    switch (m) {
        case Metric::NEmitters:
            return r.n_emitters;
        case Metric::EeCnots:
            return r.ee_cnots;
        case Metric::EmitterDepth:
            return r.emitter_depth;
        case Metric::UnitaryCount:
            return r.unitary_count;
        case Metric::Depth:
            return r.depth;
    }
    return 0;
}

CostFunction CostFunction::standard() {
    CostFunction f;
    f.metrics = {Metric::NEmitters, Metric::EeCnots, Metric::EmitterDepth, Metric::UnitaryCount};
    return f;
}

CostFunction CostFunction::single(Metric m) {
    CostFunction f;
    f.metrics = {m};
    return f;
}

CostFunction CostFunction::parse(std::string_view text) {
    CostFunction f;
    if (text.starts_with("weighted:")) {
        f.mode = Mode::Weighted;
        for (const auto &term : split(text.substr(9), ',')) {
            auto eq = term.find('=');
            if (eq == std::string::npos) {
                throw std::invalid_argument("Weighted cost term '" + term + "' needs metric=weight.");
            }
            double w;
            try {
                w = std::stod(term.substr(eq + 1));
            } catch (const std::exception &) {
                throw std::invalid_argument("Bad weight in cost term '" + term + "'.");
            }
            if (!(w >= 0)) {
                throw std::invalid_argument("Cost weights must be nonnegative.");
            }
            f.metrics.push_back(metric_from_name(term.substr(0, eq)));
            f.weights.push_back(w);
        }
    } else {
        if (text.starts_with("lex:")) {
            text.remove_prefix(4);
        }
        for (const auto &term : split(text, ',')) {
            f.metrics.push_back(metric_from_name(term));
        }
    }
    if (f.metrics.empty()) {
        throw std::invalid_argument("Cost function needs at least one metric.");
    }
    return f;
}

std::string CostFunction::str() const {
    std::stringstream ss;
    ss << (mode == Mode::Weighted ? "weighted:" : "lex:");
    for (std::size_t k = 0; k < metrics.size(); k++) {
        if (k) {
            ss << ",";
        }
        ss << metric_name(metrics[k]);
        if (mode == Mode::Weighted) {
            ss << "=" << weights[k];
        }
    }
    return ss.str();
}

std::vector<double> CostFunction::key(const CostReport &r) const {
    if (mode == Mode::Weighted) {
        double total = 0;
        for (std::size_t k = 0; k < metrics.size(); k++) {
            total += weights[k] * (double)metric_value(r, metrics[k]);
        }
        return {total};
    }
    std::vector<double> out;
    out.reserve(metrics.size());
    for (Metric m : metrics) {
        out.push_back((double)metric_value(r, m));
    }
    return out;
}

Graph lcopt::reorder(const Graph &g, const std::vector<Node> &order) {
    std::vector<Node> label(order.size());
    for (std::size_t t = 0; t < order.size(); t++) {
        label[order[t]] = t;
    }
    return g.relabeled(label);
}

OptimizationResult lcopt::optimize_exhaustive(const Graph &g, const CostFunction &cost, const OptimizerLimits &limits) {
    std::size_t n = g.num_nodes();
    CompactOrbit orbit = CompactOrbit::explore(g, limits.orbit_cap);

    std::vector<std::vector<Node>> orders;
    std::vector<Node> identity(n);
    std::iota(identity.begin(), identity.end(), 0);
    if (n <= limits.max_full_order_nodes) {
        std::vector<Node> perm = identity;
        do {
            orders.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        orders.push_back(identity);
        std::mt19937_64 rng(limits.seed);
        for (std::size_t s = 0; s < limits.sampled_orders; s++) {
            std::vector<Node> perm = identity;
            std::shuffle(perm.begin(), perm.end(), rng);
            orders.push_back(std::move(perm));
        }
    }

    MapperOptions fast{false};
    OptimizationResult best;
    best.original = cost_report(map_to_circuit(g, fast));
    bool have = false;
    std::vector<double> best_key;
    LcSequence best_witness;
    for (std::size_t i = 0; i < orbit.size(); i++) {
        Graph member = orbit.graph(i);
        LcSequence witness = orbit.witness(i);
        for (const auto &order : orders) {
            Circuit c = map_to_circuit(reorder(member, order), fast);
            CostReport r = cost_report(c);
            std::vector<double> k = cost.key(r);
            bool better = !have || k < best_key;
            if (have && k == best_key) {
                auto tie = [](const CostReport &x, const LcSequence &w, const std::vector<Node> &o) {
                    return std::make_tuple(x.ee_cnots, x.emitter_depth, std::cref(w.nodes), std::cref(o));
                };
                better = tie(r, witness, order) < tie(best.report, best_witness, best.order);
            }
            if (better) {
                have = true;
                best_key = k;
                best_witness = witness;
                best.record = {member, witness, r};
                best.order = order;
                best.circuit = std::move(c);
                best.report = r;
            }
        }
    }
    if (!verify_circuit(best.circuit, reorder(best.record.graph, best.order))) {
        throw std::logic_error("optimize_exhaustive: best circuit failed verification.");
    }
    return best;
}

OrbitRecord lcopt::edge_reduce(const Graph &g) {
    OrbitRecord r{g, {}, std::nullopt};
    std::size_t edges = g.num_edges();
    while (true) {
        std::size_t n = r.graph.num_nodes();
        Node best = 0;
        // Score deg * cc compared exactly as deg * num / den.
        unsigned __int128 best_num = 0;
        unsigned __int128 best_den = 1;
        for (Node v = 0; v < n; v++) {
            Fraction cc = clustering_coefficient(r.graph, v);
            unsigned __int128 num = (unsigned __int128)r.graph.degree(v) * cc.num;
            unsigned __int128 den = cc.den;
            if (num * best_den > best_num * den) {
                best = v;
                best_num = num;
                best_den = den;
            }
        }
        Graph next = local_complement(r.graph, best);
        std::size_t next_edges = next.num_edges();
        if (next_edges >= edges) {
            return r;
        }
        r.graph = std::move(next);
        r.lc_sequence.nodes.push_back(best);
        edges = next_edges;
    }
}

SearchResult lcopt::random_search(const Graph &g, std::size_t sample_size, std::size_t walk_len,
                                  const CostFunction &cost, std::mt19937_64 &rng) {
    if (sample_size == 0) {
        throw std::invalid_argument("random_search needs a positive sample size.");
    }
    std::vector<OrbitRecord> candidates;
    candidates.push_back({g, {}, std::nullopt});
    for (auto &rec : orbit_sample(g, sample_size, walk_len, rng)) {
        if (!(rec.graph == g)) {
            candidates.push_back(std::move(rec));
        }
    }
    MapperOptions fast{false};
    SearchResult best;
    std::vector<double> best_key;
    for (auto &rec : candidates) {
        Circuit c = map_to_circuit(rec.graph, fast);
        CostReport rep = cost_report(c);
        std::vector<double> k = cost.key(rep);
        best.evaluated++;
        if (best_key.empty() || k < best_key) {
            best_key = k;
            rec.cost = rep;
            best.record = rec;
            best.circuit = std::move(c);
            best.report = rep;
        }
    }
    return best;
}

std::vector<CliffordGate> lcopt::inverse_lc_layer(const Graph &seed, const LcSequence &seq) {
    std::vector<std::vector<CliffordGate>> steps;
    Graph cur = seed;
    for (Node v : seq.nodes) {
        steps.push_back(lc_unitary_gates(cur, v));
        local_complement_inplace(cur, v);
    }
    std::vector<CliffordGate> layer;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        for (const auto &gate : *it) {
            layer.push_back({gate_inverse(gate.kind), gate.target, 0});
        }
    }
    return layer;
}

Circuit lcopt::with_local_layer(const Circuit &c, const std::vector<CliffordGate> &layer) {
    Circuit out = c;
    for (const auto &gate : layer) {
        if (gate_is_two_qubit(gate.kind) || gate.target >= c.n_photons) {
            throw std::invalid_argument("Local layer must hold photon single-qubit gates.");
        }
        out.ops.push_back(Op::u1(gate.kind, gate.target));
    }
    return out;
}

RgsOptimization lcopt::rgs_optimize(std::size_t arms, bool verify) {
    RgsOptimization out;
    out.arms = arms;
    Graph rgs = make_rgs(arms);
    LcSequence seq = rgs_best_sequence(arms);
    MapperOptions opts{verify};
    Graph best = apply_lc_sequence(rgs, seq);
    out.circuit = map_to_circuit(best, opts);
    out.report = cost_report(out.circuit);
    out.record = {best, seq, out.report};
    out.inverse_local_layer = inverse_lc_layer(rgs, seq);
    out.original_circuit = map_to_circuit(rgs, opts);
    out.original_report = cost_report(out.original_circuit);
    if (verify && !verify_circuit(with_local_layer(out.circuit, out.inverse_local_layer), rgs)) {
        throw std::logic_error("rgs_optimize: optimized pipeline does not rebuild the RGS.");
    }
    return out;
}
