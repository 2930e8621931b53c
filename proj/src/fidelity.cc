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

#include "lcopt/fidelity.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

using namespace lcopt;

namespace {

struct Step {
    Node qubit;
    bool x_basis;
};

std::vector<Step> plan_steps(const DistillPlan &plan) {
    std::vector<Step> steps;
    for (Node v : plan.z_measured) {
        steps.push_back({v, false});
    }
    for (Node v : plan.x_measured) {
        steps.push_back({v, true});
    }
    return steps;
}

/// Executes the plan; `choose(k)` supplies the outcome of step k when it is random.
/// Returns the outcomes of random steps (false for deterministic ones) and a mask.
void run_plan(Tableau &t, const std::vector<Step> &steps, const std::function<bool(std::size_t)> &choose,
              std::vector<bool> *random_outcomes) {
    for (std::size_t k = 0; k < steps.size(); k++) {
        const Step &s = steps[k];
        if (s.x_basis) {
            t.apply(Gate::H, s.qubit);
        }
        auto d = t.peek_z(s.qubit);
        bool outcome = d.has_value() ? *d : choose(k);
        t.measure_z(s.qubit, d.has_value() ? std::nullopt : std::optional<bool>(outcome));
        if (random_outcomes != nullptr) {
            random_outcomes->push_back(!d.has_value() && outcome);
        }
        if (outcome) {
            t.apply(Gate::X, s.qubit);
        }
    }
}

void apply_pauli_char(Tableau &t, char p, std::size_t q) {
    if (p == 'X') {
        t.apply(Gate::X, q);
    } else if (p == 'Y') {
        t.apply(Gate::Y, q);
    } else if (p == 'Z') {
        t.apply(Gate::Z, q);
    }
}

Node leaf_core(const Graph &g, Node leaf) {
    if (leaf >= g.num_nodes() || g.degree(leaf) != 1) {
        throw std::invalid_argument("distill_pattern: node " + std::to_string(leaf) + " is not a leaf.");
    }
    return g.neighbors(leaf)[0];
}

}  // namespace

void NoiseModel::validate() const {
    if (!(p_dep >= 0 && p_dep <= 1)) {
        throw std::invalid_argument("Depolarizing probability must lie in [0, 1].");
    }
}

NoiseModel::Scope lcopt::noise_scope_from_name(std::string_view name) {
    if (name == "ee") {
        return NoiseModel::Scope::EmitterCnots;
    }
    if (name == "all") {
        return NoiseModel::Scope::AllCnots;
    }
    throw std::invalid_argument("Unknown noise scope '" + std::string(name) + "' (ee|all).");
}

NoiseModel::Channel lcopt::noise_channel_from_name(std::string_view name) {
    if (name == "uniform") {
        return NoiseModel::Channel::UniformPauli;
    }
    if (name == "per-qubit") {
        return NoiseModel::Channel::PerQubit;
    }
    throw std::invalid_argument("Unknown noise channel '" + std::string(name) + "' (uniform|per-qubit).");
}

const char *lcopt::noise_scope_name(NoiseModel::Scope s) {
    return s == NoiseModel::Scope::EmitterCnots ? "ee" : "all";
}

const char *lcopt::noise_channel_name(NoiseModel::Channel c) {
    return c == NoiseModel::Channel::UniformPauli ? "uniform" : "per-qubit";
}

DistillPlan lcopt::distill_pattern(const Graph &rgs, Node leaf_a, Node leaf_b) {
    if (leaf_a == leaf_b) {
        throw std::invalid_argument("distill_pattern: the two leaves must differ.");
    }
    DistillPlan plan;
    plan.leaf_a = std::min(leaf_a, leaf_b);
    plan.leaf_b = std::max(leaf_a, leaf_b);
    plan.core_a = leaf_core(rgs, plan.leaf_a);
    plan.core_b = leaf_core(rgs, plan.leaf_b);
    if (plan.core_a == plan.core_b) {
        throw std::invalid_argument("distill_pattern: leaves share a core.");
    }
    for (Node v = 0; v < rgs.num_nodes(); v++) {
        if (v != plan.leaf_a && v != plan.leaf_b && v != plan.core_a && v != plan.core_b) {
            plan.z_measured.push_back(v);
        }
    }
    plan.x_measured = {std::min(plan.core_a, plan.core_b), std::max(plan.core_a, plan.core_b)};
    return plan;
}

DistillFrame lcopt::distill_frame(const Tableau &ideal, const DistillPlan &plan) {
    auto steps = plan_steps(plan);
    DistillFrame frame;
    frame.plan = plan;
    frame.reference = ideal;
    std::vector<bool> mask;
    {
        Tableau probe = ideal;
        run_plan(probe, steps, [](std::size_t) { return true; }, &mask);
    }
    run_plan(frame.reference, steps, [](std::size_t) { return false; }, nullptr);

    std::size_t q = ideal.num_qubits();
    const char paulis[4] = {'I', 'X', 'Y', 'Z'};
    for (std::size_t k = 0; k < steps.size(); k++) {
        PauliString identity(q);
        if (!mask[k]) {
            frame.corrections.push_back(identity);
            continue;
        }
        Tableau flipped = ideal;
        run_plan(flipped, steps, [k](std::size_t s) { return s == k; }, nullptr);
        bool found = false;
        for (int pa = 0; pa < 4 && !found; pa++) {
            for (int pb = 0; pb < 4 && !found; pb++) {
                Tableau trial = frame.reference;
                apply_pauli_char(trial, paulis[pa], plan.leaf_a);
                apply_pauli_char(trial, paulis[pb], plan.leaf_b);
                if (states_equal(trial, flipped)) {
                    PauliString p(q);
                    p.set(plan.leaf_a, paulis[pa]);
                    p.set(plan.leaf_b, paulis[pb]);
                    frame.corrections.push_back(p);
                    found = true;
                }
            }
        }
        if (!found) {
            throw std::logic_error("distill_frame: outcome flip is not a Pauli on the kept pair.");
        }
    }
    return frame;
}

double lcopt::distill_and_score(Tableau state, const DistillFrame &frame, std::mt19937_64 &rng) {
    auto steps = plan_steps(frame.plan);
    std::vector<bool> outcomes;
    run_plan(state, steps, [&rng](std::size_t) { return (rng() & 1) != 0; }, &outcomes);
    for (std::size_t k = 0; k < steps.size(); k++) {
        if (outcomes[k]) {
            const PauliString &c = frame.corrections[k];
            apply_pauli_char(state, c.at(frame.plan.leaf_a), frame.plan.leaf_a);
            apply_pauli_char(state, c.at(frame.plan.leaf_b), frame.plan.leaf_b);
        }
    }
    return state_overlap(state, frame.reference);
}

FidelityEstimate lcopt::epr_fidelity_mc(const Circuit &c, const std::vector<CliffordGate> &local_layer,
                                        const Graph &rgs, const NoiseModel &noise, std::size_t trials,
                                        uint64_t seed) {
    noise.validate();
    if (trials == 0) {
        throw std::invalid_argument("epr_fidelity_mc needs at least one trial.");
    }
    if (c.n_photons != rgs.num_nodes()) {
        throw std::invalid_argument("epr_fidelity_mc: circuit and graph sizes differ.");
    }
    auto finish = [&](Tableau &t, std::mt19937_64 *rng) {
        for (const auto &g : local_layer) {
            t.apply(g.kind, g.target, g.target2);
        }
        for (std::size_t e = 0; e < c.n_emitters; e++) {
            t.reset(c.emitter_qubit(e), rng);
        }
    };

    Tableau ideal = simulate_forward(c);
    finish(ideal, nullptr);
    if (!states_equal(ideal, tableau_from_graph(rgs, c.n_emitters))) {
        throw std::invalid_argument("epr_fidelity_mc: circuit plus layer does not produce the RGS.");
    }

    std::vector<Node> leaves;
    for (Node v = 0; v < rgs.num_nodes(); v++) {
        if (rgs.degree(v) == 1 && rgs.degree(rgs.neighbors(v)[0]) > 1) {
            leaves.push_back(v);
        }
    }
    std::vector<DistillFrame> frames;
    for (std::size_t a = 0; a < leaves.size(); a++) {
        for (std::size_t b = a + 1; b < leaves.size(); b++) {
            frames.push_back(distill_frame(ideal, distill_pattern(rgs, leaves[a], leaves[b])));
        }
    }
    if (frames.empty()) {
        throw std::invalid_argument("epr_fidelity_mc: graph has fewer than two usable leaves.");
    }

    std::size_t n = c.n_photons;
    auto qubits_of = [&](const Op &op) -> std::pair<std::size_t, std::size_t> {
        if (op.kind == OpKind::CnotEE) {
            return {n + op.a, n + op.b};
        }
        return {n + op.a, op.b};
    };

    std::vector<double> pair_sum(frames.size(), 0);
    std::vector<double> pair_sq(frames.size(), 0);
    double trial_sum = 0;
    double trial_sq = 0;
    for (std::size_t t = 0; t < trials; t++) {
        std::seed_seq seq{(uint32_t)seed, (uint32_t)(seed >> 32), (uint32_t)t, (uint32_t)(t >> 32)};
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> unit(0, 1);
        SimulationOptions opts;
        opts.rng = &rng;
        if (noise.p_dep > 0) {
            opts.after_op = [&](const Op &op, Tableau &tab) {
                bool noisy = op.kind == OpKind::CnotEE ||
                             (op.kind == OpKind::Emission && noise.scope == NoiseModel::Scope::AllCnots);
                if (!noisy) {
                    return;
                }
                auto [qa, qb] = qubits_of(op);
                const char paulis[4] = {'I', 'X', 'Y', 'Z'};
                if (noise.channel == NoiseModel::Channel::UniformPauli) {
                    if (unit(rng) < noise.p_dep) {
                        int r = 1 + (int)(rng() % 15);
                        apply_pauli_char(tab, paulis[r & 3], qa);
                        apply_pauli_char(tab, paulis[r >> 2], qb);
                    }
                } else {
                    for (std::size_t qq : {qa, qb}) {
                        if (unit(rng) < noise.p_dep) {
                            apply_pauli_char(tab, paulis[1 + rng() % 3], qq);
                        }
                    }
                }
            };
        }
        Tableau noisy = simulate_forward(c, opts);
        finish(noisy, &rng);
        double avg = 0;
        for (std::size_t f = 0; f < frames.size(); f++) {
            double v = distill_and_score(noisy, frames[f], rng);
            pair_sum[f] += v;
            pair_sq[f] += v * v;
            avg += v;
        }
        avg /= (double)frames.size();
        trial_sum += avg;
        trial_sq += avg * avg;
    }

    double tn = (double)trials;
    auto stderr_of = [tn](double sum, double sq) {
        if (tn < 2) {
            return 0.0;
        }
        double mean = sum / tn;
        double var = std::max(0.0, (sq - tn * mean * mean) / (tn - 1));
        return std::sqrt(var / tn);
    };
    FidelityEstimate out;
    out.trials = trials;
    out.mean = trial_sum / tn;
    out.stderr_ = stderr_of(trial_sum, trial_sq);
    out.min_pair = 2;
    for (std::size_t f = 0; f < frames.size(); f++) {
        PairFidelity p{frames[f].plan.leaf_a, frames[f].plan.leaf_b, pair_sum[f] / tn, stderr_of(pair_sum[f], pair_sq[f])};
        if (p.mean < out.min_pair) {
            out.min_pair = p.mean;
            out.min_pair_stderr = p.stderr_;
        }
        out.pairs.push_back(p);
    }
    return out;
}
