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

#ifndef LCOPT_FIDELITY_H
#define LCOPT_FIDELITY_H

#include <cstdint>
#include <string_view>
#include <vector>

#include "lcopt/circuit.h"
#include "lcopt/graph.h"
#include "lcopt/tableau.h"

namespace lcopt {

struct NoiseModel {
    enum class Scope { EmitterCnots, AllCnots };
    /// UniformPauli: one of the 15 non-identity two-qubit Paulis with total
    /// probability p_dep. PerQubit: each qubit of the gate independently gets
    /// X, Y or Z with probability p_dep.
    enum class Channel { UniformPauli, PerQubit };

    double p_dep = 0;
    Scope scope = Scope::EmitterCnots;
    Channel channel = Channel::UniformPauli;

    void validate() const;
};

NoiseModel::Scope noise_scope_from_name(std::string_view name);
NoiseModel::Channel noise_channel_from_name(std::string_view name);
const char *noise_scope_name(NoiseModel::Scope s);
const char *noise_channel_name(NoiseModel::Channel c);

/// Measurements turning an RGS into a two-qubit pair on two leaves.
struct DistillPlan {
    Node leaf_a = 0;
    Node leaf_b = 0;
    Node core_a = 0;
    Node core_b = 0;
    /// Z-basis measurements, ascending, then the two cores in X.
    std::vector<Node> z_measured;
    std::vector<Node> x_measured;
};

DistillPlan distill_pattern(const Graph &rgs, Node leaf_a, Node leaf_b);

/// Noiseless outcome of a plan plus the Pauli frame: flipping the k-th random
/// measurement multiplies the kept pair by corrections[k].
struct DistillFrame {
    DistillPlan plan;
    /// Pair state (all measured qubits reset to |0>) for all-zero outcomes.
    Tableau reference{1};
    /// Indexed by plan position (z_measured then x_measured); identity for
    /// measurements that are deterministic on the ideal state.
    std::vector<PauliString> corrections;
};

/// Runs `plan` on `ideal` (photons only, emitters already reset) and derives the frame.
DistillFrame distill_frame(const Tableau &ideal, const DistillPlan &plan);

/// Measures the plan with random outcomes, applies the frame corrections, resets
/// the measured qubits, and returns the overlap with the reference pair.
double distill_and_score(Tableau state, const DistillFrame &frame, std::mt19937_64 &rng);

struct PairFidelity {
    Node leaf_a = 0;
    Node leaf_b = 0;
    double mean = 0;
    double stderr_ = 0;
};

struct FidelityEstimate {
    /// Mean over trajectories and leaf pairs.
    double mean = 0;
    double stderr_ = 0;
    /// Worst leaf pair.
    double min_pair = 0;
    double min_pair_stderr = 0;
    std::size_t trials = 0;
    std::vector<PairFidelity> pairs;
};

/// Monte-Carlo EPR fidelity of an RGS-producing circuit followed by
/// `local_layer` and distillation over every leaf pair. Each trajectory
/// draws its own RNG stream from (seed, trial index).
FidelityEstimate epr_fidelity_mc(const Circuit &c, const std::vector<CliffordGate> &local_layer,
                                 const Graph &rgs, const NoiseModel &noise, std::size_t trials, uint64_t seed);

}  // namespace lcopt

#endif
