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

#ifndef LCOPT_CIRCUIT_H
#define LCOPT_CIRCUIT_H

#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcopt/tableau.h"

namespace lcopt {

struct CircuitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OpKind : uint8_t {
    Unitary1Q,
    CnotEE,
    Emission,
    MeasureZ,
    Reset,
};

/// One factor of a correction Pauli. `qubit` is a global index.
struct PauliTerm {
    uint32_t qubit;
    char pauli;  // 'X', 'Y' or 'Z'

    bool operator==(const PauliTerm &other) const = default;
};

/// A circuit operation.
///
/// Qubit numbering: photons are global qubits 0..n_photons-1 and emitter e is
/// global qubit n_photons + e. Emitter-valued fields hold register indices e,
/// photon fields hold photon indices, and `Unitary1Q::a` plus correction
/// terms hold global indices.
struct Op {
    OpKind kind = OpKind::Unitary1Q;
    Gate gate = Gate::H;  // Unitary1Q only.
    uint32_t a = 0;       // Unitary1Q target / CnotEE control / emitter of Emission, MeasureZ, Reset.
    uint32_t b = 0;       // CnotEE target emitter / Emission photon.
    std::vector<PauliTerm> correction;

    static Op u1(Gate g, uint32_t qubit);
    static Op cnot(uint32_t control_emitter, uint32_t target_emitter);
    static Op emission(uint32_t emitter, uint32_t photon);
    static Op measure(uint32_t emitter, std::vector<PauliTerm> correction = {});
    static Op reset(uint32_t emitter);

    bool operator==(const Op &other) const = default;
    std::string str() const;
};

struct Circuit {
    std::size_t n_photons = 0;
    std::size_t n_emitters = 0;
    std::vector<Op> ops;

    std::size_t num_qubits() const {
        return n_photons + n_emitters;
    }
    uint32_t emitter_qubit(uint32_t e) const {
        return (uint32_t)(n_photons + e);
    }
    /// Throws CircuitError on any violated structural invariant.
    void validate() const;

    bool operator==(const Circuit &other) const = default;
    std::string str() const;
};

struct CostReport {
    std::size_t n_emitters = 0;
    std::size_t ee_cnots = 0;
    std::size_t unitary_count = 0;
    std::size_t depth = 0;
    std::size_t emitter_depth = 0;
    std::size_t emission_count = 0;

    bool operator==(const CostReport &other) const = default;
};

struct SimulationOptions {
    /// When set, random measurement outcomes are drawn from it; otherwise the 0 branch is taken.
    std::mt19937_64 *rng = nullptr;
    /// Optional explicit outcomes for random MeasureZ ops, consumed in order.
    const std::vector<bool> *forced_outcomes = nullptr;
    /// Called after every op (noise injection hook).
    std::function<void(const Op &, Tableau &)> after_op;
};

/// Runs the circuit from |0...0>, applying corrections on outcome 1.
Tableau simulate_forward(const Circuit &c, const SimulationOptions &options = {});

CostReport cost_report(const Circuit &c);

/// Largest number of ops touching any single qubit (a lower bound on depth).
std::size_t longest_per_qubit_op_count(const Circuit &c);

}  // namespace lcopt

#endif
