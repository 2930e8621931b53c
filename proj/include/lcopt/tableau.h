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

#ifndef LCOPT_TABLEAU_H
#define LCOPT_TABLEAU_H

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lcopt/graph.h"
#include "lcopt/pauli_string.h"

namespace lcopt {

/// Clifford gates understood by the simulator.
///
/// SQRT_X is exp(+i pi X / 4), i.e. sqrt(iX) up to global phase, and SQRT_Z
/// likewise sqrt(iZ). P is the usual phase gate diag(1, i).
enum class Gate : uint8_t {
    H,
    P,
    P_DAG,
    X,
    Y,
    Z,
    SQRT_X,
    SQRT_X_DAG,
    SQRT_Z,
    SQRT_Z_DAG,
    CNOT,
    CZ,
};

const char *gate_name(Gate g);
Gate gate_from_name(std::string_view name);
Gate gate_inverse(Gate g);
bool gate_is_two_qubit(Gate g);

struct CliffordGate {
    Gate kind;
    uint32_t target;
    uint32_t target2 = 0;  // CNOT target / CZ partner; unused for 1-qubit gates.

    bool operator==(const CliffordGate &other) const = default;
};

/// Stabilizer tableau with destabilizers (Aaronson-Gottesman layout).
///
/// Rows are bit-packed; row r < q is destabilizer r, row q + r is
/// stabilizer r. Only stabilizer rows carry meaning for state comparison.
class Tableau {
   public:
    /// The all-|0> state on `num_qubits` qubits.
    explicit Tableau(std::size_t num_qubits);

    /// Builds a tableau from q independent, commuting stabilizer generators.
    static Tableau from_stabilizers(const std::vector<PauliString> &stabilizers);

    std::size_t num_qubits() const {
        return q_;
    }
    PauliString stabilizer(std::size_t i) const {
        return row(q_ + i);
    }
    PauliString destabilizer(std::size_t i) const {
        return row(i);
    }
    std::vector<PauliString> stabilizers() const;

    bool stab_x(std::size_t i, std::size_t qubit) const {
        return bit(xs_, q_ + i, qubit);
    }
    bool stab_z(std::size_t i, std::size_t qubit) const {
        return bit(zs_, q_ + i, qubit);
    }
    bool stab_sign(std::size_t i) const {
        return signs_[q_ + i];
    }
    /// 'I', 'X', 'Y' or 'Z' of stabilizer i on `qubit`.
    char stab_pauli(std::size_t i, std::size_t qubit) const;

    void apply(Gate g, std::size_t a, std::size_t b = 0);
    void apply(const CliffordGate &g) {
        apply(g.kind, g.target, g.target2);
    }
    void apply_pauli(const PauliString &p);

    /// Deterministic outcome of a Z measurement, or nullopt if random.
    std::optional<bool> peek_z(std::size_t qubit) const;
    /// Deterministic outcome of measuring `obs` (bit 1 = eigenvalue -1 of obs including its sign).
    std::optional<bool> peek(const PauliString &obs) const;

    /// Measures Z on `qubit`. Random outcomes use `forced` when given, else a
    /// fair coin from `rng`, else 0. Throws if `forced` contradicts a
    /// deterministic outcome.
    bool measure_z(std::size_t qubit, std::optional<bool> forced = std::nullopt, std::mt19937_64 *rng = nullptr);
    bool measure(const PauliString &obs, std::optional<bool> forced = std::nullopt, std::mt19937_64 *rng = nullptr);
    /// Measures Z and flips the qubit back to |0>.
    void reset(std::size_t qubit, std::mt19937_64 *rng = nullptr);

    /// S_i <- S_i * S_k, with D_k <- D_k * D_i keeping the destabilizers dual.
    void stab_mul(std::size_t i, std::size_t k);
    void stab_swap(std::size_t i, std::size_t k);

    /// Row-reduced echelon form of the stabilizers over the column order
    /// x_0..x_{q-1}, z_0..z_{q-1}. Unique per stabilizer group.
    void canonicalize();

    /// True iff generators commute, are independent, and pair with the destabilizers.
    bool is_consistent() const;

    bool operator==(const Tableau &other) const = default;
    /// One stabilizer per line, e.g. "+XZI".
    std::string str() const;

   private:
    PauliString row(std::size_t r) const;
    void set_row(std::size_t r, const PauliString &p);
    bool bit(const std::vector<uint64_t> &m, std::size_t r, std::size_t qubit) const {
        return (m[r * w_ + qubit / 64] >> (qubit % 64)) & 1;
    }
    uint64_t *x_row(std::size_t r) {
        return xs_.data() + r * w_;
    }
    uint64_t *z_row(std::size_t r) {
        return zs_.data() + r * w_;
    }
    const uint64_t *x_row(std::size_t r) const {
        return xs_.data() + r * w_;
    }
    const uint64_t *z_row(std::size_t r) const {
        return zs_.data() + r * w_;
    }
    /// row[t] <- row[t] * row[s]; the rows must commute.
    void row_mul(std::size_t t, std::size_t s);
    void row_swap(std::size_t a, std::size_t b);
    void check_qubit(std::size_t qubit) const;

    std::size_t q_;
    std::size_t w_;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
    std::vector<uint8_t> signs_;
};

/// Graph state |G> followed by `extra_zero_qubits` qubits in |0>.
Tableau tableau_from_graph(const Graph &g, std::size_t extra_zero_qubits = 0);

/// Stabilizer rows of the canonical form (destabilizers dropped).
std::vector<PauliString> canonical_stabilizers(const Tableau &t);

/// Equal stabilizer groups including signs (equal states up to global phase).
bool states_equal(const Tableau &a, const Tableau &b);

/// |<a|b>|^2 for two stabilizer states; always 0 or a power of 1/2.
double state_overlap(const Tableau &a, const Tableau &b);

/// Local Clifford mapping |G> to |LC_v(G)>: sqrt(-iX) on v and sqrt(iZ) on each neighbor.
std::vector<CliffordGate> lc_unitary_gates(const Graph &g, Node v);

}  // namespace lcopt

#endif
