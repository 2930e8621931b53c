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

#include "lcopt/tableau.h"

#include <array>
#include <sstream>
#include <stdexcept>

using namespace lcopt;

namespace {

struct GateInfo {
    Gate gate;
    const char *name;
    Gate inverse;
};

constexpr std::array<GateInfo, 12> GATE_TABLE = {{
    {Gate::H, "H", Gate::H},
    {Gate::P, "P", Gate::P_DAG},
    {Gate::P_DAG, "P_DAG", Gate::P},
    {Gate::X, "X", Gate::X},
    {Gate::Y, "Y", Gate::Y},
    {Gate::Z, "Z", Gate::Z},
    {Gate::SQRT_X, "SQRT_X", Gate::SQRT_X_DAG},
    {Gate::SQRT_X_DAG, "SQRT_X_DAG", Gate::SQRT_X},
    {Gate::SQRT_Z, "SQRT_Z", Gate::SQRT_Z_DAG},
    {Gate::SQRT_Z_DAG, "SQRT_Z_DAG", Gate::SQRT_Z},
    {Gate::CNOT, "CNOT", Gate::CNOT},
    {Gate::CZ, "CZ", Gate::CZ},
}};

}  // namespace

const char *lcopt::gate_name(Gate g) {
    return GATE_TABLE[(std::size_t)g].name;
}

Gate lcopt::gate_from_name(std::string_view name) {
    for (const auto &info : GATE_TABLE) {
        if (name == info.name) {
            return info.gate;
        }
    }
    throw std::invalid_argument("Unknown gate '" + std::string(name) + "'.");
}

Gate lcopt::gate_inverse(Gate g) {
    return GATE_TABLE[(std::size_t)g].inverse;
}

bool lcopt::gate_is_two_qubit(Gate g) {
    return g == Gate::CNOT || g == Gate::CZ;
}

Tableau::Tableau(std::size_t num_qubits)
    : q_(num_qubits), w_((num_qubits + 63) / 64), xs_(2 * q_ * w_, 0), zs_(2 * q_ * w_, 0), signs_(2 * q_, 0) {
    for (std::size_t k = 0; k < q_; k++) {
        x_row(k)[k / 64] |= uint64_t{1} << (k % 64);
        z_row(q_ + k)[k / 64] |= uint64_t{1} << (k % 64);
    }
}

void Tableau::check_qubit(std::size_t qubit) const {
    if (qubit >= q_) {
        throw std::out_of_range(
            "Qubit " + std::to_string(qubit) + " out of range for " + std::to_string(q_) + "-qubit tableau.");
    }
}

PauliString Tableau::row(std::size_t r) const {
    PauliString p(q_);
    for (std::size_t k = 0; k < w_; k++) {
        p.xs[k] = x_row(r)[k];
        p.zs[k] = z_row(r)[k];
    }
    p.sign = signs_[r];
    return p;
}

void Tableau::set_row(std::size_t r, const PauliString &p) {
    for (std::size_t k = 0; k < w_; k++) {
        x_row(r)[k] = p.xs[k];
        z_row(r)[k] = p.zs[k];
    }
    signs_[r] = p.sign;
}

std::vector<PauliString> Tableau::stabilizers() const {
    std::vector<PauliString> out;
    out.reserve(q_);
    for (std::size_t i = 0; i < q_; i++) {
        out.push_back(stabilizer(i));
    }
    return out;
}

char Tableau::stab_pauli(std::size_t i, std::size_t qubit) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(int)stab_x(i, qubit) | ((int)stab_z(i, qubit) << 1)];
}

void Tableau::row_mul(std::size_t t, std::size_t s) {
    uint8_t log_i = pauli_mul_log_i(x_row(t), z_row(t), x_row(s), z_row(s), signs_[s], w_);
    signs_[t] ^= (log_i >> 1) & 1;
}

void Tableau::row_swap(std::size_t a, std::size_t b) {
    for (std::size_t k = 0; k < w_; k++) {
        std::swap(x_row(a)[k], x_row(b)[k]);
        std::swap(z_row(a)[k], z_row(b)[k]);
    }
    std::swap(signs_[a], signs_[b]);
}

void Tableau::stab_mul(std::size_t i, std::size_t k) {
    if (i == k) {
        throw std::invalid_argument("stab_mul needs distinct rows.");
    }
    row_mul(q_ + i, q_ + k);
    row_mul(k, i);
}

void Tableau::stab_swap(std::size_t i, std::size_t k) {
    if (i == k) {
        return;
    }
    row_swap(q_ + i, q_ + k);
    row_swap(i, k);
}

void Tableau::apply(Gate g, std::size_t a, std::size_t b) {
    check_qubit(a);
    if (gate_is_two_qubit(g)) {
        check_qubit(b);
        if (a == b) {
            throw std::invalid_argument("Two-qubit gate needs distinct targets.");
        }
    }
    if (g == Gate::CZ) {
        apply(Gate::H, b);
        apply(Gate::CNOT, a, b);
        apply(Gate::H, b);
        return;
    }
    std::size_t wa = a / 64;
    int sa = a % 64;
    std::size_t wb = b / 64;
    int sb = b % 64;
    for (std::size_t r = 0; r < 2 * q_; r++) {
        uint64_t *xr = x_row(r);
        uint64_t *zr = z_row(r);
        uint8_t x = (xr[wa] >> sa) & 1;
        uint8_t z = (zr[wa] >> sa) & 1;
        uint8_t s = 0;
        uint8_t nx = x;
        uint8_t nz = z;
        switch (g) {
            case Gate::H:
                s = x & z;
                nx = z;
                nz = x;
                break;
            case Gate::P:
            case Gate::SQRT_Z_DAG:
                s = x & z;
                nz = z ^ x;
                break;
            case Gate::P_DAG:
            case Gate::SQRT_Z:
                s = x & (z ^ 1);
                nz = z ^ x;
                break;
            case Gate::X:
                s = z;
                break;
            case Gate::Y:
                s = x ^ z;
                break;
            case Gate::Z:
                s = x;
                break;
            case Gate::SQRT_X:
                s = x & z;
                nx = x ^ z;
                break;
            case Gate::SQRT_X_DAG:
                s = (x ^ 1) & z;
                nx = x ^ z;
                break;
            case Gate::CNOT: {
                uint8_t xt = (xr[wb] >> sb) & 1;
                uint8_t zt = (zr[wb] >> sb) & 1;
                signs_[r] ^= x & zt & (xt ^ z ^ 1);
                xr[wb] ^= (uint64_t)x << sb;
                zr[wa] ^= (uint64_t)zt << sa;
                continue;
            }
            case Gate::CZ:
                break;
        }
        signs_[r] ^= s;
        xr[wa] = (xr[wa] & ~(uint64_t{1} << sa)) | ((uint64_t)nx << sa);
        zr[wa] = (zr[wa] & ~(uint64_t{1} << sa)) | ((uint64_t)nz << sa);
    }
}

void Tableau::apply_pauli(const PauliString &p) {
    if (p.num_qubits != q_) {
        throw std::invalid_argument("Pauli size mismatch.");
    }
    // Conjugating by P flips exactly the rows that anticommute with it.
    for (std::size_t r = 0; r < 2 * q_; r++) {
        signs_[r] ^= pauli_anticommutes(x_row(r), z_row(r), p.xs.data(), p.zs.data(), w_);
    }
}

std::optional<bool> Tableau::peek(const PauliString &obs) const {
    if (obs.num_qubits != q_) {
        throw std::invalid_argument("Observable size mismatch.");
    }
    for (std::size_t i = 0; i < q_; i++) {
        if (pauli_anticommutes(x_row(q_ + i), z_row(q_ + i), obs.xs.data(), obs.zs.data(), w_)) {
            return std::nullopt;
        }
    }
    std::vector<uint64_t> sx(w_, 0);
    std::vector<uint64_t> sz(w_, 0);
    bool sign = false;
    for (std::size_t i = 0; i < q_; i++) {
        if (pauli_anticommutes(x_row(i), z_row(i), obs.xs.data(), obs.zs.data(), w_)) {
            uint8_t log_i = pauli_mul_log_i(sx.data(), sz.data(), x_row(q_ + i), z_row(q_ + i), signs_[q_ + i], w_);
            sign ^= (log_i >> 1) & 1;
        }
    }
    return sign ^ obs.sign;
}

std::optional<bool> Tableau::peek_z(std::size_t qubit) const {
    check_qubit(qubit);
    return peek(PauliString::single(q_, qubit, 'Z'));
}

bool Tableau::measure(const PauliString &obs, std::optional<bool> forced, std::mt19937_64 *rng) {
    if (obs.num_qubits != q_) {
        throw std::invalid_argument("Observable size mismatch.");
    }
    std::size_t p = q_;
    for (std::size_t i = 0; i < q_; i++) {
        if (pauli_anticommutes(x_row(q_ + i), z_row(q_ + i), obs.xs.data(), obs.zs.data(), w_)) {
            p = i;
            break;
        }
    }
    if (p == q_) {
        bool outcome = *peek(obs);
        if (forced.has_value() && *forced != outcome) {
            throw std::invalid_argument("Forced outcome contradicts a deterministic measurement.");
        }
        return outcome;
    }
    bool outcome = false;
    if (forced.has_value()) {
        outcome = *forced;
    } else if (rng != nullptr) {
        outcome = (*rng)() & 1;
    }
    for (std::size_t r = 0; r < 2 * q_; r++) {
        if (r == q_ + p || r == p) {
            continue;
        }
        if (pauli_anticommutes(x_row(r), z_row(r), obs.xs.data(), obs.zs.data(), w_)) {
            row_mul(r, q_ + p);
        }
    }
    for (std::size_t k = 0; k < w_; k++) {
        x_row(p)[k] = x_row(q_ + p)[k];
        z_row(p)[k] = z_row(q_ + p)[k];
    }
    signs_[p] = signs_[q_ + p];
    set_row(q_ + p, obs);
    signs_[q_ + p] = obs.sign ^ outcome;
    return outcome;
}

bool Tableau::measure_z(std::size_t qubit, std::optional<bool> forced, std::mt19937_64 *rng) {
    check_qubit(qubit);
    return measure(PauliString::single(q_, qubit, 'Z'), forced, rng);
}

void Tableau::reset(std::size_t qubit, std::mt19937_64 *rng) {
    if (measure_z(qubit, std::nullopt, rng)) {
        apply(Gate::X, qubit);
    }
}

void Tableau::canonicalize() {
    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * q_ && r < q_; c++) {
        bool is_x = c < q_;
        std::size_t qubit = is_x ? c : c - q_;
        auto has = [&](std::size_t i) {
            return is_x ? stab_x(i, qubit) : stab_z(i, qubit);
        };
        std::size_t pivot = q_;
        for (std::size_t i = r; i < q_; i++) {
            if (has(i)) {
                pivot = i;
                break;
            }
        }
        if (pivot == q_) {
            continue;
        }
        stab_swap(r, pivot);
        for (std::size_t i = 0; i < q_; i++) {
            if (i != r && has(i)) {
                stab_mul(i, r);
            }
        }
        r++;
    }
}

bool Tableau::is_consistent() const {
    for (std::size_t a = 0; a < 2 * q_; a++) {
        for (std::size_t b = a + 1; b < 2 * q_; b++) {
            bool anti = pauli_anticommutes(x_row(a), z_row(a), x_row(b), z_row(b), w_);
            bool expected = (a < q_) && (b == a + q_);
            if (anti != expected) {
                return false;
            }
        }
    }
    return true;
}

std::string Tableau::str() const {
    std::stringstream ss;
    for (std::size_t i = 0; i < q_; i++) {
        ss << stabilizer(i).str() << "\n";
    }
    return ss.str();
}

Tableau Tableau::from_stabilizers(const std::vector<PauliString> &stabilizers) {
    std::size_t q = stabilizers.size();
    if (q == 0) {
        throw std::invalid_argument("Need at least one stabilizer.");
    }
    for (const auto &s : stabilizers) {
        if (s.num_qubits != q) {
            throw std::invalid_argument("Stabilizer count must equal qubit count.");
        }
    }
    for (std::size_t a = 0; a < q; a++) {
        for (std::size_t b = a + 1; b < q; b++) {
            if (!stabilizers[a].commutes(stabilizers[b])) {
                throw std::invalid_argument("Stabilizers must commute.");
            }
        }
    }
    // Solve <C_a, S_b> = delta_ab. Row b of A is S_b with X/Z swapped so that
    // A * (cx, cz) computes the symplectic products.
    std::size_t w = (q + 63) / 64;
    std::vector<std::vector<uint64_t>> A(q, std::vector<uint64_t>(2 * w, 0));
    std::vector<std::vector<uint64_t>> E(q, std::vector<uint64_t>(w, 0));
    for (std::size_t b = 0; b < q; b++) {
        for (std::size_t k = 0; k < w; k++) {
            A[b][k] = stabilizers[b].zs[k];
            A[b][w + k] = stabilizers[b].xs[k];
        }
        E[b][b / 64] |= uint64_t{1} << (b % 64);
    }
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < 2 * q && r < q; c++) {
        std::size_t word = (c < q ? c / 64 : w + (c - q) / 64);
        uint64_t mask = uint64_t{1} << ((c < q ? c : c - q) % 64);
        std::size_t pivot = q;
        for (std::size_t i = r; i < q; i++) {
            if (A[i][word] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot == q) {
            continue;
        }
        std::swap(A[r], A[pivot]);
        std::swap(E[r], E[pivot]);
        for (std::size_t i = 0; i < q; i++) {
            if (i != r && (A[i][word] & mask)) {
                for (std::size_t k = 0; k < 2 * w; k++) {
                    A[i][k] ^= A[r][k];
                }
                for (std::size_t k = 0; k < w; k++) {
                    E[i][k] ^= E[r][k];
                }
            }
        }
        pivots.push_back(c);
        r++;
    }
    if (r < q) {
        throw std::invalid_argument("Stabilizers are not independent.");
    }
    std::vector<PauliString> C(q, PauliString(q));
    for (std::size_t a = 0; a < q; a++) {
        for (std::size_t row = 0; row < q; row++) {
            if ((E[row][a / 64] >> (a % 64)) & 1) {
                std::size_t c = pivots[row];
                if (c < q) {
                    C[a].xs[c / 64] ^= uint64_t{1} << (c % 64);
                } else {
                    C[a].zs[(c - q) / 64] ^= uint64_t{1} << ((c - q) % 64);
                }
            }
        }
    }
    // Symplectic Gram-Schmidt: D_a = C_a + sum_{b>a} <C_a, C_b> S_b.
    Tableau t(q);
    for (std::size_t a = 0; a < q; a++) {
        PauliString d = C[a];
        for (std::size_t b = a + 1; b < q; b++) {
            if (!C[a].commutes(C[b])) {
                for (std::size_t k = 0; k < w; k++) {
                    d.xs[k] ^= stabilizers[b].xs[k];
                    d.zs[k] ^= stabilizers[b].zs[k];
                }
            }
        }
        d.sign = false;
        t.set_row(a, d);
        t.set_row(q + a, stabilizers[a]);
    }
    if (!t.is_consistent()) {
        throw std::logic_error("Destabilizer construction failed.");
    }
    return t;
}

Tableau lcopt::tableau_from_graph(const Graph &g, std::size_t extra_zero_qubits) {
    std::size_t n = g.num_nodes();
    Tableau t(n + extra_zero_qubits);
    for (Node a = 0; a < n; a++) {
        // |G> = prod CZ |+>^n: start from |0>, apply H everywhere, then CZ on edges.
        t.apply(Gate::H, a);
    }
    for (auto [u, v] : g.edges()) {
        t.apply(Gate::CZ, u, v);
    }
    return t;
}

std::vector<PauliString> lcopt::canonical_stabilizers(const Tableau &t) {
    Tableau c = t;
    c.canonicalize();
    return c.stabilizers();
}

bool lcopt::states_equal(const Tableau &a, const Tableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("states_equal: qubit count mismatch.");
    }
    return canonical_stabilizers(a) == canonical_stabilizers(b);
}

double lcopt::state_overlap(const Tableau &a, const Tableau &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("state_overlap: qubit count mismatch.");
    }
    Tableau work = a;
    double overlap = 1.0;
    for (std::size_t i = 0; i < b.num_qubits(); i++) {
        PauliString s = b.stabilizer(i);
        auto det = work.peek(s);
        if (det.has_value()) {
            if (*det) {
                return 0.0;
            }
        } else {
            overlap *= 0.5;
            work.measure(s, false);
        }
    }
    return overlap;
}

std::vector<CliffordGate> lcopt::lc_unitary_gates(const Graph &g, Node v) {
    if (v >= g.num_nodes()) {
        throw std::out_of_range("lc_unitary_gates: node out of range.");
    }
    std::vector<CliffordGate> gates;
    gates.push_back({Gate::SQRT_X_DAG, (uint32_t)v});
    for (Node b : g.neighbors(v)) {
        gates.push_back({Gate::SQRT_Z, (uint32_t)b});
    }
    return gates;
}
