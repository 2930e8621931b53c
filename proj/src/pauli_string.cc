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

#include "lcopt/pauli_string.h"

#include <stdexcept>

using namespace lcopt;

PauliString::PauliString(std::size_t n) : num_qubits(n), sign(false), xs((n + 63) / 64, 0), zs((n + 63) / 64, 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    bool sign = false;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign = text[0] == '-';
        text.remove_prefix(1);
    }
    PauliString result(text.size());
    result.sign = sign;
    for (std::size_t q = 0; q < text.size(); q++) {
        char c = text[q];
        if (c == '_' || c == 'I') {
            continue;
        }
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("Bad Pauli character '" + std::string(1, c) + "'.");
        }
        result.set(q, c);
    }
    return result;
}

PauliString PauliString::single(std::size_t n, std::size_t q, char p) {
    PauliString result(n);
    result.set(q, p);
    return result;
}

char PauliString::at(std::size_t q) const {
    static constexpr char table[4] = {'I', 'X', 'Z', 'Y'};
    return table[(int)x(q) | ((int)z(q) << 1)];
}

void PauliString::set(std::size_t q, char p) {
    if (q >= num_qubits) {
        throw std::out_of_range("Pauli qubit index out of range.");
    }
    bool bx = p == 'X' || p == 'Y';
    bool bz = p == 'Z' || p == 'Y';
    uint64_t m = uint64_t{1} << (q % 64);
    xs[q / 64] = bx ? (xs[q / 64] | m) : (xs[q / 64] & ~m);
    zs[q / 64] = bz ? (zs[q / 64] | m) : (zs[q / 64] & ~m);
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits != num_qubits) {
        throw std::invalid_argument("Pauli size mismatch.");
    }
    return !pauli_anticommutes(xs.data(), zs.data(), other.xs.data(), other.zs.data(), xs.size());
}

std::size_t PauliString::weight() const {
    std::size_t w = 0;
    for (std::size_t k = 0; k < xs.size(); k++) {
        w += std::popcount(xs[k] | zs[k]);
    }
    return w;
}

bool PauliString::is_identity() const {
    for (std::size_t k = 0; k < xs.size(); k++) {
        if (xs[k] | zs[k]) {
            return false;
        }
    }
    return true;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
    if (rhs.num_qubits != num_qubits) {
        throw std::invalid_argument("Pauli size mismatch.");
    }
    uint8_t log_i = pauli_mul_log_i(xs.data(), zs.data(), rhs.xs.data(), rhs.zs.data(), rhs.sign, xs.size());
    if (log_i & 1) {
        throw std::invalid_argument("Product of anticommuting Paulis is not Hermitian.");
    }
    sign ^= (log_i & 2) != 0;
    return *this;
}

std::string PauliString::str() const {
    std::string out(1, sign ? '-' : '+');
    for (std::size_t q = 0; q < num_qubits; q++) {
        out.push_back(at(q));
    }
    return out;
}
