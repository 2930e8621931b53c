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

#ifndef LCOPT_PAULI_STRING_H
#define LCOPT_PAULI_STRING_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lcopt {

/// Multiplies the Pauli (lx, lz) in place by (rx, rz) on the right, over `words` words.
///
/// Returns the exponent k (mod 4) of the scalar i^k picked up by the product,
/// including the sign of the right hand side. The caller folds bit 1 into its
/// own sign when the operands commute.
inline uint8_t pauli_mul_log_i(uint64_t *lx, uint64_t *lz, const uint64_t *rx, const uint64_t *rz, bool rsign,
                               std::size_t words) {
    uint64_t cnt1 = 0;
    uint64_t cnt2 = 0;
    for (std::size_t k = 0; k < words; k++) {
        uint64_t old_x1 = lx[k];
        uint64_t old_z1 = lz[k];
        uint64_t x2 = rx[k];
        uint64_t z2 = rz[k];
        uint64_t x1 = old_x1 ^ x2;
        uint64_t z1 = old_z1 ^ z2;
        lx[k] = x1;
        lz[k] = z1;
        uint64_t x1z2 = old_x1 & z2;
        uint64_t anti = (x2 & old_z1) ^ x1z2;
        cnt2 ^= (cnt1 ^ x1 ^ z1 ^ x1z2) & anti;
        cnt1 ^= anti;
    }
    uint8_t s = (uint8_t)std::popcount(cnt1);
    s ^= (uint8_t)(std::popcount(cnt2) << 1);
    s ^= (uint8_t)rsign << 1;
    return s & 3;
}

/// Symplectic inner product parity of two packed Paulis.
inline bool pauli_anticommutes(const uint64_t *ax, const uint64_t *az, const uint64_t *bx, const uint64_t *bz,
                               std::size_t words) {
    uint64_t acc = 0;
    for (std::size_t k = 0; k < words; k++) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return std::popcount(acc) & 1;
}

/// Hermitian Pauli product with a sign bit. Qubit q uses bit q%64 of word q/64.
struct PauliString {
    std::size_t num_qubits = 0;
    bool sign = false;
    std::vector<uint64_t> xs;
    std::vector<uint64_t> zs;

    PauliString() = default;
    explicit PauliString(std::size_t n);

    /// Parses "+XZ_I", "-XYZ" or "XYZ" ('_' and 'I' are identity).
    static PauliString from_str(std::string_view text);
    /// Single-qubit Pauli `p` in {'X','Y','Z'} on qubit q of an n-qubit register.
    static PauliString single(std::size_t n, std::size_t q, char p);

    std::size_t num_words() const {
        return xs.size();
    }
    bool x(std::size_t q) const {
        return (xs[q / 64] >> (q % 64)) & 1;
    }
    bool z(std::size_t q) const {
        return (zs[q / 64] >> (q % 64)) & 1;
    }
    /// 'I', 'X', 'Y' or 'Z'.
    char at(std::size_t q) const;
    void set(std::size_t q, char p);

    bool commutes(const PauliString &other) const;
    std::size_t weight() const;
    bool is_identity() const;

    /// Right-multiplies by a commuting Pauli; throws if they anticommute.
    PauliString &operator*=(const PauliString &rhs);

    bool operator==(const PauliString &other) const = default;
    std::string str() const;
};

}  // namespace lcopt

#endif
