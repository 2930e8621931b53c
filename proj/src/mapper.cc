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

#include "lcopt/mapper.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

using namespace lcopt;

std::size_t HeightProfile::max() const {
    return h.empty() ? 0 : *std::max_element(h.begin(), h.end());
}

namespace {

/// Rank of a set of packed GF(2) rows via an XOR basis keyed by leading bit.
std::size_t gf2_rank(std::vector<std::vector<uint64_t>> rows) {
    std::size_t rank = 0;
    std::size_t words = rows.empty() ? 0 : rows[0].size();
    for (std::size_t k = 0; k < words; k++) {
        for (int bit = 0; bit < 64; bit++) {
            uint64_t mask = uint64_t{1} << bit;
            std::size_t pivot = rank;
            while (pivot < rows.size() && !(rows[pivot][k] & mask)) {
                pivot++;
            }
            if (pivot == rows.size()) {
                continue;
            }
            std::swap(rows[rank], rows[pivot]);
            for (std::size_t i = rank + 1; i < rows.size(); i++) {
                if (rows[i][k] & mask) {
                    for (std::size_t j = k; j < words; j++) {
                        rows[i][j] ^= rows[rank][j];
                    }
                }
            }
            rank++;
        }
    }
    return rank;
}

}  // namespace

HeightProfile lcopt::height_profile(const Graph &g) {
    std::size_t n = g.num_nodes();
    std::size_t words = g.num_words();
    HeightProfile p;
    p.h.assign(n + 1, 0);
    for (std::size_t x = 1; x < n; x++) {
        std::vector<std::vector<uint64_t>> rows;
        rows.reserve(x);
        for (Node u = 0; u < x; u++) {
            auto r = g.row(u);
            std::vector<uint64_t> masked(r.begin(), r.end());
            // Keep columns >= x only.
            for (std::size_t k = 0; k < words; k++) {
                std::size_t lo = k * 64;
                if (lo + 64 <= x) {
                    masked[k] = 0;
                } else if (lo < x) {
                    masked[k] &= ~uint64_t{0} << (x - lo);
                }
            }
            rows.push_back(std::move(masked));
        }
        p.h[x] = gf2_rank(std::move(rows));
    }
    return p;
}

std::size_t lcopt::required_emitters(const Graph &g) {
    HeightProfile p = height_profile(g);
    std::size_t k = std::max<std::size_t>(1, p.max());
    for (Node v = 0; v < g.num_nodes(); v++) {
        if (g.degree(v) == 0) {
            k = std::max(k, p.h[v] + 1);
        }
    }
    return k;
}

namespace {

/// One step recorded in reverse time.
struct ReverseOp {
    enum Kind { Gate1, Cnot, Absorb, TimeReversedMeasure } kind;
    Gate gate = Gate::H;
    uint32_t a = 0;  // qubit (Gate1) / control emitter / emitter
    uint32_t b = 0;  // target emitter / photon
    std::vector<PauliTerm> correction;
};

class ReverseBuilder {
   public:
    ReverseBuilder(const Graph &g, std::size_t emitters, bool gauge_search)
        : n_(g.num_nodes()), k_(emitters), gauge_search_(gauge_search), t_(tableau_from_graph(g, emitters)) {
    }

    Circuit run() {
        for (std::size_t jj = n_; jj-- > 0;) {
            absorb_photon((uint32_t)jj);
            free_emitters((uint32_t)jj);
        }
        free_emitters(0);
        for (uint32_t e = 0; e < k_; e++) {
            auto z = t_.peek_z(eq(e));
            if (!z.has_value()) {
                throw std::logic_error("mapper: emitter still entangled after the final reduction.");
            }
            if (*z) {
                gate1(Gate::X, eq(e));
            }
        }
        return to_forward();
    }

   private:
    uint32_t eq(uint32_t e) const {
        return (uint32_t)(n_ + e);
    }

    void gate1(Gate g, uint32_t qubit) {
        t_.apply(g, qubit);
        rev_.push_back({ReverseOp::Gate1, g, qubit, 0, {}});
    }

    void cnot_ee(uint32_t c, uint32_t t) {
        t_.apply(Gate::CNOT, eq(c), eq(t));
        rev_.push_back({ReverseOp::Cnot, Gate::CNOT, c, t, {}});
    }

    /// Rotates the factor `p` on `qubit` to Z.
    void rotate_to_z(char p, uint32_t qubit) {
        if (p == 'X') {
            gate1(Gate::H, qubit);
        } else if (p == 'Y') {
            gate1(Gate::SQRT_X_DAG, qubit);
        }
    }

    /// Full row reduction. Column order: z of absorbed photons (> live),
    /// then x/z of photons 0..live-1 ascending, then x/z of each emitter.
    /// Returns the pivot column id of every stabilizer row (or SIZE_MAX).
    /// Column ids: 2*q + (0 for x, 1 for z).
    std::vector<std::size_t> reduce(std::size_t live) {
        std::vector<std::size_t> order;
        for (std::size_t p = live; p < n_; p++) {
            order.push_back(2 * p + 1);
        }
        for (std::size_t p = 0; p < live; p++) {
            order.push_back(2 * p);
            order.push_back(2 * p + 1);
        }
        for (std::size_t e = 0; e < k_; e++) {
            order.push_back(2 * (n_ + e));
            order.push_back(2 * (n_ + e) + 1);
        }
        std::size_t q = t_.num_qubits();
        std::vector<std::size_t> pivot_of(q, SIZE_MAX);
        std::size_t r = 0;
        for (std::size_t col : order) {
            if (r == q) {
                break;
            }
            std::size_t qubit = col / 2;
            bool is_z = col & 1;
            auto has = [&](std::size_t i) {
                return is_z ? t_.stab_z(i, qubit) : t_.stab_x(i, qubit);
            };
            std::size_t pivot = q;
            for (std::size_t i = r; i < q; i++) {
                if (has(i)) {
                    pivot = i;
                    break;
                }
            }
            if (pivot == q) {
                continue;
            }
            t_.stab_swap(r, pivot);
            for (std::size_t i = 0; i < q; i++) {
                if (i != r && has(i)) {
                    t_.stab_mul(i, r);
                }
            }
            pivot_of[r] = col;
            r++;
        }
        return pivot_of;
    }

    std::vector<uint32_t> emitter_support(const PauliString &p) const {
        std::vector<uint32_t> out;
        for (uint32_t e = 0; e < k_; e++) {
            if (p.at(eq(e)) != 'I') {
                out.push_back(e);
            }
        }
        return out;
    }

    uint32_t lowest_free_emitter() const {
        for (uint32_t e = 0; e < k_; e++) {
            if (t_.peek_z(eq(e)).has_value()) {
                return e;
            }
        }
        throw std::logic_error("mapper: no free emitter available.");
    }

    /// Makes a free emitter hold +Z.
    void normalize_free(uint32_t e) {
        if (*t_.peek_z(eq(e))) {
            gate1(Gate::X, eq(e));
        }
    }

    void time_reversed_measurement(uint32_t j) {
        std::size_t q = t_.num_qubits();
        reduce(j + 1);
        // gamma: generator touching photon j with the fewest live photons.
        std::size_t best = q;
        std::size_t best_weight = SIZE_MAX;
        for (std::size_t i = 0; i < q; i++) {
            if (!t_.stab_x(i, j) && !t_.stab_z(i, j)) {
                continue;
            }
            std::size_t w = 0;
            for (uint32_t p = 0; p <= j; p++) {
                w += t_.stab_pauli(i, p) != 'I';
            }
            if (w < best_weight) {
                best_weight = w;
                best = i;
            }
        }
        if (best == q) {
            throw std::logic_error("mapper: photon is not entangled with anything.");
        }
        rotate_to_z(t_.stab_pauli(best, j), j);
        uint32_t e = lowest_free_emitter();
        normalize_free(e);
        PauliString g = t_.stabilizer(best);
        g.set(j, 'I');
        // Strip Z factors on qubits with a definite Z value (absorbed photons, free emitters).
        for (uint32_t qubit = 0; qubit < q; qubit++) {
            if (g.at(qubit) == 'Z') {
                auto z = t_.peek_z(qubit);
                if (!z.has_value()) {
                    continue;
                }
                g.set(qubit, 'I');
                g.sign ^= *z;
            }
        }
        if (g.at(eq(e)) != 'I') {
            throw std::logic_error("mapper: correction touches the measured emitter.");
        }
        PauliString obs = g;
        obs.set(eq(e), 'X');
        if (t_.peek(obs).has_value()) {
            throw std::logic_error("mapper: time-reversed measurement is not random.");
        }
        t_.measure(obs, false);
        ReverseOp op{ReverseOp::TimeReversedMeasure, Gate::H, e, 0, {}};
        for (uint32_t qubit = 0; qubit < q; qubit++) {
            char c = g.at(qubit);
            if (c != 'I') {
                op.correction.push_back({qubit, c});
            }
        }
        rev_.push_back(std::move(op));
        gate1(Gate::H, eq(e));
    }

    void absorb_photon(uint32_t j) {
        std::size_t q = t_.num_qubits();
        for (int attempt = 0; attempt < 2; attempt++) {
            auto pivots = reduce(j + 1);
            std::vector<std::size_t> cands;
            for (std::size_t i = 0; i < q; i++) {
                if (pivots[i] == 2 * (std::size_t)j || pivots[i] == 2 * (std::size_t)j + 1) {
                    cands.push_back(i);
                }
            }
            if (cands.empty()) {
                if (attempt == 1) {
                    throw std::logic_error("mapper: time-reversed measurement did not expose the photon.");
                }
                time_reversed_measurement(j);
                continue;
            }
            std::vector<PauliString> options;
            for (std::size_t i : cands) {
                options.push_back(t_.stabilizer(i));
            }
            if (gauge_search_ && options.size() == 2) {
                PauliString prod = options[0];
                prod *= options[1];
                options.push_back(prod);
            }
            std::size_t pick = 0;
            for (std::size_t o = 1; gauge_search_ && o < options.size(); o++) {
                if (emitter_support(options[o]).size() < emitter_support(options[pick]).size()) {
                    pick = o;
                }
            }
            const PauliString &chosen = options[pick];
            auto support = emitter_support(chosen);
            rotate_to_z(chosen.at(j), j);
            uint32_t target;
            if (support.empty()) {
                // Product-state photon: emit it from a spare emitter.
                target = lowest_free_emitter();
                normalize_free(target);
            } else {
                for (uint32_t e : support) {
                    rotate_to_z(chosen.at(eq(e)), eq(e));
                }
                target = support[0];
                for (std::size_t s = 1; s < support.size(); s++) {
                    cnot_ee(support[s], target);
                }
                PauliString zz(q);
                zz.set(j, 'Z');
                zz.set(eq(target), 'Z');
                auto v = t_.peek(zz);
                if (!v.has_value()) {
                    throw std::logic_error("mapper: absorption generator lost.");
                }
                if (*v) {
                    gate1(Gate::X, j);
                }
            }
            t_.apply(Gate::CNOT, eq(target), j);
            rev_.push_back({ReverseOp::Absorb, Gate::CNOT, target, j, {}});
            auto zj = t_.peek_z(j);
            if (!zj.has_value() || *zj) {
                throw std::logic_error("mapper: photon not returned to |0>.");
            }
            return;
        }
    }

    /// Disentangles emitters while the emitter-only subgroup is larger than
    /// the set of already-free emitters.
    void free_emitters(std::size_t live) {
        std::size_t q = t_.num_qubits();
        while (true) {
            auto pivots = reduce(live);
            std::size_t best = q;
            std::size_t best_weight = SIZE_MAX;
            for (std::size_t i = 0; i < q; i++) {
                if (pivots[i] == SIZE_MAX || pivots[i] / 2 < n_) {
                    continue;
                }
                PauliString row = t_.stabilizer(i);
                std::size_t w = emitter_support(row).size();
                if (w == 1 && row.at(pivots[i] / 2) == 'Z') {
                    continue;  // Already a free emitter.
                }
                if (w < best_weight) {
                    best_weight = w;
                    best = i;
                }
            }
            if (best == q) {
                return;
            }
            PauliString row = t_.stabilizer(best);
            auto support = emitter_support(row);
            for (uint32_t e : support) {
                rotate_to_z(row.at(eq(e)), eq(e));
            }
            uint32_t target = support[0];
            for (std::size_t s = 1; s < support.size(); s++) {
                cnot_ee(support[s], target);
            }
            normalize_free(target);
        }
    }

    Circuit to_forward() const {
        Circuit c;
        c.n_photons = n_;
        c.n_emitters = k_;
        for (auto it = rev_.rbegin(); it != rev_.rend(); ++it) {
            switch (it->kind) {
                case ReverseOp::Gate1:
                    c.ops.push_back(Op::u1(gate_inverse(it->gate), it->a));
                    break;
                case ReverseOp::Cnot:
                    c.ops.push_back(Op::cnot(it->a, it->b));
                    break;
                case ReverseOp::Absorb:
                    c.ops.push_back(Op::emission(it->a, it->b));
                    break;
                case ReverseOp::TimeReversedMeasure:
                    c.ops.push_back(Op::measure(it->a, it->correction));
                    c.ops.push_back(Op::reset(it->a));
                    break;
            }
        }
        return c;
    }

    std::size_t n_;
    std::size_t k_;
    bool gauge_search_;
    Tableau t_;
    std::vector<ReverseOp> rev_;
};

}  // namespace

Circuit lcopt::map_to_circuit(const Graph &g, const MapperOptions &options) {
    ReverseBuilder builder(g, required_emitters(g), options.gauge_search);
    Circuit c = builder.run();
    if (options.verify && !verify_circuit(c, g)) {
        throw std::logic_error("mapper: produced circuit failed verification for " + g.str());
    }
    return c;
}

bool lcopt::verify_circuit(const Circuit &c, const Graph &g) {
    if (c.n_photons != g.num_nodes()) {
        throw std::invalid_argument("verify_circuit: photon count does not match the graph.");
    }
    Tableau t = simulate_forward(c);
    for (uint32_t e = 0; e < c.n_emitters; e++) {
        auto z = t.peek_z(c.emitter_qubit(e));
        if (!z.has_value()) {
            return false;
        }
        if (*z) {
            t.apply(Gate::X, c.emitter_qubit(e));
        }
    }
    return states_equal(t, tableau_from_graph(g, c.n_emitters));
}
