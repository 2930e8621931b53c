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

#include "lcopt/classes.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

using namespace lcopt;

namespace {

struct PairIndex {
    std::size_t n;
    std::size_t m;
    uint8_t bit_of[CLASS_ENUMERATION_MAX_NODES][CLASS_ENUMERATION_MAX_NODES];

    explicit PairIndex(std::size_t n_) : n(n_), m(n_ * (n_ - 1) / 2), bit_of{} {
        std::size_t k = 0;
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = a + 1; b < n; b++) {
                bit_of[a][b] = bit_of[b][a] = (uint8_t)(m - 1 - k);
                k++;
            }
        }
    }

    void to_masks(uint32_t code, uint32_t *adj) const {
        std::fill(adj, adj + n, 0);
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = a + 1; b < n; b++) {
                if ((code >> bit_of[a][b]) & 1) {
                    adj[a] |= 1u << b;
                    adj[b] |= 1u << a;
                }
            }
        }
    }

    uint32_t from_masks(const uint32_t *adj) const {
        uint32_t code = 0;
        for (std::size_t a = 0; a < n; a++) {
            for (std::size_t b = a + 1; b < n; b++) {
                if ((adj[a] >> b) & 1) {
                    code |= 1u << bit_of[a][b];
                }
            }
        }
        return code;
    }
};

bool masks_connected(std::size_t n, const uint32_t *adj) {
    uint32_t seen = 1;
    uint32_t frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (uint32_t f = frontier; f; f &= f - 1) {
            next |= adj[std::countr_zero(f)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

std::size_t find_root(std::vector<std::size_t> &parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

ClassTable lcopt::build_class_table(std::size_t n) {
    if (n < 2 || n > CLASS_ENUMERATION_MAX_NODES) {
        throw std::invalid_argument(
            "Class enumeration supports 2.." + std::to_string(CLASS_ENUMERATION_MAX_NODES) + " nodes.");
    }
    PairIndex pairs(n);
    std::size_t m = pairs.m;
    uint32_t total = 1u << m;

    // Bit maps induced by each relabeling.
    std::vector<std::vector<uint8_t>> bit_maps;
    {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<uint8_t> map(m);
            for (std::size_t a = 0; a < n; a++) {
                for (std::size_t b = a + 1; b < n; b++) {
                    map[pairs.bit_of[a][b]] = pairs.bit_of[perm[a]][perm[b]];
                }
            }
            bit_maps.push_back(std::move(map));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    // The first code met for an isomorphism class is its minimal (canonical) code.
    std::vector<uint16_t> iso_of(total, ClassTable::NONE);
    std::vector<uint32_t> rep_code;
    std::vector<std::size_t> rep_labeled;
    uint32_t adj[CLASS_ENUMERATION_MAX_NODES];
    for (uint32_t code = 0; code < total; code++) {
        if (iso_of[code] != ClassTable::NONE) {
            continue;
        }
        pairs.to_masks(code, adj);
        if (!masks_connected(n, adj)) {
            continue;
        }
        uint16_t id = (uint16_t)rep_code.size();
        std::size_t distinct = 0;
        for (const auto &map : bit_maps) {
            uint32_t img = 0;
            for (uint32_t c = code; c; c &= c - 1) {
                img |= 1u << map[std::countr_zero(c)];
            }
            if (iso_of[img] == ClassTable::NONE) {
                iso_of[img] = id;
                distinct++;
            }
        }
        rep_code.push_back(code);
        rep_labeled.push_back(distinct);
    }

    std::size_t reps = rep_code.size();
    std::vector<std::size_t> parent(reps);
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t r = 0; r < reps; r++) {
        pairs.to_masks(rep_code[r], adj);
        for (std::size_t v = 0; v < n; v++) {
            if (std::popcount(adj[v]) < 2) {
                continue;
            }
            uint32_t lc[CLASS_ENUMERATION_MAX_NODES];
            std::copy(adj, adj + n, lc);
            uint32_t nv = adj[v];
            for (uint32_t f = nv; f; f &= f - 1) {
                std::size_t u = std::countr_zero(f);
                lc[u] ^= nv & ~(1u << u);
            }
            std::size_t other = iso_of[pairs.from_masks(lc)];
            std::size_t a = find_root(parent, r);
            std::size_t b = find_root(parent, other);
            if (a != b) {
                parent[std::max(a, b)] = std::min(a, b);
            }
        }
    }

    ClassTable table;
    table.n = n;
    std::vector<uint16_t> class_of_rep(reps);
    std::vector<int> class_of_root(reps, -1);
    std::vector<uint32_t> best_code;
    for (std::size_t r = 0; r < reps; r++) {
        std::size_t root = find_root(parent, r);
        if (class_of_root[root] < 0) {
            class_of_root[root] = (int)table.classes.size();
            EntanglementClass c;
            c.n = n;
            table.classes.push_back(c);
            best_code.push_back(rep_code[r]);
        }
        std::size_t cid = (std::size_t)class_of_root[root];
        class_of_rep[r] = (uint16_t)cid;
        EntanglementClass &c = table.classes[cid];
        c.labeled_count += rep_labeled[r];
        c.unlabeled_count++;
        uint32_t cur = best_code[cid];
        int pc = std::popcount(rep_code[r]);
        int pb = std::popcount(cur);
        if (pc < pb || (pc == pb && rep_code[r] < cur)) {
            best_code[cid] = rep_code[r];
        }
        table.labeled_connected += rep_labeled[r];
    }
    for (std::size_t cid = 0; cid < table.classes.size(); cid++) {
        table.classes[cid].representative = graph_from_adjacency_code(n, best_code[cid]);
    }
    table.class_of_code.assign(total, ClassTable::NONE);
    for (uint32_t code = 0; code < total; code++) {
        if (iso_of[code] != ClassTable::NONE) {
            table.class_of_code[code] = class_of_rep[iso_of[code]];
        }
    }
    return table;
}

ClassCensus lcopt::entanglement_classes(std::size_t n_max) {
    if (n_max > CLASS_ENUMERATION_MAX_NODES) {
        throw std::invalid_argument(
            "entanglement_classes supports n_max <= " + std::to_string(CLASS_ENUMERATION_MAX_NODES) + ".");
    }
    ClassCensus census;
    for (std::size_t n = 2; n <= n_max; n++) {
        ClassTable t = build_class_table(n);
        census.labeled_connected_total += t.labeled_connected;
        for (auto &c : t.classes) {
            census.classes.push_back(std::move(c));
        }
    }
    return census;
}
