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

#include "lcopt/orbit.h"

#include <algorithm>
#include <bit>
#include <unordered_set>

using namespace lcopt;

namespace {

/// Packs the strict upper triangle row by row: pair (u, v), u < v, lands at
/// bit u*(2n-u-1)/2 + (v-u-1).
void pack_graph(const Graph &g, uint64_t *out, std::size_t words) {
    std::fill(out, out + words, 0);
    std::size_t n = g.num_nodes();
    std::size_t base = 0;
    for (Node u = 0; u < n; u++) {
        auto r = g.row(u);
        for (std::size_t k = (u + 1) / 64; k < r.size(); k++) {
            uint64_t w = r[k];
            if (k == (u + 1) / 64) {
                w &= ~uint64_t{0} << ((u + 1) % 64);
            }
            while (w) {
                Node v = k * 64 + std::countr_zero(w);
                w &= w - 1;
                std::size_t bit = base + (v - u - 1);
                out[bit / 64] |= uint64_t{1} << (bit % 64);
            }
        }
        base += n - u - 1;
    }
}

Graph unpack_graph(std::size_t n, const uint64_t *in) {
    Graph g(n);
    std::size_t base = 0;
    for (Node u = 0; u < n; u++) {
        for (Node v = u + 1; v < n; v++) {
            std::size_t bit = base + (v - u - 1);
            if ((in[bit / 64] >> (bit % 64)) & 1) {
                g.set_edge(u, v);
            }
        }
        base += n - u - 1;
    }
    return g;
}

}  // namespace

CompactOrbit CompactOrbit::explore(const Graph &seed, std::size_t cap) {
    if (cap == 0) {
        throw std::invalid_argument("Orbit cap must be positive.");
    }
    CompactOrbit orbit;
    std::size_t n = seed.num_nodes();
    std::size_t words = std::max<std::size_t>(1, (n * (n - 1) / 2 + 63) / 64);
    orbit.n_ = n;
    orbit.words_ = words;
    std::vector<uint64_t> &pool = orbit.pool_;

    auto hash = [&](uint32_t i) {
        const uint64_t *p = pool.data() + (std::size_t)i * words;
        uint64_t h = 0xcbf29ce484222325ULL;
        for (std::size_t k = 0; k < words; k++) {
            h ^= p[k];
            h *= 0x100000001b3ULL;
            h ^= h >> 29;
        }
        return (std::size_t)h;
    };
    auto equal = [&](uint32_t a, uint32_t b) {
        return std::equal(pool.data() + (std::size_t)a * words, pool.data() + (std::size_t)(a + 1) * words,
                          pool.data() + (std::size_t)b * words);
    };
    std::unordered_set<uint32_t, decltype(hash), decltype(equal)> seen(1024, hash, equal);

    pool.resize(words);
    pack_graph(seed, pool.data(), words);
    orbit.parent_.push_back(UINT32_MAX);
    orbit.via_.push_back(UINT32_MAX);
    seen.insert(0);

    for (std::size_t head = 0; head < orbit.parent_.size(); head++) {
        Graph g = unpack_graph(n, pool.data() + head * words);
        for (Node v = 0; v < n; v++) {
            if (g.degree(v) < 2) {
                continue;  // Local complementation at a leaf is the identity.
            }
            Graph h = local_complement(g, v);
            uint32_t idx = (uint32_t)orbit.parent_.size();
            pool.resize(pool.size() + words);
            pack_graph(h, pool.data() + (std::size_t)idx * words, words);
            if (seen.count(idx)) {
                pool.resize(pool.size() - words);
                continue;
            }
            if (orbit.parent_.size() >= cap) {
                throw OrbitCapExceeded("Orbit exceeds cap of " + std::to_string(cap) + " graphs.");
            }
            seen.insert(idx);
            orbit.parent_.push_back((uint32_t)head);
            orbit.via_.push_back((uint32_t)v);
        }
    }
    return orbit;
}

Graph CompactOrbit::graph(std::size_t i) const {
    return unpack_graph(n_, pool_.data() + i * words_);
}

std::size_t CompactOrbit::num_edges(std::size_t i) const {
    std::size_t e = 0;
    for (std::size_t k = 0; k < words_; k++) {
        e += std::popcount(pool_[i * words_ + k]);
    }
    return e;
}

LcSequence CompactOrbit::witness(std::size_t i) const {
    LcSequence seq;
    while (parent_[i] != UINT32_MAX) {
        seq.nodes.push_back(via_[i]);
        i = parent_[i];
    }
    std::reverse(seq.nodes.begin(), seq.nodes.end());
    return seq;
}

OrbitRecord CompactOrbit::record(std::size_t i) const {
    return {graph(i), witness(i), std::nullopt};
}

std::vector<OrbitRecord> lcopt::orbit_bfs(const Graph &seed, std::size_t cap) {
    CompactOrbit orbit = CompactOrbit::explore(seed, cap);
    std::vector<OrbitRecord> out;
    out.reserve(orbit.size());
    for (std::size_t i = 0; i < orbit.size(); i++) {
        out.push_back(orbit.record(i));
    }
    return out;
}

std::vector<OrbitRecord> lcopt::rgs_orbit_enumerate(std::size_t arms) {
    Graph g0 = make_rgs(arms);
    std::vector<Node> core;
    for (std::size_t a = 0; a < arms; a++) {
        core.push_back(2 * a + 1);
    }
    std::vector<OrbitRecord> orbit;
    orbit.push_back({g0, {}, std::nullopt});

    Node i = core.front();
    core.erase(core.begin());
    OrbitRecord g{local_complement(g0, i), {{i}}, std::nullopt};
    orbit.push_back(g);

    auto step = [](const OrbitRecord &from, Node v) {
        OrbitRecord r{local_complement(from.graph, v), from.lc_sequence, std::nullopt};
        r.lc_sequence.nodes.push_back(v);
        return r;
    };
    while (!core.empty()) {
        Node j = core.front();
        core.erase(core.begin());
        OrbitRecord g1 = step(g, j);
        orbit.push_back(g1);
        orbit.push_back(step(g1, i));
        if (!core.empty()) {
            Node k = core.front();
            core.erase(core.begin());
            OrbitRecord g3 = step(g1, k);
            orbit.push_back(g3);
            g = g3;
        }
    }
    return orbit;
}

LcSequence lcopt::rgs_correlated_sequence(std::size_t arms, std::size_t j) {
    if (arms < 2) {
        throw std::invalid_argument("RGS needs at least 2 arms.");
    }
    if (j > (arms - 1) / 2) {
        throw std::out_of_range(
            "Correlated step " + std::to_string(j) + " out of range for " + std::to_string(arms) + " arms.");
    }
    LcSequence seq;
    if (j == 0) {
        return seq;
    }
    for (Node v = 1; v <= 4 * j - 1; v += 2) {
        seq.nodes.push_back(v);
    }
    seq.nodes.push_back(1);
    return seq;
}

LcSequence lcopt::rgs_best_sequence(std::size_t arms) {
    if (arms < 2) {
        throw std::invalid_argument("RGS needs at least 2 arms.");
    }
    std::size_t n = 2 * arms;
    LcSequence seq;
    if (arms % 2 == 1) {
        for (Node v = 1; v <= n - 1; v += 2) {
            seq.nodes.push_back(v);
        }
    } else {
        for (Node v = 1; v <= n - 3; v += 2) {
            seq.nodes.push_back(v);
        }
        seq.nodes.push_back(n - 2);
    }
    return seq;
}

std::vector<OrbitRecord> lcopt::orbit_sample(const Graph &seed, std::size_t k, std::size_t walk_len,
                                             std::mt19937_64 &rng) {
    std::vector<OrbitRecord> out;
    std::unordered_set<Graph, GraphHash> seen;
    for (std::size_t s = 0; s < k; s++) {
        OrbitRecord r{seed, {}, std::nullopt};
        for (std::size_t step = 0; step < walk_len; step++) {
            std::vector<Node> movable;
            for (Node v = 0; v < r.graph.num_nodes(); v++) {
                if (r.graph.degree(v) >= 2) {
                    movable.push_back(v);
                }
            }
            if (movable.empty()) {
                break;
            }
            std::uniform_int_distribution<std::size_t> pick(0, movable.size() - 1);
            Node v = movable[pick(rng)];
            local_complement_inplace(r.graph, v);
            r.lc_sequence.nodes.push_back(v);
        }
        if (seen.insert(r.graph).second) {
            out.push_back(std::move(r));
        }
    }
    return out;
}
