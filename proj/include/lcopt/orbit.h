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

#ifndef LCOPT_ORBIT_H
#define LCOPT_ORBIT_H

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lcopt/circuit.h"
#include "lcopt/graph.h"

namespace lcopt {

struct OrbitCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A member of an LC orbit with the sequence that reaches it from the seed.
struct OrbitRecord {
    Graph graph{1};
    LcSequence lc_sequence;
    std::optional<CostReport> cost;
};

/// Breadth-first LC closure stored compactly (packed upper triangles plus a
/// parent pointer per member). Members are in discovery order; member 0 is
/// the seed.
class CompactOrbit {
   public:
    static CompactOrbit explore(const Graph &seed, std::size_t cap);

    std::size_t size() const {
        return parent_.size();
    }
    std::size_t num_nodes() const {
        return n_;
    }
    Graph graph(std::size_t i) const;
    std::size_t num_edges(std::size_t i) const;
    LcSequence witness(std::size_t i) const;
    OrbitRecord record(std::size_t i) const;

   private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<uint64_t> pool_;
    std::vector<uint32_t> parent_;
    std::vector<uint32_t> via_;
};

/// Every graph reachable from `seed` by local complementations, each with a
/// shortest witness. Throws OrbitCapExceeded beyond `cap` members.
std::vector<OrbitRecord> orbit_bfs(const Graph &seed, std::size_t cap);

/// The RGS orbit enumeration procedure over the core nodes 1, 3, ..., 2m-1.
std::vector<OrbitRecord> rgs_orbit_enumerate(std::size_t arms);

/// j = 0: empty; otherwise 1, 3, ..., 4j-1 followed by 1. Requires j <= (m-1)/2.
LcSequence rgs_correlated_sequence(std::size_t arms, std::size_t j);

/// Odd m: all core nodes 1..2m-1. Even m: 1..2m-3 then the leaf 2m-2.
LcSequence rgs_best_sequence(std::size_t arms);

/// `k` independent random LC walks of length `walk_len` from `seed`. Each step
/// complements a uniformly chosen node of degree >= 2. Output is deduplicated
/// in first-seen order.
std::vector<OrbitRecord> orbit_sample(const Graph &seed, std::size_t k, std::size_t walk_len, std::mt19937_64 &rng);

}  // namespace lcopt

#endif
