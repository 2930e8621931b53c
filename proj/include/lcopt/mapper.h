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

#ifndef LCOPT_MAPPER_H
#define LCOPT_MAPPER_H

#include <cstddef>
#include <vector>

#include "lcopt/circuit.h"
#include "lcopt/graph.h"

namespace lcopt {

/// h[x] = GF(2) rank of the adjacency block between nodes {0..x-1} and {x..n-1}.
struct HeightProfile {
    std::vector<std::size_t> h;

    std::size_t max() const;
};

HeightProfile height_profile(const Graph &g);

/// Emitters used by `map_to_circuit`: the maximum height, raised so that an
/// isolated node always finds a spare emitter to be emitted from.
std::size_t required_emitters(const Graph &g);

struct MapperOptions {
    /// Re-simulate the produced circuit and throw if it does not build the graph.
    bool verify = true;
    /// When absorbing a photon, also consider the product of the two reduced
    /// generators that start at it and keep whichever touches fewest emitters.
    /// Off: always take the lowest-index reduced generator.
    bool gauge_search = true;
};

/// Deterministic reverse-construction synthesis of a generating circuit for
/// |G>, with photons emitted in label order.
Circuit map_to_circuit(const Graph &g, const MapperOptions &options = {});

/// Simulates `c`, checks every emitter ends disentangled in a Z eigenstate,
/// and compares the photon state with |G>.
bool verify_circuit(const Circuit &c, const Graph &g);

}  // namespace lcopt

#endif
