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

#ifndef LCOPT_CLASSES_H
#define LCOPT_CLASSES_H

#include <cstdint>
#include <vector>

#include "lcopt/graph.h"

namespace lcopt {

constexpr std::size_t CLASS_ENUMERATION_MAX_NODES = 7;

/// One entanglement class: LC orbits merged under relabeling.
struct EntanglementClass {
    std::size_t n = 0;
    /// Member with the fewest edges (ties: smallest canonical code).
    Graph representative{1};
    /// Labeled connected graphs in the class.
    std::size_t labeled_count = 0;
    /// Isomorphism classes in the class.
    std::size_t unlabeled_count = 0;
};

/// Classification of every labeled connected graph on exactly n nodes.
struct ClassTable {
    std::size_t n = 0;
    static constexpr uint16_t NONE = 0xFFFF;
    /// Indexed by adjacency_code; NONE for disconnected graphs.
    std::vector<uint16_t> class_of_code;
    std::vector<EntanglementClass> classes;
    std::size_t labeled_connected = 0;
};

ClassTable build_class_table(std::size_t n);

struct ClassCensus {
    std::vector<EntanglementClass> classes;
    std::size_t labeled_connected_total = 0;
};

/// All entanglement classes of connected graphs with 2..n_max nodes.
ClassCensus entanglement_classes(std::size_t n_max);

}  // namespace lcopt

#endif
