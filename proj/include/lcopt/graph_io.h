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

#ifndef LCOPT_GRAPH_IO_H
#define LCOPT_GRAPH_IO_H

#include <stdexcept>
#include <string>
#include <string_view>

#include "lcopt/graph.h"

namespace lcopt {

/// Thrown for malformed graph encodings.
struct GraphFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Standard graph6 encoding (no header).
std::string to_graph6(const Graph &g);
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
Graph from_graph6(std::string_view text);

/// {"n": int, "edges": [[u, v], ...]}
std::string to_edge_list_json(const Graph &g);
Graph from_edge_list_json(std::string_view text);

/// Decodes either format; edge-list documents are recognised by a leading '{'.
Graph parse_graph(std::string_view text);

}  // namespace lcopt

#endif
