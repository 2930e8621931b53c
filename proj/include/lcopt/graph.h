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

#ifndef LCOPT_GRAPH_H
#define LCOPT_GRAPH_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcopt {

using Node = std::size_t;

/// Simple undirected labeled graph stored as packed GF(2) adjacency rows.
///
/// Node labels double as photon emission order: node 0 is emitted first.
/// Reorderings are expressed as relabelings (see `relabeled`), never as a
/// separate field.
class Graph {
   public:
    static constexpr std::size_t MAX_NODES = 4096;

    explicit Graph(std::size_t num_nodes);
    static Graph from_edges(std::size_t num_nodes, std::span<const std::pair<Node, Node>> edges);
    static Graph complete(std::size_t num_nodes);
    static Graph path(std::size_t num_nodes);
    static Graph star(std::size_t num_nodes, Node center = 0);

    std::size_t num_nodes() const {
        return n_;
    }
    std::size_t num_words() const {
        return words_;
    }
    bool has_edge(Node u, Node v) const;
    void set_edge(Node u, Node v, bool present = true);
    void toggle_edge(Node u, Node v);

    std::size_t degree(Node v) const;
    std::size_t num_edges() const;
    std::vector<Node> neighbors(Node v) const;
    std::vector<std::pair<Node, Node>> edges() const;

    /// Packed adjacency row of `v` (bit u of word u/64 set iff u~v).
    std::span<const uint64_t> row(Node v) const {
        return {adj_.data() + v * words_, words_};
    }

    /// Returns the graph whose node `new_label[v]` plays the role of node `v`.
    Graph relabeled(std::span<const Node> new_label) const;

    bool operator==(const Graph &other) const = default;
    std::size_t hash() const;
    std::string str() const;

   private:
    std::span<uint64_t> mutable_row(Node v) {
        return {adj_.data() + v * words_, words_};
    }
    void check_node(Node v) const;

    std::size_t n_;
    std::size_t words_;
    std::vector<uint64_t> adj_;

    friend Graph local_complement(const Graph &g, Node v);
    friend void local_complement_inplace(Graph &g, Node v);
};

struct GraphHash {
    std::size_t operator()(const Graph &g) const {
        return g.hash();
    }
};

/// Ordered list of nodes to locally complement, first element applied first.
struct LcSequence {
    std::vector<Node> nodes;

    bool operator==(const LcSequence &other) const = default;
    auto operator<=>(const LcSequence &other) const = default;
    std::string str() const;
};

/// Exact ratio used for clustering coefficients so ties compare exactly.
struct Fraction {
    std::size_t num = 0;
    std::size_t den = 1;

    double value() const {
        return den == 0 ? 0.0 : (double)num / (double)den;
    }
    bool operator==(const Fraction &other) const {
        return num * other.den == other.num * den;
    }
    bool operator<(const Fraction &other) const {
        return num * other.den < other.num * den;
    }
};

/// Complements the subgraph induced on the neighborhood of `v`.
Graph local_complement(const Graph &g, Node v);
void local_complement_inplace(Graph &g, Node v);
Graph apply_lc_sequence(const Graph &g, const LcSequence &seq);

/// Repeater graph state with `arms` arms: odd nodes form a complete core and
/// leaf 2k hangs off core 2k+1.
Graph make_rgs(std::size_t arms);

/// G(n, p) random graph. Deterministic for a fixed seed.
Graph erdos_renyi(std::size_t n, double p, uint64_t seed);

/// Edges inside N(v) over C(deg(v), 2); zero when deg(v) <= 1.
Fraction clustering_coefficient(const Graph &g, Node v);

bool is_connected(const Graph &g);

/// Maximum node count accepted by `canonical_label` (all n! relabelings).
constexpr std::size_t CANONICAL_LABEL_MAX_NODES = 8;

/// Upper-triangle adjacency bits in row-major pair order (0,1),(0,2),...,(n-2,n-1);
/// pair (0,1) is the most significant bit. Requires n <= 11.
uint64_t adjacency_code(const Graph &g);
Graph graph_from_adjacency_code(std::size_t n, uint64_t code);

/// Lexicographically minimal adjacency code over all relabelings.
uint64_t canonical_code(const Graph &g);

/// Byte key: node count followed by the big-endian canonical code.
/// Equal keys iff the graphs are isomorphic.
std::string canonical_label(const Graph &g);

}  // namespace lcopt

#endif
