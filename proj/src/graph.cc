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

#include "lcopt/graph.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

using namespace lcopt;

namespace {

std::size_t words_for(std::size_t n) {
    return (n + 63) / 64;
}

}  // namespace

Graph::Graph(std::size_t num_nodes) : n_(num_nodes), words_(words_for(num_nodes)), adj_(num_nodes * words_, 0) {
    if (num_nodes == 0 || num_nodes > MAX_NODES) {
        throw std::invalid_argument("Graph node count must be in [1, " + std::to_string(MAX_NODES) + "].");
    }
}

Graph Graph::from_edges(std::size_t num_nodes, std::span<const std::pair<Node, Node>> edges) {
    Graph g(num_nodes);
    for (const auto &[u, v] : edges) {
        g.set_edge(u, v);
    }
    return g;
}

Graph Graph::complete(std::size_t num_nodes) {
    Graph g(num_nodes);
    for (Node u = 0; u < num_nodes; u++) {
        for (Node v = u + 1; v < num_nodes; v++) {
            g.set_edge(u, v);
        }
    }
    return g;
}

Graph Graph::path(std::size_t num_nodes) {
    Graph g(num_nodes);
    for (Node v = 0; v + 1 < num_nodes; v++) {
        g.set_edge(v, v + 1);
    }
    return g;
}

Graph Graph::star(std::size_t num_nodes, Node center) {
    Graph g(num_nodes);
    for (Node v = 0; v < num_nodes; v++) {
        if (v != center) {
            g.set_edge(center, v);
        }
    }
    return g;
}

void Graph::check_node(Node v) const {
    if (v >= n_) {
        throw std::out_of_range("Node " + std::to_string(v) + " out of range for graph with " + std::to_string(n_) + " nodes.");
    }
}

bool Graph::has_edge(Node u, Node v) const {
    check_node(u);
    check_node(v);
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1;
}

void Graph::set_edge(Node u, Node v, bool present) {
    check_node(u);
    check_node(v);
    if (u == v) {
        throw std::invalid_argument("Self-loop on node " + std::to_string(u) + ".");
    }
    uint64_t bu = uint64_t{1} << (u % 64);
    uint64_t bv = uint64_t{1} << (v % 64);
    if (present) {
        adj_[u * words_ + v / 64] |= bv;
        adj_[v * words_ + u / 64] |= bu;
    } else {
        adj_[u * words_ + v / 64] &= ~bv;
        adj_[v * words_ + u / 64] &= ~bu;
    }
}

void Graph::toggle_edge(Node u, Node v) {
    set_edge(u, v, !has_edge(u, v));
}

std::size_t Graph::degree(Node v) const {
    check_node(v);
    std::size_t d = 0;
    for (uint64_t w : row(v)) {
        d += std::popcount(w);
    }
    return d;
}

std::size_t Graph::num_edges() const {
    std::size_t total = 0;
    for (uint64_t w : adj_) {
        total += std::popcount(w);
    }
    return total / 2;
}

std::vector<Node> Graph::neighbors(Node v) const {
    check_node(v);
    std::vector<Node> result;
    auto r = row(v);
    for (std::size_t k = 0; k < words_; k++) {
        uint64_t w = r[k];
        while (w) {
            result.push_back(k * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return result;
}

std::vector<std::pair<Node, Node>> Graph::edges() const {
    std::vector<std::pair<Node, Node>> result;
    for (Node u = 0; u < n_; u++) {
        for (Node v : neighbors(u)) {
            if (u < v) {
                result.emplace_back(u, v);
            }
        }
    }
    return result;
}

Graph Graph::relabeled(std::span<const Node> new_label) const {
    if (new_label.size() != n_) {
        throw std::invalid_argument("Relabeling size does not match node count.");
    }
    std::vector<bool> seen(n_, false);
    for (Node v : new_label) {
        if (v >= n_ || seen[v]) {
            throw std::invalid_argument("Relabeling is not a permutation.");
        }
        seen[v] = true;
    }
    Graph result(n_);
    for (Node u = 0; u < n_; u++) {
        for (Node v : neighbors(u)) {
            if (u < v) {
                result.set_edge(new_label[u], new_label[v]);
            }
        }
    }
    return result;
}

std::size_t Graph::hash() const {
    uint64_t h = 0x9E3779B97F4A7C15ULL ^ n_;
    for (uint64_t w : adj_) {
        h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return (std::size_t)h;
}

std::string Graph::str() const {
    std::stringstream ss;
    ss << "Graph(n=" << n_ << ", edges=[";
    bool first = true;
    for (auto [u, v] : edges()) {
        if (!first) {
            ss << ", ";
        }
        first = false;
        ss << u << "-" << v;
    }
    ss << "])";
    return ss.str();
}

std::string LcSequence::str() const {
    std::stringstream ss;
    ss << "[";
    for (std::size_t k = 0; k < nodes.size(); k++) {
        if (k) {
            ss << ",";
        }
        ss << nodes[k];
    }
    ss << "]";
    return ss.str();
}

void lcopt::local_complement_inplace(Graph &g, Node v) {
    g.check_node(v);
    // Copy N(v) first: rows of neighbors change while we iterate.
    std::vector<uint64_t> nbhd(g.row(v).begin(), g.row(v).end());
    for (std::size_t k = 0; k < g.words_; k++) {
        uint64_t w = nbhd[k];
        while (w) {
            Node u = k * 64 + std::countr_zero(w);
            w &= w - 1;
            auto r = g.mutable_row(u);
            for (std::size_t j = 0; j < g.words_; j++) {
                r[j] ^= nbhd[j];
            }
            r[u / 64] &= ~(uint64_t{1} << (u % 64));
        }
    }
}

Graph lcopt::local_complement(const Graph &g, Node v) {
    Graph result = g;
    local_complement_inplace(result, v);
    return result;
}

Graph lcopt::apply_lc_sequence(const Graph &g, const LcSequence &seq) {
    Graph result = g;
    for (Node v : seq.nodes) {
        local_complement_inplace(result, v);
    }
    return result;
}

Graph lcopt::make_rgs(std::size_t arms) {
    if (arms < 2) {
        throw std::invalid_argument("RGS needs at least 2 arms.");
    }
    Graph g(2 * arms);
    for (std::size_t a = 0; a < arms; a++) {
        g.set_edge(2 * a, 2 * a + 1);
        for (std::size_t b = a + 1; b < arms; b++) {
            g.set_edge(2 * a + 1, 2 * b + 1);
        }
    }
    return g;
}

Graph lcopt::erdos_renyi(std::size_t n, double p, uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("Edge probability must lie in [0, 1].");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (Node u = 0; u < n; u++) {
        for (Node v = u + 1; v < n; v++) {
            // Always draw so that the stream position is independent of p.
            double r = coin(rng);
            if (r < p) {
                g.set_edge(u, v);
            }
        }
    }
    return g;
}

Fraction lcopt::clustering_coefficient(const Graph &g, Node v) {
    std::size_t d = g.degree(v);
    if (d <= 1) {
        return {0, 1};
    }
    auto nv = g.row(v);
    std::size_t twice_links = 0;
    for (Node u : g.neighbors(v)) {
        auto nu = g.row(u);
        for (std::size_t k = 0; k < g.num_words(); k++) {
            twice_links += std::popcount(nu[k] & nv[k]);
        }
    }
    return {twice_links / 2, d * (d - 1) / 2};
}

bool lcopt::is_connected(const Graph &g) {
    std::size_t n = g.num_nodes();
    std::vector<uint64_t> seen((n + 63) / 64, 0);
    std::vector<Node> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        Node v = stack.back();
        stack.pop_back();
        auto r = g.row(v);
        for (std::size_t k = 0; k < seen.size(); k++) {
            uint64_t fresh = r[k] & ~seen[k];
            seen[k] |= fresh;
            while (fresh) {
                stack.push_back(k * 64 + std::countr_zero(fresh));
                fresh &= fresh - 1;
                count++;
            }
        }
    }
    return count == n;
}

uint64_t lcopt::adjacency_code(const Graph &g) {
    std::size_t n = g.num_nodes();
    if (n > 11) {
        throw std::invalid_argument("adjacency_code supports at most 11 nodes.");
    }
    uint64_t code = 0;
    for (Node u = 0; u < n; u++) {
        uint64_t r = g.row(u)[0];
        for (Node v = u + 1; v < n; v++) {
            code = (code << 1) | ((r >> v) & 1);
        }
    }
    return code;
}

Graph lcopt::graph_from_adjacency_code(std::size_t n, uint64_t code) {
    Graph g(n);
    std::size_t bit = n * (n - 1) / 2;
    for (Node u = 0; u < n; u++) {
        for (Node v = u + 1; v < n; v++) {
            bit--;
            if ((code >> bit) & 1) {
                g.set_edge(u, v);
            }
        }
    }
    return g;
}

uint64_t lcopt::canonical_code(const Graph &g) {
    std::size_t n = g.num_nodes();
    if (n > CANONICAL_LABEL_MAX_NODES) {
        throw std::invalid_argument(
            "canonical_label brute force supports at most " + std::to_string(CANONICAL_LABEL_MAX_NODES) + " nodes.");
    }
    std::size_t m = n * (n - 1) / 2;
    // bit_of[a][b] = bit position of pair {a,b} in the code.
    uint8_t bit_of[CANONICAL_LABEL_MAX_NODES][CANONICAL_LABEL_MAX_NODES] = {};
    std::size_t k = 0;
    for (Node a = 0; a < n; a++) {
        for (Node b = a + 1; b < n; b++) {
            bit_of[a][b] = bit_of[b][a] = (uint8_t)(m - 1 - k);
            k++;
        }
    }
    auto edge_list = g.edges();
    std::vector<Node> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    uint64_t best = ~uint64_t{0};
    do {
        uint64_t code = 0;
        for (auto [u, v] : edge_list) {
            code |= uint64_t{1} << bit_of[perm[u]][perm[v]];
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string lcopt::canonical_label(const Graph &g) {
    uint64_t code = canonical_code(g);
    std::string key;
    key.push_back((char)g.num_nodes());
    for (int shift = 24; shift >= 0; shift -= 8) {
        key.push_back((char)((code >> shift) & 0xFF));
    }
    return key;
}
