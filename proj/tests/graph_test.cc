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

#include <random>

#include "gtest/gtest.h"
#include "lcopt/graph.h"
#include "lcopt/graph_io.h"

using namespace lcopt;

TEST(graph, edges_and_degrees) {
    Graph g(4);
    g.set_edge(0, 1);
    g.set_edge(1, 2);
    g.toggle_edge(2, 3);
    ASSERT_EQ(g.num_edges(), 3u);
    ASSERT_EQ(g.degree(1), 2u);
    ASSERT_TRUE(g.has_edge(3, 2));
    g.toggle_edge(2, 3);
    ASSERT_FALSE(g.has_edge(2, 3));
    ASSERT_THROW(g.set_edge(1, 1), std::invalid_argument);
    ASSERT_THROW(g.set_edge(0, 9), std::out_of_range);
}

TEST(graph, local_complement_star_and_complete) {
    // LC on any node of K_n empties the clique among its neighbors.
    for (std::size_t n = 2; n <= 9; n++) {
        Graph k = Graph::complete(n);
        Graph s = local_complement(k, 0);
        ASSERT_EQ(s, Graph::star(n, 0)) << n;
        ASSERT_EQ(local_complement(s, 0), k);
    }
}

TEST(graph, local_complement_is_involution) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; t++) {
        std::size_t n = 1 + rng() % 70;
        Graph g = erdos_renyi(n, 0.4, rng());
        Node v = rng() % n;
        Graph h = local_complement(g, v);
        ASSERT_EQ(local_complement(h, v), g);
        // Neighborhood of v itself is unchanged.
        ASSERT_EQ(h.neighbors(v), g.neighbors(v));
        Graph inplace = g;
        local_complement_inplace(inplace, v);
        ASSERT_EQ(inplace, h);
    }
}

TEST(graph, local_complement_matches_definition) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 2 + rng() % 12;
        Graph g = erdos_renyi(n, 0.5, rng());
        Node v = rng() % n;
        Graph h = local_complement(g, v);
        for (Node a = 0; a < n; a++) {
            for (Node b = a + 1; b < n; b++) {
                bool in_nbhd = a != v && b != v && g.has_edge(a, v) && g.has_edge(b, v);
                ASSERT_EQ(h.has_edge(a, b), g.has_edge(a, b) ^ in_nbhd);
            }
        }
    }
}

TEST(graph, rgs_shape) {
    Graph g = make_rgs(4);
    ASSERT_EQ(g.num_nodes(), 8u);
    ASSERT_EQ(g.num_edges(), 6u + 4u);
    for (Node a = 0; a < 4; a++) {
        ASSERT_EQ(g.neighbors(2 * a), std::vector<Node>{2 * a + 1});
        ASSERT_EQ(g.degree(2 * a + 1), 4u);
    }
    ASSERT_THROW(make_rgs(1), std::invalid_argument);
}

TEST(graph, erdos_renyi_is_seeded) {
    ASSERT_EQ(erdos_renyi(30, 0.5, 17), erdos_renyi(30, 0.5, 17));
    ASSERT_NE(erdos_renyi(30, 0.5, 17), erdos_renyi(30, 0.5, 18));
    ASSERT_EQ(erdos_renyi(10, 1.0, 3), Graph::complete(10));
    ASSERT_EQ(erdos_renyi(10, 0.0, 3).num_edges(), 0u);
}

TEST(graph, clustering_coefficient) {
    Graph k = Graph::complete(5);
    ASSERT_EQ(clustering_coefficient(k, 2).value(), 1.0);
    Graph s = Graph::star(5);
    ASSERT_EQ(clustering_coefficient(s, 0).value(), 0.0);
    ASSERT_EQ(clustering_coefficient(s, 1).value(), 0.0);
    Graph g = Graph::star(4);
    g.set_edge(1, 2);
    ASSERT_EQ(clustering_coefficient(g, 0), (Fraction{1, 3}));
}

TEST(graph, relabel_and_canonical_label) {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 2 + rng() % 6;
        Graph g = erdos_renyi(n, 0.5, rng());
        std::vector<Node> perm(n);
        for (Node v = 0; v < n; v++) {
            perm[v] = v;
        }
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = g.relabeled(perm);
        ASSERT_EQ(h.num_edges(), g.num_edges());
        for (auto [a, b] : g.edges()) {
            ASSERT_TRUE(h.has_edge(perm[a], perm[b]));
        }
        ASSERT_EQ(canonical_label(g), canonical_label(h));
        ASSERT_EQ(graph_from_adjacency_code(n, adjacency_code(g)), g);
    }
    ASSERT_NE(canonical_label(Graph::path(4)), canonical_label(Graph::star(4)));
}

TEST(graph, connectivity) {
    ASSERT_TRUE(is_connected(Graph::path(6)));
    ASSERT_TRUE(is_connected(Graph(1)));
    Graph g(3);
    g.set_edge(0, 1);
    ASSERT_FALSE(is_connected(g));
}

TEST(graph_io, graph6_known_strings) {
    ASSERT_EQ(to_graph6(Graph::complete(3)), "Bw");
    ASSERT_EQ(to_graph6(Graph::path(3)), "Bg");
    ASSERT_EQ(from_graph6("Bw"), Graph::complete(3));
    ASSERT_EQ(from_graph6(">>graph6<<Bg"), Graph::path(3));
    ASSERT_EQ(to_graph6(Graph(1)), "@");
}

TEST(graph_io, graph6_round_trip) {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 90;
        Graph g = erdos_renyi(n, 0.3, rng());
        ASSERT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(graph_io, graph6_rejects_garbage) {
    ASSERT_THROW(from_graph6(""), GraphFormatError);
    ASSERT_THROW(from_graph6("B"), GraphFormatError);
    ASSERT_THROW(from_graph6("Bww"), GraphFormatError);
    ASSERT_THROW(from_graph6("B\x01"), GraphFormatError);
}

TEST(graph_io, edge_list_json) {
    Graph g = make_rgs(3);
    ASSERT_EQ(from_edge_list_json(to_edge_list_json(g)), g);
    ASSERT_EQ(parse_graph(R"({"n": 2, "edges": [[0, 1]]})"), Graph::complete(2));
    ASSERT_EQ(parse_graph("Bw"), Graph::complete(3));
    ASSERT_THROW(from_edge_list_json(R"({"n": 2, "edges": [[0, 0]]})"), GraphFormatError);
    ASSERT_THROW(from_edge_list_json(R"({"n": 2, "edges": [[0, 5]]})"), GraphFormatError);
    ASSERT_THROW(from_edge_list_json(R"({"edges": []})"), GraphFormatError);
    ASSERT_THROW(from_edge_list_json("{not json"), GraphFormatError);
}
