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
#include <set>
#include <unordered_set>

#include "gtest/gtest.h"
#include "lcopt/classes.h"
#include "lcopt/graph.h"
#include "lcopt/mapper.h"
#include "lcopt/orbit.h"
#include "lcopt/tableau.h"

using namespace lcopt;

TEST(orbit, small_orbit_sizes) {
    ASSERT_EQ(orbit_bfs(Graph::complete(2), 100).size(), 1u);
    ASSERT_EQ(orbit_bfs(Graph::path(3), 100).size(), 4u);
    ASSERT_EQ(orbit_bfs(Graph::star(4), 100).size(), 5u);
    ASSERT_EQ(orbit_bfs(Graph::complete(4), 100).size(), 5u);
    ASSERT_EQ(orbit_bfs(Graph(3), 100).size(), 1u);
}

TEST(orbit, cap_is_enforced) {
    ASSERT_THROW(orbit_bfs(Graph::path(3), 3), OrbitCapExceeded);
    ASSERT_NO_THROW(orbit_bfs(Graph::path(3), 4));
    ASSERT_THROW(CompactOrbit::explore(make_rgs(5), 10), OrbitCapExceeded);
}

TEST(orbit, witnesses_reproduce_members) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; t++) {
        std::size_t n = 3 + rng() % 5;
        Graph seed = erdos_renyi(n, 0.5, rng());
        auto orbit = orbit_bfs(seed, 100000);
        ASSERT_EQ(orbit[0].graph, seed);
        ASSERT_TRUE(orbit[0].lc_sequence.nodes.empty());
        std::unordered_set<Graph, GraphHash> seen;
        auto seed_heights = height_profile(seed).h;
        for (const auto &r : orbit) {
            ASSERT_TRUE(seen.insert(r.graph).second);
            ASSERT_EQ(apply_lc_sequence(seed, r.lc_sequence), r.graph);
            // Local operations preserve the entanglement across every cut.
            ASSERT_EQ(height_profile(r.graph).h, seed_heights);
        }
        // Closed under every local complementation.
        for (const auto &r : orbit) {
            for (Node v = 0; v < n; v++) {
                ASSERT_TRUE(seen.count(local_complement(r.graph, v)));
            }
        }
    }
}

TEST(orbit, compact_matches_bfs) {
    Graph seed = make_rgs(4);
    auto full = orbit_bfs(seed, 100000);
    auto compact = CompactOrbit::explore(seed, 100000);
    ASSERT_EQ(compact.size(), full.size());
    for (std::size_t i = 0; i < full.size(); i++) {
        ASSERT_EQ(compact.graph(i), full[i].graph);
        ASSERT_EQ(compact.num_edges(i), full[i].graph.num_edges());
        ASSERT_EQ(compact.witness(i).nodes.size(), full[i].lc_sequence.nodes.size());
        ASSERT_EQ(apply_lc_sequence(seed, compact.witness(i)), compact.graph(i));
    }
}

TEST(orbit, rgs_enumeration) {
    auto e = rgs_orbit_enumerate(4);
    ASSERT_EQ(e[0].graph, make_rgs(4));
    ASSERT_EQ(e[1].graph, local_complement(make_rgs(4), 1));
    ASSERT_EQ(e[1].lc_sequence.nodes, std::vector<Node>{1});
    for (std::size_t m = 2; m <= 7; m++) {
        Graph seed = make_rgs(m);
        auto listed = rgs_orbit_enumerate(m);
        std::unordered_set<Graph, GraphHash> orbit;
        for (const auto &r : orbit_bfs(seed, 1000000)) {
            orbit.insert(r.graph);
        }
        std::unordered_set<Graph, GraphHash> seen;
        for (const auto &r : listed) {
            ASSERT_TRUE(seen.insert(r.graph).second) << m;
            ASSERT_TRUE(orbit.count(r.graph)) << m;
            ASSERT_EQ(apply_lc_sequence(seed, r.lc_sequence), r.graph);
        }
    }
}

TEST(orbit, rgs_sequences) {
    ASSERT_TRUE(rgs_correlated_sequence(5, 0).nodes.empty());
    ASSERT_EQ(rgs_correlated_sequence(5, 1).nodes, (std::vector<Node>{1, 3, 1}));
    ASSERT_EQ(rgs_correlated_sequence(5, 2).nodes, (std::vector<Node>{1, 3, 5, 7, 1}));
    ASSERT_THROW(rgs_correlated_sequence(4, 2), std::out_of_range);
    ASSERT_EQ(rgs_best_sequence(3).nodes, (std::vector<Node>{1, 3, 5}));
    ASSERT_EQ(rgs_best_sequence(4).nodes, (std::vector<Node>{1, 3, 5, 6}));
    ASSERT_THROW(rgs_best_sequence(1), std::invalid_argument);
}

TEST(orbit, sample_is_seeded_and_valid) {
    Graph seed = erdos_renyi(20, 0.3, 5);
    std::mt19937_64 a(42);
    std::mt19937_64 b(42);
    auto sa = orbit_sample(seed, 50, 10, a);
    auto sb = orbit_sample(seed, 50, 10, b);
    ASSERT_EQ(sa.size(), sb.size());
    std::unordered_set<Graph, GraphHash> seen;
    for (std::size_t i = 0; i < sa.size(); i++) {
        ASSERT_EQ(sa[i].graph, sb[i].graph);
        ASSERT_EQ(sa[i].lc_sequence, sb[i].lc_sequence);
        ASSERT_EQ(apply_lc_sequence(seed, sa[i].lc_sequence), sa[i].graph);
        ASSERT_LE(sa[i].lc_sequence.nodes.size(), 10u);
        ASSERT_TRUE(seen.insert(sa[i].graph).second);
    }
}

TEST(classes, counts_per_size) {
    ClassCensus census = entanglement_classes(6);
    std::vector<std::size_t> per_n(7, 0);
    std::vector<std::size_t> labeled(7, 0);
    for (const auto &c : census.classes) {
        per_n[c.n]++;
        labeled[c.n] += c.labeled_count;
        ASSERT_EQ(c.representative.num_nodes(), c.n);
        ASSERT_TRUE(is_connected(c.representative));
    }
    ASSERT_EQ(per_n, (std::vector<std::size_t>{0, 0, 1, 1, 2, 4, 11}));
    ASSERT_EQ(labeled, (std::vector<std::size_t>{0, 0, 1, 4, 38, 728, 26704}));
    ASSERT_EQ(census.labeled_connected_total, 1u + 4 + 38 + 728 + 26704);
}

TEST(classes, table_is_lc_and_relabel_invariant) {
    ClassTable t = build_class_table(5);
    std::mt19937_64 rng(1);
    for (uint64_t code = 0; code < t.class_of_code.size(); code++) {
        if (t.class_of_code[code] == ClassTable::NONE) {
            continue;
        }
        Graph g = graph_from_adjacency_code(5, code);
        Node v = rng() % 5;
        ASSERT_EQ(t.class_of_code[adjacency_code(local_complement(g, v))], t.class_of_code[code]);
        std::vector<Node> perm{4, 2, 0, 3, 1};
        ASSERT_EQ(t.class_of_code[adjacency_code(g.relabeled(perm))], t.class_of_code[code]);
    }
}
