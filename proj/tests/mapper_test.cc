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

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "lcopt/classes.h"
#include "lcopt/graph.h"
#include "lcopt/mapper.h"
#include "lcopt/optimizer.h"
#include "state_vector.h"

using namespace lcopt;

namespace {

// Schmidt rank across the cut {0..x-1} | {x..n-1}, by complex elimination of
// the reshaped amplitude matrix. Independent of any GF(2) code.
std::size_t schmidt_log_rank(const lcopt_test::StateVector &sv, std::size_t x) {
    std::size_t rows = std::size_t{1} << x;
    std::size_t cols = std::size_t{1} << (sv.n - x);
    std::vector<std::vector<lcopt_test::cplx>> m(rows, std::vector<lcopt_test::cplx>(cols));
    for (std::size_t k = 0; k < sv.amp.size(); k++) {
        m[k & (rows - 1)][k >> x] = sv.amp[k];
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; c++) {
        std::size_t piv = rank;
        for (std::size_t r = rank; r < rows; r++) {
            if (std::abs(m[r][c]) > std::abs(m[piv][c])) {
                piv = r;
            }
        }
        if (std::abs(m[piv][c]) < 1e-9) {
            continue;
        }
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < rows; r++) {
            auto f = m[r][c] / m[rank][c];
            for (std::size_t j = c; j < cols; j++) {
                m[r][j] -= f * m[rank][j];
            }
        }
        rank++;
    }
    std::size_t log = 0;
    while ((std::size_t{1} << log) < rank) {
        log++;
    }
    EXPECT_EQ(std::size_t{1} << log, rank);
    return log;
}

std::vector<Graph> all_connected(std::size_t n) {
    std::vector<Graph> out;
    std::size_t pairs = n * (n - 1) / 2;
    for (uint64_t code = 0; code < (uint64_t{1} << pairs); code++) {
        Graph g = graph_from_adjacency_code(n, code);
        if (is_connected(g)) {
            out.push_back(g);
        }
    }
    return out;
}

}  // namespace

TEST(mapper, height_profile_examples) {
    ASSERT_EQ(height_profile(Graph::path(5)).max(), 1u);
    ASSERT_EQ(height_profile(Graph::star(6)).max(), 1u);
    ASSERT_EQ(height_profile(Graph::complete(6)).max(), 1u);
    ASSERT_EQ(height_profile(make_rgs(4)).h, (std::vector<std::size_t>{0, 1, 1, 2, 1, 2, 1, 1, 0}));
    // A 2x3 grid in row-major order: all three rungs cross the middle cut.
    auto grid = Graph::from_edges(
        6, std::vector<std::pair<Node, Node>>{{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    ASSERT_EQ(height_profile(grid).max(), 3u);
}

TEST(mapper, height_matches_schmidt_rank) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; t++) {
        std::size_t n = 2 + rng() % 7;
        Graph g = erdos_renyi(n, 0.5, rng());
        auto sv = lcopt_test::graph_state_vector(g);
        auto hp = height_profile(g);
        for (std::size_t x = 1; x < n; x++) {
            ASSERT_EQ(hp.h[x], schmidt_log_rank(sv, x)) << g.str() << " x=" << x;
        }
    }
}

TEST(mapper, all_small_connected_graphs_verify) {
    for (std::size_t n = 1; n <= 5; n++) {
        for (const Graph &g : all_connected(n)) {
            for (bool gauge : {true, false}) {
                MapperOptions opt;
                opt.gauge_search = gauge;
                Circuit c = map_to_circuit(g, opt);
                ASSERT_TRUE(verify_circuit(c, g)) << g.str();
                // The emitter count meets the entanglement lower bound exactly.
                ASSERT_EQ(c.n_emitters, std::max<std::size_t>(1, height_profile(g).max())) << g.str();
                ASSERT_EQ(cost_report(c).emission_count, n);
            }
        }
    }
}

TEST(mapper, random_graphs_verify) {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; t++) {
        std::size_t n = 2 + rng() % 40;
        double p = (rng() % 100) / 100.0;
        Graph g = erdos_renyi(n, p, rng());
        Circuit c = map_to_circuit(g);
        ASSERT_TRUE(verify_circuit(c, g)) << g.str();
        ASSERT_EQ(c.n_emitters, required_emitters(g));
    }
}

TEST(mapper, disconnected_and_isolated_nodes) {
    Graph g(4);
    g.set_edge(1, 3);
    ASSERT_GE(required_emitters(g), 2u);
    ASSERT_TRUE(verify_circuit(map_to_circuit(g), g));
    Graph empty(5);
    ASSERT_TRUE(verify_circuit(map_to_circuit(empty), empty));
}

TEST(mapper, verify_detects_wrong_graph) {
    Circuit c = map_to_circuit(Graph::complete(3));
    ASSERT_FALSE(verify_circuit(c, Graph::path(3)));
    ASSERT_THROW(verify_circuit(c, Graph::complete(2)), std::invalid_argument);
}

TEST(mapper, deterministic) {
    Graph g = erdos_renyi(25, 0.4, 99);
    ASSERT_EQ(map_to_circuit(g), map_to_circuit(g));
}

TEST(mapper, emission_order_matters) {
    Graph p4 = Graph::path(4);
    Graph shuffled = reorder(p4, {0, 2, 1, 3});
    ASSERT_EQ(map_to_circuit(p4).n_emitters, 1u);
    ASSERT_EQ(map_to_circuit(shuffled).n_emitters, 2u);
    ASSERT_TRUE(verify_circuit(map_to_circuit(shuffled), shuffled));
}

TEST(mapper, gauge_search_never_costs_more_cnots_on_rgs) {
    for (std::size_t m = 2; m <= 8; m++) {
        MapperOptions off;
        off.gauge_search = false;
        auto on_cost = cost_report(map_to_circuit(make_rgs(m)));
        auto off_cost = cost_report(map_to_circuit(make_rgs(m), off));
        ASSERT_LE(on_cost.ee_cnots, off_cost.ee_cnots) << m;
        ASSERT_EQ(on_cost.n_emitters, m == 2 ? 1u : 2u);
    }
}

TEST(mapper, outcome_branches_all_build_the_graph) {
    // Every measurement outcome pattern must yield |G> after corrections.
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; t++) {
        Graph g = erdos_renyi(8, 0.5, rng());
        Circuit c = map_to_circuit(g);
        for (int k = 0; k < 8; k++) {
            std::mt19937_64 outcome_rng(rng());
            SimulationOptions opt;
            opt.rng = &outcome_rng;
            Tableau state = simulate_forward(c, opt);
            for (uint32_t e = 0; e < c.n_emitters; e++) {
                auto z = state.peek_z(c.emitter_qubit(e));
                ASSERT_TRUE(z.has_value());
                if (*z) {
                    state.apply(Gate::X, c.emitter_qubit(e));
                }
            }
            ASSERT_TRUE(states_equal(state, tableau_from_graph(g, c.n_emitters)));
        }
    }
}

TEST(mapper, isolated_middle_photon_needs_a_spare_emitter) {
    // Exhaustive search over every one-emitter protocol for three photons:
    // none leaves photon 1 unentangled while 0 and 2 stay entangled. The max
    // height is 1, so an isolated node costs one emitter above it.
    Graph g(3);
    g.set_edge(0, 2);
    ASSERT_EQ(height_profile(g).max(), 1u);
    ASSERT_EQ(required_emitters(g), 2u);

    const std::size_t e = 3;
    auto free_qubit = [&](const Tableau &t, std::size_t q) {
        for (char c : {'X', 'Y', 'Z'}) {
            PauliString p(4);
            p.set(q, c);
            if (t.peek(p).has_value()) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::pair<Tableau, std::size_t>> frontier{{Tableau(4), 0}};
    std::set<std::string> seen;
    bool found = false;
    while (!frontier.empty()) {
        auto [t, next] = frontier.back();
        frontier.pop_back();
        std::string key = std::to_string(next);
        for (const auto &p : canonical_stabilizers(t)) {
            key += p.str();
        }
        if (!seen.insert(key).second) {
            continue;
        }
        if (next == 3) {
            Tableau done = t;
            done.reset(e);
            found = found || (free_qubit(done, 1) && !free_qubit(done, 0));
        }
        for (Gate gate : {Gate::H, Gate::P}) {
            Tableau u = t;
            u.apply(gate, e);
            frontier.push_back({u, next});
        }
        if (next < 3) {
            Tableau u = t;
            u.apply(Gate::CNOT, e, next);
            frontier.push_back({u, next + 1});
        }
        Tableau u = t;
        u.reset(e);
        frontier.push_back({u, next});
    }
    ASSERT_GT(seen.size(), 1000u);
    ASSERT_FALSE(found);
}
