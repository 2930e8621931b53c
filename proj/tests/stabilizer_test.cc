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
#include "lcopt/tableau.h"
#include "state_vector.h"

using namespace lcopt;
using lcopt_test::StateVector;

namespace {

const Gate ONE_QUBIT[] = {Gate::H,      Gate::P,          Gate::P_DAG,  Gate::X,         Gate::Y,
                          Gate::Z,      Gate::SQRT_X,     Gate::SQRT_X_DAG, Gate::SQRT_Z, Gate::SQRT_Z_DAG};

}  // namespace

TEST(pauli_string, parse_and_multiply) {
    auto p = PauliString::from_str("+XZ_Y");
    ASSERT_EQ(p.num_qubits, 4u);
    ASSERT_EQ(p.at(0), 'X');
    ASSERT_EQ(p.at(2), 'I');
    ASSERT_EQ(p.str(), "+XZIY");
    ASSERT_EQ(PauliString::from_str("-XX").str(), "-XX");
    ASSERT_TRUE(PauliString::from_str("XX").commutes(PauliString::from_str("ZZ")));
    ASSERT_FALSE(PauliString::from_str("XI").commutes(PauliString::from_str("ZI")));
    auto a = PauliString::from_str("XX");
    a *= PauliString::from_str("ZZ");
    ASSERT_EQ(a.str(), "-YY");
    auto b = PauliString::from_str("X");
    ASSERT_THROW(b *= PauliString::from_str("Z"), std::invalid_argument);
    ASSERT_EQ(PauliString::from_str("XIZY").weight(), 3u);
}

TEST(tableau, random_circuits_match_state_vector) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; t++) {
        std::size_t n = 1 + rng() % 5;
        Tableau tab(n);
        StateVector sv(n);
        for (int k = 0; k < 25; k++) {
            if (n >= 2 && rng() % 3 == 0) {
                std::size_t a = rng() % n;
                std::size_t b = (a + 1 + rng() % (n - 1)) % n;
                Gate g = rng() % 2 ? Gate::CNOT : Gate::CZ;
                tab.apply(g, a, b);
                sv.apply(g, a, b);
            } else {
                Gate g = ONE_QUBIT[rng() % std::size(ONE_QUBIT)];
                std::size_t a = rng() % n;
                tab.apply(g, a);
                sv.apply(g, a);
            }
        }
        ASSERT_TRUE(tab.is_consistent());
        ASSERT_TRUE(lcopt_test::stabilized_by(sv, tab)) << tab.str();
    }
}

TEST(tableau, gate_inverses) {
    for (Gate g : ONE_QUBIT) {
        Tableau a(2);
        a.apply(Gate::H, 0);
        a.apply(Gate::CNOT, 0, 1);
        a.apply(Gate::SQRT_X, 1);
        Tableau b = a;
        b.apply(g, 1);
        b.apply(gate_inverse(g), 1);
        ASSERT_TRUE(states_equal(a, b)) << gate_name(g);
        ASSERT_EQ(gate_from_name(gate_name(g)), g);
    }
}

TEST(tableau, graph_states_match_state_vector) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 60; t++) {
        std::size_t n = 1 + rng() % 7;
        Graph g = erdos_renyi(n, 0.5, rng());
        Tableau tab = tableau_from_graph(g);
        ASSERT_TRUE(lcopt_test::stabilized_by(lcopt_test::graph_state_vector(g), tab));
        Tableau ext = tableau_from_graph(g, 2);
        ASSERT_EQ(ext.num_qubits(), n + 2);
        ASSERT_EQ(ext.peek_z(n), std::optional<bool>(false));
    }
}

TEST(tableau, measurement) {
    Tableau t(2);
    ASSERT_EQ(t.peek_z(0), std::optional<bool>(false));
    t.apply(Gate::H, 0);
    ASSERT_FALSE(t.peek_z(0).has_value());
    t.apply(Gate::CNOT, 0, 1);
    bool r = t.measure_z(0, true);
    ASSERT_TRUE(r);
    ASSERT_EQ(t.peek_z(1), std::optional<bool>(true));
    ASSERT_THROW(t.measure_z(1, false), std::invalid_argument);
    t.reset(0);
    t.reset(1);
    ASSERT_TRUE(states_equal(t, Tableau(2)));
    Tableau bell(2);
    bell.apply(Gate::H, 0);
    bell.apply(Gate::CNOT, 0, 1);
    ASSERT_EQ(bell.peek(PauliString::from_str("XX")), std::optional<bool>(false));
    ASSERT_EQ(bell.peek(PauliString::from_str("-ZZ")), std::optional<bool>(true));
    ASSERT_FALSE(bell.peek(PauliString::from_str("XI")).has_value());
}

TEST(tableau, overlaps) {
    Tableau zero(1);
    Tableau plus(1);
    plus.apply(Gate::H, 0);
    Tableau one(1);
    one.apply(Gate::X, 0);
    ASSERT_DOUBLE_EQ(state_overlap(zero, plus), 0.5);
    ASSERT_DOUBLE_EQ(state_overlap(zero, one), 0.0);
    ASSERT_DOUBLE_EQ(state_overlap(zero, zero), 1.0);

    std::mt19937_64 rng(21);
    for (int t = 0; t < 100; t++) {
        std::size_t n = 1 + rng() % 4;
        Tableau a(n);
        Tableau b(n);
        StateVector sa(n);
        StateVector sb(n);
        for (int k = 0; k < 12; k++) {
            for (auto *pair : {&a, &b}) {
                StateVector &s = pair == &a ? sa : sb;
                Gate g = ONE_QUBIT[rng() % std::size(ONE_QUBIT)];
                std::size_t q = rng() % n;
                pair->apply(g, q);
                s.apply(g, q);
                if (n >= 2 && rng() % 2) {
                    std::size_t c = rng() % n;
                    std::size_t d = (c + 1) % n;
                    pair->apply(Gate::CNOT, c, d);
                    s.apply(Gate::CNOT, c, d);
                }
            }
        }
        ASSERT_NEAR(state_overlap(a, b), lcopt_test::overlap(sa, sb), 1e-9);
    }
}

TEST(tableau, canonical_form_is_unique) {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 50; t++) {
        Graph g = erdos_renyi(6, 0.5, rng());
        Tableau a = tableau_from_graph(g);
        Tableau b = a;
        for (int k = 0; k < 20; k++) {
            std::size_t i = rng() % 6;
            std::size_t j = (i + 1 + rng() % 5) % 6;
            b.stab_mul(i, j);
        }
        ASSERT_TRUE(b.is_consistent());
        ASSERT_EQ(canonical_stabilizers(a), canonical_stabilizers(b));
        ASSERT_TRUE(states_equal(a, b));
    }
}

TEST(tableau, from_stabilizers) {
    auto t = Tableau::from_stabilizers({PauliString::from_str("XX"), PauliString::from_str("-ZZ")});
    ASSERT_TRUE(t.is_consistent());
    ASSERT_EQ(t.peek(PauliString::from_str("-ZZ")), std::optional<bool>(false));
    ASSERT_THROW(Tableau::from_stabilizers({PauliString::from_str("XI"), PauliString::from_str("ZI")}),
                 std::invalid_argument);
    ASSERT_THROW(Tableau::from_stabilizers({PauliString::from_str("XX"), PauliString::from_str("XX")}),
                 std::invalid_argument);
}

TEST(tableau, lc_unitary_maps_graph_states) {
    // The local Clifford of a local complementation maps |G> to |tau_v(G)>.
    std::mt19937_64 rng(13);
    for (int t = 0; t < 200; t++) {
        std::size_t n = 2 + rng() % 9;
        Graph g = erdos_renyi(n, 0.5, rng());
        Node v = rng() % n;
        Tableau tab = tableau_from_graph(g);
        for (const auto &gate : lc_unitary_gates(g, v)) {
            ASSERT_FALSE(gate_is_two_qubit(gate.kind));
            tab.apply(gate);
        }
        ASSERT_TRUE(states_equal(tab, tableau_from_graph(local_complement(g, v))));
    }
}
