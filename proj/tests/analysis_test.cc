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

#include <cmath>
#include <sstream>

#include "gtest/gtest.h"
#include "lcopt/fidelity.h"
#include "lcopt/graph_io.h"
#include "lcopt/mapper.h"
#include "lcopt/optimizer.h"
#include "lcopt/repeater.h"
#include "lcopt/report.h"
#include "lcopt/statistics.h"
#include "lcopt/survey.h"

using namespace lcopt;

TEST(statistics, pearson) {
    std::vector<double> x{1, 2, 3, 4};
    std::vector<double> y{2, 4, 6, 8};
    std::vector<double> z{8, 6, 4, 2};
    ASSERT_NEAR(pearson(x, y), 1.0, 1e-12);
    ASSERT_NEAR(pearson(x, z), -1.0, 1e-12);
    std::vector<double> w{1, 3, 2, 4};
    ASSERT_NEAR(pearson(x, w), 0.8, 1e-12);
    std::vector<double> flat{1, 1, 1, 1};
    ASSERT_THROW(pearson(x, flat), StatisticsError);
    ASSERT_THROW(pearson(std::vector<double>{1}, std::vector<double>{1}), StatisticsError);
    ASSERT_THROW(pearson(x, std::vector<double>{1, 2}), std::invalid_argument);
}

TEST(statistics, correlation_series_groups_by_x) {
    std::vector<OrbitRecord> recs;
    auto add = [&](std::size_t edges_target, std::size_t ee) {
        Graph g(6);
        std::size_t added = 0;
        for (Node a = 0; a < 6 && added < edges_target; a++) {
            for (Node b = a + 1; b < 6 && added < edges_target; b++) {
                g.set_edge(a, b);
                added++;
            }
        }
        CostReport r;
        r.ee_cnots = ee;
        recs.push_back({g, {}, r});
    };
    add(3, 1);
    add(3, 3);
    add(5, 4);
    add(7, 6);
    auto s = correlation_series(recs, "edges", "ee_cnots");
    ASSERT_EQ(s.rows.size(), 3u);
    ASSERT_EQ(s.rows[0].x, 3);
    ASSERT_EQ(s.rows[0].mean_y, 2);
    ASSERT_NEAR(s.rows[0].std_y, std::sqrt(2.0), 1e-12);
    ASSERT_EQ(s.rows[0].count, 2u);
    ASSERT_EQ(s.rows[2].std_y, 0);
    ASSERT_TRUE(s.pearson_of_means.has_value());
    ASSERT_NEAR(*s.pearson_of_means, 1.0, 1e-12);
    ASSERT_THROW(correlation_series({}, "edges", "ee_cnots"), std::invalid_argument);
    ASSERT_THROW(correlation_series(recs, "edges", "nope"), std::invalid_argument);

    std::ostringstream csv;
    write_correlation_csv(csv, s);
    ASSERT_EQ(csv.str().substr(0, csv.str().find('\n')), "x,mean_y,std_y,count");
}

TEST(repeater, success_probability) {
    ASSERT_DOUBLE_EQ(success_probability({4, 1, 0.5}), 0.5);
    ASSERT_DOUBLE_EQ(success_probability({8, 1, 0.5}), 0.75);
    ASSERT_DOUBLE_EQ(success_probability({8, 2, 0.5}), 0.5625);
    ASSERT_DOUBLE_EQ(success_probability({16, 3, 1.0}), 1.0);
    ASSERT_DOUBLE_EQ(success_probability({16, 3, 0.0}), 0.0);
    // More photons per station never hurts.
    for (double n = 4; n < 40; n += 2) {
        ASSERT_LE(success_probability({n, 10, 0.3}), success_probability({n + 2, 10, 0.3}));
    }
    ASSERT_THROW(success_probability({2, 1, 0.5}), std::invalid_argument);
    ASSERT_THROW(success_probability({4, 0, 0.5}), std::invalid_argument);
    ASSERT_THROW(success_probability({4, 1, 1.5}), std::invalid_argument);
    ASSERT_NEAR(link_probability(0.2, 5, 0.5), 0.5 * std::pow(10.0, -0.2), 1e-12);
    ASSERT_THROW(link_probability(-1, 1, 0.5), std::invalid_argument);
}

TEST(fidelity, distill_pattern) {
    Graph rgs = make_rgs(4);
    DistillPlan p = distill_pattern(rgs, 2, 0);
    ASSERT_EQ(p.leaf_a, 0u);
    ASSERT_EQ(p.leaf_b, 2u);
    ASSERT_EQ(p.core_a, 1u);
    ASSERT_EQ(p.core_b, 3u);
    ASSERT_EQ(p.z_measured, (std::vector<Node>{4, 5, 6, 7}));
    ASSERT_EQ(p.x_measured, (std::vector<Node>{1, 3}));
    ASSERT_THROW(distill_pattern(rgs, 1, 2), std::invalid_argument);
    ASSERT_THROW(distill_pattern(rgs, 2, 2), std::invalid_argument);
}

TEST(fidelity, distilled_pair_is_maximally_entangled) {
    for (std::size_t m = 2; m <= 5; m++) {
        Graph rgs = make_rgs(m);
        Tableau ideal = tableau_from_graph(rgs);
        DistillFrame f = distill_frame(ideal, distill_pattern(rgs, 0, 2 * m - 2));
        // The two kept leaves carry a Bell pair: XX-type and ZZ-type stabilizers, no single-qubit ones.
        const Tableau &t = f.reference;
        ASSERT_FALSE(t.peek_z(0).has_value());
        ASSERT_FALSE(t.peek_z(2 * m - 2).has_value());
        std::mt19937_64 rng(m);
        for (int k = 0; k < 20; k++) {
            ASSERT_DOUBLE_EQ(distill_and_score(ideal, f, rng), 1.0);
        }
    }
}

TEST(fidelity, noiseless_fidelity_is_one) {
    Graph rgs = make_rgs(4);
    Circuit c = map_to_circuit(rgs);
    NoiseModel noise;
    auto est = epr_fidelity_mc(c, {}, rgs, noise, 20, 1);
    ASSERT_DOUBLE_EQ(est.mean, 1.0);
    ASSERT_DOUBLE_EQ(est.min_pair, 1.0);
    ASSERT_EQ(est.pairs.size(), 6u);
    auto opt = rgs_optimize(4);
    auto est2 = epr_fidelity_mc(opt.circuit, opt.inverse_local_layer, rgs, noise, 20, 1);
    ASSERT_DOUBLE_EQ(est2.mean, 1.0);
    // Without the local layer the optimized circuit does not make the RGS.
    ASSERT_THROW(epr_fidelity_mc(opt.circuit, {}, rgs, noise, 5, 1), std::invalid_argument);
}

TEST(fidelity, decreases_with_noise_and_is_seeded) {
    Graph rgs = make_rgs(5);
    Circuit c = map_to_circuit(rgs);
    NoiseModel noise;
    noise.scope = NoiseModel::Scope::AllCnots;
    double prev = 1.0;
    for (double p : {0.02, 0.1, 0.3}) {
        noise.p_dep = p;
        auto est = epr_fidelity_mc(c, {}, rgs, noise, 400, 9);
        ASSERT_LT(est.mean, prev + 3 * est.stderr_);
        ASSERT_LE(est.min_pair, est.mean + 1e-12);
        prev = est.mean;
        auto again = epr_fidelity_mc(c, {}, rgs, noise, 400, 9);
        ASSERT_EQ(again.mean, est.mean);
    }
    ASSERT_LT(prev, 0.9);
    noise.p_dep = 1.5;
    ASSERT_THROW(epr_fidelity_mc(c, {}, rgs, noise, 10, 1), std::invalid_argument);
}

TEST(fidelity, noise_names) {
    ASSERT_EQ(noise_scope_from_name("ee"), NoiseModel::Scope::EmitterCnots);
    ASSERT_EQ(noise_scope_from_name(noise_scope_name(NoiseModel::Scope::AllCnots)), NoiseModel::Scope::AllCnots);
    ASSERT_EQ(noise_channel_from_name("per-qubit"), NoiseModel::Channel::PerQubit);
    ASSERT_THROW(noise_channel_from_name("x"), std::invalid_argument);
}

TEST(survey, small_graphs) {
    SurveyResult s = survey_small_graphs(3);
    ASSERT_EQ(s.rows.size(), 2u);
    ASSERT_EQ(s.graphs_processed, 1u + 4u);
    const SurveyRow &p3 = s.rows[1];
    ASSERT_EQ(p3.n, 3u);
    ASSERT_EQ(p3.class_size, 4u);
    ASSERT_EQ(p3.best[1], 0u);
    ASSERT_EQ(p3.best[0], 1u);
    for (std::size_t k = 0; k < SURVEY_METRICS.size(); k++) {
        ASSERT_LE(p3.best[k], p3.max[k]);
    }
    std::ostringstream csv;
    write_survey_csv(csv, s);
    ASSERT_NE(csv.str().find("best_ee_cnots"), std::string::npos);
}

TEST(report, json_documents) {
    auto opt = rgs_optimize(3);
    auto j = rgs_report_json(opt);
    ASSERT_EQ(j["arms"], 3);
    ASSERT_EQ(j["photons"], 6);
    ASSERT_EQ(from_graph6(j["optimized_graph6"].get<std::string>()), opt.record.graph);
    std::string svg = svg_scatter(std::vector<double>{1, 2}, std::vector<double>{3, 4}, "t<", "x", "y");
    ASSERT_NE(svg.find("<svg"), std::string::npos);
    ASSERT_NE(svg.find("t&lt;"), std::string::npos);
}
