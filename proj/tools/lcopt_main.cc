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

// Command-line front end: orbit | map | optimize | rgs | correlate | fidelity | survey.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcopt/circuit_io.h"
#include "lcopt/graph_io.h"
#include "lcopt/mapper.h"
#include "lcopt/optimizer.h"
#include "lcopt/report.h"
#include "lcopt/statistics.h"

using namespace lcopt;

namespace {

// Exit codes.
constexpr int EXIT_OK = 0;
constexpr int EXIT_INTERNAL = 1;
constexpr int EXIT_USAGE = 2;
constexpr int EXIT_BAD_INPUT = 3;
constexpr int EXIT_CAP = 4;
constexpr int EXIT_OUTPUT = 5;
constexpr int EXIT_INVALID = 6;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::optional<uint64_t> seed;
    std::string graph_text;
    std::string input_path;
    std::string cost = "lex:n_emitters,ee_cnots,emitter_depth,unitary_count";
    std::size_t cap_orbit = 100000;
    std::size_t cap_orders = 7;
    std::size_t sampled_orders = 200;
    std::size_t samples = 200;
    std::size_t walk = 30;
    std::size_t trials = 20000;
    double p_dep = 0.01;
    std::string noise_scope = "ee";
    std::string noise_channel = "uniform";
    std::string out;
    std::string format;
    bool force = false;
    std::string strategy = "exhaustive";
    std::vector<std::size_t> arms{4};
    std::string x_metric = "edges";
    std::string y_metric = "unitary_count";
    std::size_t n_max = 7;
    bool classes_only = false;
};

Graph load_graph(const Config &cfg) {
    if (!cfg.graph_text.empty() && !cfg.input_path.empty()) {
        throw UsageError("Give either --graph or --input, not both.");
    }
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path);
        if (!in) {
            throw GraphFormatError("Cannot read input file '" + cfg.input_path + "'.");
        }
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_graph(ss.str());
    }
    if (cfg.graph_text.empty()) {
        throw UsageError("This command needs --graph or --input.");
    }
    return parse_graph(cfg.graph_text);
}

uint64_t require_seed(const Config &cfg) {
    if (!cfg.seed.has_value()) {
        throw UsageError("This command is stochastic and needs --seed.");
    }
    return *cfg.seed;
}

void emit(const Config &cfg, const std::string &text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    if (std::filesystem::exists(cfg.out) && !cfg.force) {
        throw OutputError("Refusing to overwrite '" + cfg.out + "' (pass --force).");
    }
    std::ofstream f(cfg.out, std::ios::trunc);
    if (!f) {
        throw OutputError("Cannot write '" + cfg.out + "'.");
    }
    f << text;
    if (!f) {
        throw OutputError("Write to '" + cfg.out + "' failed.");
    }
}

std::string seed_header(const std::string &cmd, const Config &cfg) {
    return "# lcopt " + cmd + " seed=" + (cfg.seed ? std::to_string(*cfg.seed) : std::string("none")) + "\n";
}

void check_format(const Config &cfg, std::initializer_list<const char *> allowed) {
    if (cfg.format.empty()) {
        return;
    }
    for (const char *a : allowed) {
        if (cfg.format == a) {
            return;
        }
    }
    throw UsageError("Format '" + cfg.format + "' is not available for this command.");
}

nlohmann::json with_seed(nlohmann::json doc, const Config &cfg) {
    doc["seed"] = cfg.seed ? nlohmann::json(*cfg.seed) : nlohmann::json(nullptr);
    return doc;
}

void run_orbit(const Config &cfg) {
    check_format(cfg, {"csv", "json-doc"});
    Graph g = load_graph(cfg);
    CompactOrbit orbit = CompactOrbit::explore(g, cfg.cap_orbit);
    std::ostringstream out;
    if (cfg.format == "json-doc") {
        nlohmann::json members = nlohmann::json::array();
        for (std::size_t i = 0; i < orbit.size(); i++) {
            members.push_back(orbit_record_to_json(orbit.record(i)));
        }
        out << with_seed({{"seed_graph6", to_graph6(g)}, {"size", orbit.size()}, {"members", members}}, cfg).dump(2)
            << "\n";
    } else {
        for (std::size_t i = 0; i < orbit.size(); i++) {
            out << to_graph6(orbit.graph(i)) << " " << orbit.witness(i).str() << "\n";
        }
    }
    emit(cfg, out.str());
}

void run_map(const Config &cfg) {
    check_format(cfg, {"json-doc"});
    Graph g = load_graph(cfg);
    Circuit c = map_to_circuit(g);
    nlohmann::json doc = {
        {"graph6", to_graph6(g)},
        {"cost", cost_report_to_json(cost_report(c))},
        {"circuit", circuit_to_json(c)},
    };
    emit(cfg, with_seed(doc, cfg).dump(2) + "\n");
}

void run_optimize(const Config &cfg) {
    check_format(cfg, {"json-doc"});
    Graph g = load_graph(cfg);
    CostFunction cost = CostFunction::parse(cfg.cost);
    nlohmann::json doc;
    if (cfg.strategy == "exhaustive") {
        OptimizerLimits lim;
        lim.orbit_cap = cfg.cap_orbit;
        lim.max_full_order_nodes = cfg.cap_orders;
        lim.sampled_orders = cfg.sampled_orders;
        if (g.num_nodes() > cfg.cap_orders) {
            lim.seed = require_seed(cfg);
        }
        doc = optimization_report_json(g, optimize_exhaustive(g, cost, lim));
    } else if (cfg.strategy == "edge-reduce") {
        OrbitRecord r = edge_reduce(g);
        OptimizationResult res;
        res.record = r;
        res.order.resize(g.num_nodes());
        for (Node v = 0; v < g.num_nodes(); v++) {
            res.order[v] = v;
        }
        res.circuit = map_to_circuit(r.graph);
        res.report = cost_report(res.circuit);
        res.record.cost = res.report;
        res.original = cost_report(map_to_circuit(g, {false}));
        doc = optimization_report_json(g, res);
    } else if (cfg.strategy == "random") {
        std::mt19937_64 rng(require_seed(cfg));
        SearchResult r = random_search(g, cfg.samples, cfg.walk, cost, rng);
        if (!verify_circuit(r.circuit, r.record.graph)) {
            throw std::logic_error("random search produced an invalid circuit.");
        }
        doc = search_report_json(g, cost_report(map_to_circuit(g, {false})), r);
    } else {
        throw UsageError("Unknown strategy '" + cfg.strategy + "' (exhaustive|edge-reduce|random).");
    }
    doc["strategy"] = cfg.strategy;
    doc["cost_function"] = cost.str();
    emit(cfg, with_seed(doc, cfg).dump(2) + "\n");
}

void run_rgs(const Config &cfg) {
    check_format(cfg, {"json-doc"});
    nlohmann::json docs = nlohmann::json::array();
    for (std::size_t m : cfg.arms) {
        if (m < 2) {
            throw std::invalid_argument("RGS needs at least 2 arms.");
        }
        docs.push_back(rgs_report_json(rgs_optimize(m)));
    }
    nlohmann::json doc = docs.size() == 1 ? docs[0] : nlohmann::json{{"reports", docs}};
    emit(cfg, with_seed(doc, cfg).dump(2) + "\n");
}

void run_correlate(const Config &cfg) {
    check_format(cfg, {"csv", "svg"});
    Graph g = load_graph(cfg);
    std::mt19937_64 rng(require_seed(cfg));
    std::vector<OrbitRecord> recs = orbit_sample(g, cfg.samples, cfg.walk, rng);
    for (auto &r : recs) {
        r.cost = cost_report(map_to_circuit(r.graph, {false}));
    }
    CorrelationSeries s = correlation_series(recs, cfg.x_metric, cfg.y_metric);
    if (cfg.format == "svg") {
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto &r : recs) {
            xs.push_back(record_feature(r, cfg.x_metric));
            ys.push_back(record_feature(r, cfg.y_metric));
        }
        std::string title = "seed=" + std::to_string(*cfg.seed) + " samples=" + std::to_string(recs.size());
        emit(cfg, svg_scatter(xs, ys, title, cfg.x_metric, cfg.y_metric));
        return;
    }
    std::ostringstream out;
    out << seed_header("correlate", cfg);
    out << "# pearson_of_means=" << (s.pearson_of_means ? std::to_string(*s.pearson_of_means) : "undefined") << "\n";
    write_correlation_csv(out, s);
    emit(cfg, out.str());
}

void run_fidelity(const Config &cfg) {
    check_format(cfg, {"csv"});
    uint64_t seed = require_seed(cfg);
    NoiseModel noise;
    noise.p_dep = cfg.p_dep;
    noise.scope = noise_scope_from_name(cfg.noise_scope);
    noise.channel = noise_channel_from_name(cfg.noise_channel);
    noise.validate();
    std::vector<FidelityRow> rows;
    for (std::size_t m : cfg.arms) {
        RgsOptimization o = rgs_optimize(m);
        Graph rgs = make_rgs(m);
        rows.push_back({2 * m, "original", cfg.p_dep, epr_fidelity_mc(o.original_circuit, {}, rgs, noise, cfg.trials, seed)});
        rows.push_back(
            {2 * m, "optimized", cfg.p_dep, epr_fidelity_mc(o.circuit, o.inverse_local_layer, rgs, noise, cfg.trials, seed)});
    }
    std::ostringstream out;
    out << seed_header("fidelity", cfg);
    out << "# noise_scope=" << noise_scope_name(noise.scope) << " noise_channel=" << noise_channel_name(noise.channel)
        << "\n";
    write_fidelity_csv(out, rows);
    emit(cfg, out.str());
}

void run_survey(const Config &cfg) {
    check_format(cfg, {"csv"});
    std::ostringstream out;
    out << seed_header("survey", cfg);
    if (cfg.classes_only) {
        ClassCensus census = entanglement_classes(cfg.n_max);
        out << "# classes=" << census.classes.size() << " labeled_connected=" << census.labeled_connected_total << "\n";
        out << "class_id,n,class_size,unlabeled_count,representative_graph6\n";
        for (std::size_t i = 0; i < census.classes.size(); i++) {
            const auto &c = census.classes[i];
            out << i << "," << c.n << "," << c.labeled_count << "," << c.unlabeled_count << ","
                << to_graph6(c.representative) << "\n";
        }
    } else {
        SurveyResult s = survey_small_graphs(cfg.n_max);
        out << "# classes=" << s.rows.size() << " labeled_connected=" << s.graphs_processed << "\n";
        write_survey_csv(out, s);
    }
    emit(cfg, out.str());
}

void add_common(CLI::App *sub, Config &cfg) {
    sub->add_option("--seed", cfg.seed, "Master RNG seed");
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_flag("--force", cfg.force, "Overwrite an existing output file");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "svg", "json-doc"}));
}

void add_graph_input(CLI::App *sub, Config &cfg) {
    sub->add_option("--graph", cfg.graph_text, "Inline graph6 string or JSON edge list");
    sub->add_option("--input", cfg.input_path, "File holding a graph6 string or JSON edge list");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Photonic graph-state generation circuits optimized over LC orbits."};
    app.require_subcommand(1);
    Config cfg;

    auto *orbit = app.add_subcommand("orbit", "Enumerate the LC orbit of a graph");
    add_common(orbit, cfg);
    add_graph_input(orbit, cfg);
    orbit->add_option("--cap-orbit", cfg.cap_orbit, "Maximum orbit size");

    auto *map = app.add_subcommand("map", "Build a generation circuit for a graph");
    add_common(map, cfg);
    add_graph_input(map, cfg);

    auto *opt = app.add_subcommand("optimize", "Search the orbit for a cheaper circuit");
    add_common(opt, cfg);
    add_graph_input(opt, cfg);
    opt->add_option("--strategy", cfg.strategy, "exhaustive | edge-reduce | random")
        ->check(CLI::IsMember({"exhaustive", "edge-reduce", "random"}));
    opt->add_option("--cost", cfg.cost, "Cost function, e.g. ee_cnots or weighted:ee_cnots=1,depth=0.5");
    opt->add_option("--cap-orbit", cfg.cap_orbit, "Maximum orbit size");
    opt->add_option("--cap-orders", cfg.cap_orders, "Enumerate all emission orders up to this many nodes");
    opt->add_option("--sampled-orders", cfg.sampled_orders, "Random orders tried above --cap-orders");
    opt->add_option("--samples", cfg.samples, "Random-search sample size");
    opt->add_option("--walk", cfg.walk, "Random-walk length for sampling");

    auto *rgs = app.add_subcommand("rgs", "Original and optimized circuits for repeater graph states");
    add_common(rgs, cfg);
    rgs->add_option("--arms", cfg.arms, "Arm counts")->required();

    auto *cor = app.add_subcommand("correlate", "Cost-vs-shape correlation over an orbit sample");
    add_common(cor, cfg);
    add_graph_input(cor, cfg);
    cor->add_option("--samples", cfg.samples, "Orbit sample size");
    cor->add_option("--walk", cfg.walk, "Random-walk length");
    cor->add_option("--x", cfg.x_metric, "Independent variable (edges or a cost metric)");
    cor->add_option("--y", cfg.y_metric, "Dependent cost metric");

    auto *fid = app.add_subcommand("fidelity", "Monte-Carlo EPR fidelity after RGS distillation");
    add_common(fid, cfg);
    fid->add_option("--arms", cfg.arms, "Arm counts")->required();
    fid->add_option("--trials", cfg.trials, "Trajectories per circuit");
    fid->add_option("--p-dep", cfg.p_dep, "Depolarizing probability per noisy gate");
    fid->add_option("--noise-scope", cfg.noise_scope, "ee | all")->check(CLI::IsMember({"ee", "all"}));
    fid->add_option("--noise-channel", cfg.noise_channel, "uniform | per-qubit")
        ->check(CLI::IsMember({"uniform", "per-qubit"}));

    auto *sur = app.add_subcommand("survey", "Per-class cost survey of small graphs");
    add_common(sur, cfg);
    sur->add_option("--n-max", cfg.n_max, "Largest graph size (<= 7)");
    sur->add_flag("--classes-only", cfg.classes_only, "Only count entanglement classes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    try {
        if (*orbit) {
            run_orbit(cfg);
        } else if (*map) {
            run_map(cfg);
        } else if (*opt) {
            run_optimize(cfg);
        } else if (*rgs) {
            run_rgs(cfg);
        } else if (*cor) {
            run_correlate(cfg);
        } else if (*fid) {
            run_fidelity(cfg);
        } else if (*sur) {
            run_survey(cfg);
        }
    } catch (const UsageError &e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const GraphFormatError &e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const nlohmann::json::exception &e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return EXIT_BAD_INPUT;
    } catch (const OrbitCapExceeded &e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return EXIT_CAP;
    } catch (const OutputError &e) {
        std::cerr << "output error: " << e.what() << "\n";
        return EXIT_OUTPUT;
    } catch (const std::invalid_argument &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::out_of_range &e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return EXIT_INVALID;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_OK;
}
