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

#include "lcopt/circuit_io.h"

#include <sstream>

using namespace lcopt;
using nlohmann::json;

std::string lcopt::correction_to_str(const std::vector<PauliTerm> &terms) {
    std::string out;
    for (const auto &t : terms) {
        if (!out.empty()) {
            out.push_back(' ');
        }
        out.push_back(t.pauli);
        out.push_back('_');
        out += std::to_string(t.qubit);
    }
    return out;
}

std::vector<PauliTerm> lcopt::correction_from_str(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::stringstream ss{std::string(text)};
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 3 || tok[1] != '_' || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z')) {
            throw CircuitError("Bad correction term '" + tok + "'.");
        }
        std::size_t used = 0;
        unsigned long q;
        try {
            q = std::stoul(tok.substr(2), &used);
        } catch (const std::exception &) {
            throw CircuitError("Bad correction term '" + tok + "'.");
        }
        if (used != tok.size() - 2) {
            throw CircuitError("Bad correction term '" + tok + "'.");
        }
        terms.push_back({(uint32_t)q, tok[0]});
    }
    return terms;
}

json lcopt::circuit_to_json(const Circuit &c) {
    json ops = json::array();
    for (const auto &op : c.ops) {
        switch (op.kind) {
            case OpKind::Unitary1Q:
                ops.push_back({{"op", "u1"}, {"target", op.a}, {"gate", gate_name(op.gate)}});
                break;
            case OpKind::CnotEE:
                ops.push_back({{"op", "cnot"}, {"control", op.a}, {"target", op.b}});
                break;
            case OpKind::Emission:
                ops.push_back({{"op", "emission"}, {"emitter", op.a}, {"photon", op.b}});
                break;
            case OpKind::MeasureZ:
                ops.push_back({{"op", "measure"}, {"emitter", op.a}, {"correction", correction_to_str(op.correction)}});
                break;
            case OpKind::Reset:
                ops.push_back({{"op", "reset"}, {"emitter", op.a}});
                break;
        }
    }
    return {{"photons", c.n_photons}, {"emitters", c.n_emitters}, {"ops", ops}};
}

Circuit lcopt::circuit_from_json(const json &doc) {
    try {
        Circuit c;
        c.n_photons = doc.at("photons").get<std::size_t>();
        c.n_emitters = doc.at("emitters").get<std::size_t>();
        for (const auto &o : doc.at("ops")) {
            std::string kind = o.at("op").get<std::string>();
            if (kind == "u1") {
                c.ops.push_back(Op::u1(gate_from_name(o.at("gate").get<std::string>()), o.at("target").get<uint32_t>()));
            } else if (kind == "cnot") {
                c.ops.push_back(Op::cnot(o.at("control").get<uint32_t>(), o.at("target").get<uint32_t>()));
            } else if (kind == "emission") {
                c.ops.push_back(Op::emission(o.at("emitter").get<uint32_t>(), o.at("photon").get<uint32_t>()));
            } else if (kind == "measure") {
                std::string corr = o.contains("correction") ? o.at("correction").get<std::string>() : "";
                c.ops.push_back(Op::measure(o.at("emitter").get<uint32_t>(), correction_from_str(corr)));
            } else if (kind == "reset") {
                c.ops.push_back(Op::reset(o.at("emitter").get<uint32_t>()));
            } else {
                throw CircuitError("Unknown op '" + kind + "'.");
            }
        }
        c.validate();
        return c;
    } catch (const json::exception &e) {
        throw CircuitError(std::string("Malformed circuit document: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw CircuitError(std::string("Malformed circuit document: ") + e.what());
    }
}

json lcopt::cost_report_to_json(const CostReport &r) {
    return {
        {"n_emitters", r.n_emitters},
        {"ee_cnots", r.ee_cnots},
        {"unitary_count", r.unitary_count},
        {"depth", r.depth},
        {"emitter_depth", r.emitter_depth},
        {"emission_count", r.emission_count},
    };
}
