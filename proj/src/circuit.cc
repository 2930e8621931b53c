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

#include "lcopt/circuit.h"

#include <algorithm>
#include <sstream>

using namespace lcopt;

Op Op::u1(Gate g, uint32_t qubit) {
    if (gate_is_two_qubit(g)) {
        throw CircuitError("u1 op needs a single-qubit gate.");
    }
    Op op;
    op.kind = OpKind::Unitary1Q;
    op.gate = g;
    op.a = qubit;
    return op;
}

Op Op::cnot(uint32_t control_emitter, uint32_t target_emitter) {
    Op op;
    op.kind = OpKind::CnotEE;
    op.a = control_emitter;
    op.b = target_emitter;
    return op;
}

Op Op::emission(uint32_t emitter, uint32_t photon) {
    Op op;
    op.kind = OpKind::Emission;
    op.a = emitter;
    op.b = photon;
    return op;
}

Op Op::measure(uint32_t emitter, std::vector<PauliTerm> correction) {
    Op op;
    op.kind = OpKind::MeasureZ;
    op.a = emitter;
    op.correction = std::move(correction);
    return op;
}

Op Op::reset(uint32_t emitter) {
    Op op;
    op.kind = OpKind::Reset;
    op.a = emitter;
    return op;
}

std::string Op::str() const {
    std::stringstream ss;
    switch (kind) {
        case OpKind::Unitary1Q:
            ss << gate_name(gate) << " q" << a;
            break;
        case OpKind::CnotEE:
            ss << "CNOT e" << a << " e" << b;
            break;
        case OpKind::Emission:
            ss << "EMIT e" << a << " p" << b;
            break;
        case OpKind::MeasureZ:
            ss << "MZ e" << a;
            for (const auto &t : correction) {
                ss << " " << t.pauli << "_" << t.qubit;
            }
            break;
        case OpKind::Reset:
            ss << "R e" << a;
            break;
    }
    return ss.str();
}

std::string Circuit::str() const {
    std::stringstream ss;
    ss << "photons=" << n_photons << " emitters=" << n_emitters << "\n";
    for (const auto &op : ops) {
        ss << op.str() << "\n";
    }
    return ss.str();
}

void Circuit::validate() const {
    std::vector<bool> emitted(n_photons, false);
    std::size_t nq = num_qubits();
    auto check_emitter = [&](uint32_t e) {
        if (e >= n_emitters) {
            throw CircuitError("Emitter index " + std::to_string(e) + " out of range.");
        }
    };
    auto check_live = [&](uint32_t q, const char *what) {
        if (q >= nq) {
            throw CircuitError(std::string(what) + ": qubit " + std::to_string(q) + " out of range.");
        }
        if (q < n_photons && !emitted[q]) {
            throw CircuitError(
                std::string(what) + " acts on photon " + std::to_string(q) + " before its emission.");
        }
    };
    for (const auto &op : ops) {
        switch (op.kind) {
            case OpKind::Unitary1Q:
                check_live(op.a, "Single-qubit gate");
                if (gate_is_two_qubit(op.gate)) {
                    throw CircuitError("Unitary1Q holds a two-qubit gate.");
                }
                break;
            case OpKind::CnotEE:
                check_emitter(op.a);
                check_emitter(op.b);
                if (op.a == op.b) {
                    throw CircuitError("CNOT control equals target.");
                }
                break;
            case OpKind::Emission:
                check_emitter(op.a);
                if (op.b >= n_photons) {
                    throw CircuitError("Emission photon " + std::to_string(op.b) + " out of range.");
                }
                if (emitted[op.b]) {
                    throw CircuitError("Photon " + std::to_string(op.b) + " emitted twice.");
                }
                emitted[op.b] = true;
                break;
            case OpKind::MeasureZ:
                check_emitter(op.a);
                for (const auto &t : op.correction) {
                    check_live(t.qubit, "Correction");
                    if (t.pauli != 'X' && t.pauli != 'Y' && t.pauli != 'Z') {
                        throw CircuitError("Correction has a bad Pauli symbol.");
                    }
                }
                break;
            case OpKind::Reset:
                check_emitter(op.a);
                break;
        }
    }
    for (std::size_t p = 0; p < n_photons; p++) {
        if (!emitted[p]) {
            throw CircuitError("Photon " + std::to_string(p) + " is never emitted.");
        }
    }
}

Tableau lcopt::simulate_forward(const Circuit &c, const SimulationOptions &options) {
    c.validate();
    Tableau t(c.num_qubits());
    std::size_t next_forced = 0;
    for (const auto &op : c.ops) {
        switch (op.kind) {
            case OpKind::Unitary1Q:
                t.apply(op.gate, op.a);
                break;
            case OpKind::CnotEE:
                t.apply(Gate::CNOT, c.emitter_qubit(op.a), c.emitter_qubit(op.b));
                break;
            case OpKind::Emission:
                t.apply(Gate::CNOT, c.emitter_qubit(op.a), op.b);
                break;
            case OpKind::MeasureZ: {
                std::size_t eq = c.emitter_qubit(op.a);
                std::optional<bool> forced;
                if (!t.peek_z(eq).has_value()) {
                    if (options.forced_outcomes != nullptr && next_forced < options.forced_outcomes->size()) {
                        forced = (*options.forced_outcomes)[next_forced++];
                    } else if (options.rng == nullptr) {
                        forced = false;
                    }
                }
                bool outcome = t.measure_z(eq, forced, options.rng);
                if (outcome) {
                    for (const auto &term : op.correction) {
                        Gate g = term.pauli == 'X' ? Gate::X : term.pauli == 'Y' ? Gate::Y : Gate::Z;
                        t.apply(g, term.qubit);
                    }
                }
                break;
            }
            case OpKind::Reset:
                t.reset(c.emitter_qubit(op.a), options.rng);
                break;
        }
        if (options.after_op) {
            options.after_op(op, t);
        }
    }
    return t;
}

CostReport lcopt::cost_report(const Circuit &c) {
    CostReport r;
    r.n_emitters = c.n_emitters;
    std::vector<std::size_t> ready(c.num_qubits(), 0);
    std::vector<std::size_t> interval(c.n_emitters, 0);
    auto bump = [&](uint32_t e) {
        interval[e]++;
        r.emitter_depth = std::max(r.emitter_depth, interval[e]);
    };
    auto schedule = [&](std::initializer_list<std::size_t> qubits, const std::vector<PauliTerm> *extra = nullptr) {
        std::size_t start = 0;
        for (std::size_t q : qubits) {
            start = std::max(start, ready[q]);
        }
        if (extra != nullptr) {
            for (const auto &t : *extra) {
                start = std::max(start, ready[t.qubit]);
            }
        }
        std::size_t end = start + 1;
        for (std::size_t q : qubits) {
            ready[q] = end;
        }
        if (extra != nullptr) {
            for (const auto &t : *extra) {
                ready[t.qubit] = end;
            }
        }
        r.depth = std::max(r.depth, end);
    };
    for (const auto &op : c.ops) {
        switch (op.kind) {
            case OpKind::Unitary1Q:
                r.unitary_count++;
                schedule({op.a});
                if (op.a >= c.n_photons) {
                    bump(op.a - (uint32_t)c.n_photons);
                }
                break;
            case OpKind::CnotEE:
                r.unitary_count++;
                r.ee_cnots++;
                schedule({c.emitter_qubit(op.a), c.emitter_qubit(op.b)});
                bump(op.a);
                bump(op.b);
                break;
            case OpKind::Emission:
                r.unitary_count++;
                r.emission_count++;
                schedule({c.emitter_qubit(op.a), op.b});
                bump(op.a);
                break;
            case OpKind::MeasureZ:
                schedule({c.emitter_qubit(op.a)}, &op.correction);
                interval[op.a] = 0;
                break;
            case OpKind::Reset:
                schedule({c.emitter_qubit(op.a)});
                interval[op.a] = 0;
                break;
        }
    }
    return r;
}

std::size_t lcopt::longest_per_qubit_op_count(const Circuit &c) {
    std::vector<std::size_t> count(c.num_qubits(), 0);
    for (const auto &op : c.ops) {
        switch (op.kind) {
            case OpKind::Unitary1Q:
                count[op.a]++;
                break;
            case OpKind::CnotEE:
                count[c.emitter_qubit(op.a)]++;
                count[c.emitter_qubit(op.b)]++;
                break;
            case OpKind::Emission:
                count[c.emitter_qubit(op.a)]++;
                count[op.b]++;
                break;
            case OpKind::MeasureZ:
            case OpKind::Reset:
                count[c.emitter_qubit(op.a)]++;
                break;
        }
    }
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}
