// Copyright 2026 The flqas authors
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

#include "flqas/circuit.hpp"

#include <set>
#include <stdexcept>

#include <json.hpp>

namespace flqas {

bool gate_is_two_qubit(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            return false;
        default:
            return true;
    }
}

bool gate_is_parameterized(GateKind kind) {
    return kind != GateKind::CZ;
}

std::string gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
            return "rx";
        case GateKind::RY:
            return "ry";
        case GateKind::RZ:
            return "rz";
        case GateKind::RXX:
            return "rxx";
        case GateKind::RYY:
            return "ryy";
        case GateKind::RZZ:
            return "rzz";
        case GateKind::CZ:
            return "cz";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    if (name == "rx") return GateKind::RX;
    if (name == "ry") return GateKind::RY;
    if (name == "rz") return GateKind::RZ;
    if (name == "rxx") return GateKind::RXX;
    if (name == "ryy") return GateKind::RYY;
    if (name == "rzz") return GateKind::RZZ;
    if (name == "cz") return GateKind::CZ;
    throw std::invalid_argument("unknown gate kind: " + name);
}

Circuit::Circuit(uint32_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit width out of range");
    }
}

int Circuit::gate_count() const {
    int count = 0;
    for (const auto& layer : layers_) {
        count += static_cast<int>(layer.gates.size());
    }
    return count;
}

const Gate& Circuit::gate_at(GatePosition pos) const {
    if (pos.layer < 0 || pos.layer >= depth()) {
        throw std::out_of_range("layer index out of range");
    }
    const auto& gates = layers_[pos.layer].gates;
    if (pos.gate < 0 || pos.gate >= static_cast<int>(gates.size())) {
        throw std::out_of_range("gate index out of range");
    }
    return gates[pos.gate];
}

Circuit Circuit::with_layer(const LayerTemplate& tmpl) const {
    Layer layer;
    layer.label = tmpl.label;
    std::set<int> used;
    int next_param = param_count_;
    for (const auto& site : tmpl.sites) {
        bool two = gate_is_two_qubit(tmpl.kind);
        if (!two && site[1] != -1) {
            throw std::invalid_argument("single-qubit layer template has a two-qubit site");
        }
        int q0 = site[0];
        int q1 = two ? site[1] : -1;
        if (q0 < 0 || q0 >= static_cast<int>(n_qubits_) ||
            (two && (q1 < 0 || q1 >= static_cast<int>(n_qubits_) || q1 == q0))) {
            throw std::invalid_argument("layer template site out of range");
        }
        if (!used.insert(q0).second || (two && !used.insert(q1).second)) {
            throw std::invalid_argument("layer template supports overlap");
        }
        Gate g{tmpl.kind, {q0, q1}, -1};
        if (gate_is_parameterized(tmpl.kind)) {
            g.param = next_param++;
        }
        layer.gates.push_back(g);
    }
    Circuit out = *this;
    out.layers_.push_back(std::move(layer));
    out.param_count_ = next_param;
    return out;
}

Circuit Circuit::without_gate(GatePosition pos) const {
    const Gate& victim = gate_at(pos);
    if (victim.param >= 0 && param_count_ <= 1) {
        throw std::invalid_argument("cannot remove the last parameterized gate");
    }
    Circuit out = *this;
    auto& gates = out.layers_[pos.layer].gates;
    int removed_param = victim.param;
    gates.erase(gates.begin() + pos.gate);
    if (gates.empty()) {
        out.layers_.erase(out.layers_.begin() + pos.layer);
    }
    if (removed_param >= 0) {
        for (auto& layer : out.layers_) {
            for (auto& g : layer.gates) {
                if (g.param > removed_param) {
                    g.param--;
                }
            }
        }
        out.param_count_--;
    }
    return out;
}

PauliString Circuit::gate_generator(const Gate& g) const {
    PauliString p(n_qubits_);
    switch (g.kind) {
        case GateKind::RX:
            p.set_pauli(g.qubits[0], 'X');
            break;
        case GateKind::RY:
            p.set_pauli(g.qubits[0], 'Y');
            break;
        case GateKind::RZ:
            p.set_pauli(g.qubits[0], 'Z');
            break;
        case GateKind::RXX:
            p.set_pauli(g.qubits[0], 'X');
            p.set_pauli(g.qubits[1], 'X');
            break;
        case GateKind::RYY:
            p.set_pauli(g.qubits[0], 'Y');
            p.set_pauli(g.qubits[1], 'Y');
            break;
        case GateKind::RZZ:
            p.set_pauli(g.qubits[0], 'Z');
            p.set_pauli(g.qubits[1], 'Z');
            break;
        case GateKind::CZ:
            throw std::invalid_argument("CZ has no rotation generator");
    }
    return p;
}

std::string Circuit::to_json() const {
    nlohmann::json j;
    j["n_qubits"] = n_qubits_;
    j["layers"] = nlohmann::json::array();
    for (const auto& layer : layers_) {
        nlohmann::json jl;
        jl["label"] = layer.label;
        jl["gates"] = nlohmann::json::array();
        for (const auto& g : layer.gates) {
            nlohmann::json jg;
            jg["kind"] = gate_kind_name(g.kind);
            if (gate_is_two_qubit(g.kind)) {
                jg["qubits"] = {g.qubits[0], g.qubits[1]};
            } else {
                jg["qubits"] = {g.qubits[0]};
            }
            if (g.param >= 0) {
                jg["param"] = g.param;
            }
            jl["gates"].push_back(jg);
        }
        j["layers"].push_back(jl);
    }
    return j.dump(2);
}

Circuit Circuit::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("circuit JSON parse error: ") + e.what());
    }
    try {
        Circuit c(j.at("n_qubits").get<uint32_t>());
        std::set<int> params_seen;
        for (const auto& jl : j.at("layers")) {
            Layer layer;
            layer.label = jl.at("label").get<std::string>();
            for (const auto& jg : jl.at("gates")) {
                Gate g;
                g.kind = gate_kind_from_name(jg.at("kind").get<std::string>());
                auto qubits = jg.at("qubits").get<std::vector<int>>();
                bool two = gate_is_two_qubit(g.kind);
                if (qubits.size() != (two ? 2u : 1u)) {
                    throw std::runtime_error("wrong qubit count for gate " +
                                             gate_kind_name(g.kind));
                }
                g.qubits = {qubits[0], two ? qubits[1] : -1};
                if (gate_is_parameterized(g.kind)) {
                    g.param = jg.at("param").get<int>();
                    if (g.param < 0 || !params_seen.insert(g.param).second) {
                        throw std::runtime_error("invalid or duplicate param index");
                    }
                } else if (jg.contains("param")) {
                    throw std::runtime_error("CZ gate must not carry a param");
                }
                if (g.qubits[0] < 0 || g.qubits[0] >= static_cast<int>(c.n_qubits_) ||
                    (two && (g.qubits[1] < 0 || g.qubits[1] >= static_cast<int>(c.n_qubits_) ||
                             g.qubits[1] == g.qubits[0]))) {
                    throw std::runtime_error("gate qubit index out of range");
                }
                layer.gates.push_back(g);
            }
            c.layers_.push_back(std::move(layer));
        }
        c.param_count_ = static_cast<int>(params_seen.size());
        // Indices must form 0..M-1.
        if (!params_seen.empty() && (*params_seen.rbegin() != c.param_count_ - 1)) {
            throw std::runtime_error("param indices have gaps");
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("circuit JSON error at ") + e.what());
    }
}

std::vector<StabilizerOp> clifford_instance(const Circuit& c, const DiscreteAssignment& a) {
    if (static_cast<int>(a.size()) != c.param_count()) {
        throw std::invalid_argument("assignment length does not match parameter count");
    }
    std::vector<StabilizerOp> ops;
    for (const auto& layer : c.layers()) {
        for (const auto& g : layer.gates) {
            if (g.kind == GateKind::CZ) {
                ops.push_back({false, PauliString(c.n_qubits()), 0, g.qubits});
            } else {
                int k = a[g.param];
                if (k < 0 || k > 3) {
                    throw std::invalid_argument("assignment value outside [0,4)");
                }
                ops.push_back({true, c.gate_generator(g), k, g.qubits});
            }
        }
    }
    return ops;
}

StabilizerTableau run_clifford_instance(const Circuit& c, const DiscreteAssignment& a) {
    StabilizerTableau t(c.n_qubits());
    for (const auto& op : clifford_instance(c, a)) {
        if (op.is_rotation) {
            if (op.quarter_turns != 0) {
                t.apply_pauli_rotation(op.generator, op.quarter_turns);
            }
        } else {
            t.apply_cz(op.qubits[0], op.qubits[1]);
        }
    }
    return t;
}

}  // namespace flqas
