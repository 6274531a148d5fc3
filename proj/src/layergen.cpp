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

#include "flqas/layergen.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace flqas {

InteractionGraph interaction_graph(const Hamiltonian& h) {
    if (h.empty()) {
        throw std::invalid_argument("empty Hamiltonian");
    }
    std::map<std::pair<int, int>, double> weights;
    for (const auto& term : h.terms()) {
        std::vector<int> support;
        for (uint32_t q = 0; q < h.n_qubits(); q++) {
            if (term.op.pauli_at(q) != 'I') {
                support.push_back(static_cast<int>(q));
            }
        }
        // Every qubit pair inside a k-local term's support shares coupling.
        for (size_t i = 0; i < support.size(); i++) {
            for (size_t j = i + 1; j < support.size(); j++) {
                weights[{support[i], support[j]}] += std::abs(term.coefficient);
            }
        }
    }
    InteractionGraph g;
    g.n_nodes = static_cast<int>(h.n_qubits());
    for (const auto& [pair, w] : weights) {
        g.edges.push_back({pair.first, pair.second, w});
    }
    return g;
}

std::vector<std::pair<int, int>> max_weight_matching(const InteractionGraph& g) {
    if (g.edges.empty()) {
        return {};
    }
    // A tiny per-edge bonus makes weight maximization also prefer higher
    // cardinality among near-equal alternatives.
    double min_weight = g.edges[0].weight;
    for (const auto& e : g.edges) {
        if (e.weight <= 0) {
            throw std::invalid_argument("interaction edge weights must be positive");
        }
        min_weight = std::min(min_weight, e.weight);
    }
    std::vector<WeightedEdge> boosted = g.edges;
    // Canonical edge order keeps the matcher deterministic.
    std::sort(boosted.begin(), boosted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.a, a.b) < std::pair(b.a, b.b);
    });
    double bonus = min_weight * 1e-3;
    for (auto& e : boosted) {
        e.weight += bonus;
    }
    auto mates = max_weight_matching_mates(g.n_nodes, boosted);
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < g.n_nodes; v++) {
        if (mates[v] > v) {
            pairs.emplace_back(v, mates[v]);
        }
    }
    return pairs;
}

std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> two_layer_pairs(
    const InteractionGraph& g) {
    auto pairs1 = max_weight_matching(g);
    InteractionGraph rest;
    rest.n_nodes = g.n_nodes;
    for (const auto& e : g.edges) {
        auto key = std::pair(std::min(e.a, e.b), std::max(e.a, e.b));
        if (std::find(pairs1.begin(), pairs1.end(), key) == pairs1.end()) {
            rest.edges.push_back(e);
        }
    }
    auto pairs2 = max_weight_matching(rest);
    return {pairs1, pairs2};
}

GateSet gate_set_from_name(const std::string& name) {
    if (name == "rxyz2xyz") return GateSet::RXYZ2XYZ;
    if (name == "rxyz") return GateSet::RXYZ;
    if (name == "zz_ry") return GateSet::ZZ_RY;
    throw std::invalid_argument("unknown gate set: " + name);
}

std::string gate_set_name(GateSet set) {
    switch (set) {
        case GateSet::RXYZ2XYZ:
            return "rxyz2xyz";
        case GateSet::RXYZ:
            return "rxyz";
        case GateSet::ZZ_RY:
            return "zz_ry";
    }
    return "?";
}

std::vector<GateKind> gate_set_kinds(GateSet set) {
    switch (set) {
        case GateSet::RXYZ2XYZ:
            return {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::RXX,
                    GateKind::RYY, GateKind::RZZ, GateKind::CZ};
        case GateSet::RXYZ:
            return {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CZ};
        case GateSet::ZZ_RY:
            return {GateKind::RZZ, GateKind::RY};
    }
    return {};
}

std::vector<LayerTemplate> build_layer_pool(GateSet set, const InteractionGraph& g) {
    auto [pairs1, pairs2] = two_layer_pairs(g);
    std::vector<LayerTemplate> pool;
    for (GateKind kind : gate_set_kinds(set)) {
        if (!gate_is_two_qubit(kind)) {
            LayerTemplate tmpl;
            tmpl.label = gate_kind_name(kind);
            tmpl.kind = kind;
            for (int q = 0; q < g.n_nodes; q++) {
                tmpl.sites.push_back({q, -1});
            }
            pool.push_back(std::move(tmpl));
        } else {
            int sub = 1;
            for (const auto* pairs : {&pairs1, &pairs2}) {
                if (!pairs->empty()) {
                    LayerTemplate tmpl;
                    tmpl.label = gate_kind_name(kind) + "-m" + std::to_string(sub);
                    tmpl.kind = kind;
                    for (const auto& [a, b] : *pairs) {
                        tmpl.sites.push_back({a, b});
                    }
                    pool.push_back(std::move(tmpl));
                }
                sub++;
            }
        }
    }
    if (pool.empty()) {
        throw std::runtime_error(
            "layer pool is empty: the interaction graph has no edges and the gate set has no "
            "single-qubit kinds");
    }
    return pool;
}

}  // namespace flqas
