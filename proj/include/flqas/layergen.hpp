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

#ifndef FLQAS_LAYERGEN_HPP
#define FLQAS_LAYERGEN_HPP

#include <string>
#include <utility>
#include <vector>

#include "flqas/circuit.hpp"
#include "flqas/pauli.hpp"

namespace flqas {

struct WeightedEdge {
    int a;
    int b;
    double weight;
};

/// Qubit-interaction graph: an edge joins two qubits that share support in
/// some Hamiltonian term, weighted by the summed |coefficient| of those
/// terms.
struct InteractionGraph {
    int n_nodes;
    std::vector<WeightedEdge> edges;
};

InteractionGraph interaction_graph(const Hamiltonian& h);

/// Maximum-weight matching on a general graph (primal-dual blossom
/// algorithm, O(n^3)). Returned pairs are sorted with a < b.
std::vector<std::pair<int, int>> max_weight_matching(const InteractionGraph& g);

/// Low-level entry point: mate[v] is the matched partner of v, or -1.
std::vector<int> max_weight_matching_mates(int n_nodes, const std::vector<WeightedEdge>& edges);

/// Brickwall-style pair sets: the first is the maximum-weight matching, the
/// second rematches after deleting the first matching's edges.
std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>> two_layer_pairs(
    const InteractionGraph& g);

enum class GateSet { RXYZ2XYZ, RXYZ, ZZ_RY };

GateSet gate_set_from_name(const std::string& name);
std::string gate_set_name(GateSet set);
std::vector<GateKind> gate_set_kinds(GateSet set);

/// Candidate layer pool: one transversal template per single-qubit kind,
/// and per two-qubit kind one template for each nonempty matching sub-layer
/// ("-m1" / "-m2" label suffixes). Throws when no template can be built.
std::vector<LayerTemplate> build_layer_pool(GateSet set, const InteractionGraph& g);

}  // namespace flqas

#endif
