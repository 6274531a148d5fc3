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

#ifndef FLQAS_CIRCUIT_HPP
#define FLQAS_CIRCUIT_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "flqas/pauli.hpp"
#include "flqas/stabilizer.hpp"

namespace flqas {

enum class GateKind { RX, RY, RZ, RXX, RYY, RZZ, CZ };

bool gate_is_two_qubit(GateKind kind);
bool gate_is_parameterized(GateKind kind);
std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string& name);

struct Gate {
    GateKind kind;
    std::array<int, 2> qubits;  // qubits[1] == -1 for single-qubit gates
    int param = -1;             // index into the parameter vector, -1 iff CZ

    bool operator==(const Gate&) const = default;
};

struct Layer {
    std::string label;  // layer-template identity, used for decay counting
    std::vector<Gate> gates;

    bool operator==(const Layer&) const = default;
};

/// A layer template: one gate kind placed on a list of disjoint supports.
/// Parameter indices are assigned when the template is appended to a circuit.
struct LayerTemplate {
    std::string label;
    GateKind kind;
    std::vector<std::array<int, 2>> sites;  // {q, -1} for single-qubit kinds
};

/// Position of a gate inside a circuit.
struct GatePosition {
    int layer;
    int gate;
};

/// Immutable parameterized circuit. Parameter indices are 0..M-1 with no
/// gaps and no sharing; every mutation returns a new circuit.
class Circuit {
  public:
    explicit Circuit(uint32_t n_qubits);

    uint32_t n_qubits() const { return n_qubits_; }
    const std::vector<Layer>& layers() const { return layers_; }
    int param_count() const { return param_count_; }
    int gate_count() const;
    int depth() const { return static_cast<int>(layers_.size()); }

    const Gate& gate_at(GatePosition pos) const;

    /// Appends the template with fresh parameter indices.
    Circuit with_layer(const LayerTemplate& tmpl) const;

    /// Removes one gate, compacting parameter indices and dropping the layer
    /// if it becomes empty. Removing the last parameterized gate is an error.
    Circuit without_gate(GatePosition pos) const;

    /// The rotation generator of a parameterized gate (X/Y/Z on its support).
    PauliString gate_generator(const Gate& g) const;

    std::string to_json() const;
    static Circuit from_json(const std::string& text);

    bool operator==(const Circuit& other) const = default;

  private:
    uint32_t n_qubits_;
    std::vector<Layer> layers_;
    int param_count_ = 0;
};

/// Per-parameter quarter-turn values; angle = value * pi/2.
using DiscreteAssignment = std::vector<int>;

/// One stabilizer-engine operation of a Clifford-instantiated circuit.
struct StabilizerOp {
    bool is_rotation;
    PauliString generator;  // rotation case
    int quarter_turns;      // rotation case, in [0,4)
    std::array<int, 2> qubits;  // CZ case
};

/// Maps a circuit at a discrete assignment onto stabilizer operations,
/// preserving gate order.
std::vector<StabilizerOp> clifford_instance(const Circuit& c, const DiscreteAssignment& a);

/// Runs the instantiated circuit on a fresh |0...0> tableau.
StabilizerTableau run_clifford_instance(const Circuit& c, const DiscreteAssignment& a);

}  // namespace flqas

#endif
