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

#ifndef FLQAS_STABILIZER_HPP
#define FLQAS_STABILIZER_HPP

#include <cstdint>
#include <vector>

#include "flqas/pauli.hpp"

namespace flqas {

enum class CliffordGate { H, S, CNOT, CZ };

/// Generator-based stabilizer state. Row i < n holds destabilizer i, row
/// n + i holds stabilizer i; destabilizer i anticommutes with stabilizer i
/// and commutes with every other stabilizer.
///
/// Single-owner mutable object; sampling workers each use their own copy.
class StabilizerTableau {
  public:
    /// Tableau stabilizing |0...0>: stabilizer i = +Z_i, destabilizer i = X_i.
    explicit StabilizerTableau(uint32_t n_qubits);

    uint32_t n_qubits() const { return n_; }

    PauliString stabilizer(uint32_t i) const;
    PauliString destabilizer(uint32_t i) const;

    void apply_h(uint32_t q);
    void apply_s(uint32_t q);
    void apply_cnot(uint32_t control, uint32_t target);
    void apply_cz(uint32_t a, uint32_t b);
    void apply_clifford(CliffordGate gate, uint32_t q0, uint32_t q1 = UINT32_MAX);

    /// Conjugates every generator by exp(-i (k pi/2) P / 2), k in [0,4).
    /// P must be phase-free and nonidentity.
    void apply_pauli_rotation(const PauliString& generator, int k);

    /// <psi| p |psi> for a phase-free Pauli p: exactly -1, 0, or +1.
    int expectation(const PauliString& p) const;

  private:
    struct Row {
        uint64_t x;
        uint64_t z;
        bool negative;  // sign of the generator
    };

    PauliString row_pauli(const Row& r) const;
    void check_qubit(uint32_t q) const;

    uint32_t n_;
    std::vector<Row> rows_;  // destabilizers then stabilizers
};

}  // namespace flqas

#endif
