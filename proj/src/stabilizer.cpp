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

#include "flqas/stabilizer.hpp"

#include <bit>
#include <stdexcept>

namespace flqas {

StabilizerTableau::StabilizerTableau(uint32_t n_qubits) : n_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("tableau needs at least 1 qubit");
    }
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("tableau width exceeds 64 qubits");
    }
    rows_.resize(2 * n_);
    for (uint32_t i = 0; i < n_; i++) {
        rows_[i] = {uint64_t{1} << i, 0, false};       // destabilizer X_i
        rows_[n_ + i] = {0, uint64_t{1} << i, false};  // stabilizer Z_i
    }
}

PauliString StabilizerTableau::row_pauli(const Row& r) const {
    return PauliString(n_, r.x, r.z, r.negative ? 2 : 0);
}

PauliString StabilizerTableau::stabilizer(uint32_t i) const {
    return row_pauli(rows_.at(n_ + i));
}

PauliString StabilizerTableau::destabilizer(uint32_t i) const {
    return row_pauli(rows_.at(i));
}

void StabilizerTableau::check_qubit(uint32_t q) const {
    if (q >= n_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void StabilizerTableau::apply_h(uint32_t q) {
    check_qubit(q);
    uint64_t bit = uint64_t{1} << q;
    for (auto& r : rows_) {
        bool x = r.x & bit;
        bool z = r.z & bit;
        r.negative ^= x && z;
        if (x != z) {
            r.x ^= bit;
            r.z ^= bit;
        }
    }
}

void StabilizerTableau::apply_s(uint32_t q) {
    check_qubit(q);
    uint64_t bit = uint64_t{1} << q;
    for (auto& r : rows_) {
        bool x = r.x & bit;
        bool z = r.z & bit;
        r.negative ^= x && z;
        if (x) {
            r.z ^= bit;
        }
    }
}

void StabilizerTableau::apply_cnot(uint32_t control, uint32_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT qubits must be distinct");
    }
    uint64_t cbit = uint64_t{1} << control;
    uint64_t tbit = uint64_t{1} << target;
    for (auto& r : rows_) {
        bool xc = r.x & cbit;
        bool zc = r.z & cbit;
        bool xt = r.x & tbit;
        bool zt = r.z & tbit;
        r.negative ^= xc && zt && (xt == zc);
        if (xc) {
            r.x ^= tbit;
        }
        if (zt) {
            r.z ^= cbit;
        }
    }
}

void StabilizerTableau::apply_cz(uint32_t a, uint32_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw std::invalid_argument("CZ qubits must be distinct");
    }
    apply_h(b);
    apply_cnot(a, b);
    apply_h(b);
}

void StabilizerTableau::apply_clifford(CliffordGate gate, uint32_t q0, uint32_t q1) {
    switch (gate) {
        case CliffordGate::H:
            apply_h(q0);
            return;
        case CliffordGate::S:
            apply_s(q0);
            return;
        case CliffordGate::CNOT:
            apply_cnot(q0, q1);
            return;
        case CliffordGate::CZ:
            apply_cz(q0, q1);
            return;
    }
    throw std::invalid_argument("unknown Clifford gate");
}

void StabilizerTableau::apply_pauli_rotation(const PauliString& generator, int k) {
    if (generator.n_qubits() != n_) {
        throw std::invalid_argument("rotation generator width mismatch");
    }
    if (generator.phase_exponent() != 0) {
        throw std::invalid_argument("rotation generator must be phase-free");
    }
    if (generator.is_identity()) {
        throw std::invalid_argument("rotation generator must not be identity");
    }
    k = ((k % 4) + 4) % 4;
    if (k == 0) {
        return;
    }
    for (auto& r : rows_) {
        int anti = std::popcount(r.x & generator.z_mask()) +
                   std::popcount(r.z & generator.x_mask());
        if ((anti & 1) == 0) {
            continue;
        }
        if (k == 2) {
            r.negative = !r.negative;
            continue;
        }
        // k=1: Q -> -i P Q; k=3: Q -> +i P Q. The result is Hermitian, so
        // the accumulated phase is +-1 and folds into the sign.
        PauliString product = generator * row_pauli(r);
        int ph = (product.phase_exponent() + (k == 1 ? 3 : 1)) % 4;
        r.x = product.x_mask();
        r.z = product.z_mask();
        r.negative = ph == 2;
    }
}

int StabilizerTableau::expectation(const PauliString& p) const {
    if (p.n_qubits() != n_) {
        throw std::invalid_argument("observable width mismatch");
    }
    if (p.phase_exponent() != 0) {
        throw std::invalid_argument("observable must be phase-free");
    }
    for (uint32_t i = 0; i < n_; i++) {
        const Row& s = rows_[n_ + i];
        int anti = std::popcount(p.x_mask() & s.z) + std::popcount(p.z_mask() & s.x);
        if (anti & 1) {
            return 0;
        }
    }
    // p commutes with the whole group, so it equals +-(product of the
    // stabilizers whose paired destabilizer anticommutes with p).
    PauliString acc(n_);
    for (uint32_t i = 0; i < n_; i++) {
        const Row& d = rows_[i];
        int anti = std::popcount(p.x_mask() & d.z) + std::popcount(p.z_mask() & d.x);
        if (anti & 1) {
            acc = acc * row_pauli(rows_[n_ + i]);
        }
    }
    if (acc.x_mask() != p.x_mask() || acc.z_mask() != p.z_mask()) {
        throw std::logic_error("tableau synthesis failed; generators inconsistent");
    }
    return acc.phase_exponent() == 0 ? 1 : -1;
}

}  // namespace flqas
