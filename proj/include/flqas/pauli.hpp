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

#ifndef FLQAS_PAULI_HPP
#define FLQAS_PAULI_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flqas {

/// Hard cap on qubit count: both Pauli masks fit in a single 64-bit word.
inline constexpr uint32_t kMaxQubits = 64;

/// An n-qubit Pauli operator with a phase in {+1, +i, -1, -i}.
///
/// Qubit q carries I/X/Y/Z according to (x,z) bits (0,0)/(1,0)/(1,1)/(0,1).
/// Qubit 0 is the leftmost character in the text form. The phase is stored
/// as an exponent p with phase = i^p.
class PauliString {
  public:
    /// Identity on n qubits.
    explicit PauliString(uint32_t n_qubits);

    PauliString(uint32_t n_qubits, uint64_t x_mask, uint64_t z_mask, int phase_exponent = 0);

    /// Parses "XZI"-style text. Throws std::invalid_argument on a bad
    /// symbol, naming the offending index.
    static PauliString from_text(std::string_view symbols, int phase_exponent = 0);

    uint32_t n_qubits() const { return n_qubits_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }

    /// Phase exponent p in [0, 4), phase = i^p.
    int phase_exponent() const { return phase_exp_; }
    std::complex<double> phase() const;

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    bool is_hermitian() const { return (phase_exp_ & 1) == 0; }

    /// Symbol at qubit q, one of 'I','X','Y','Z'.
    char pauli_at(uint32_t q) const;
    void set_pauli(uint32_t q, char symbol);

    /// Text form without the phase prefix.
    std::string to_text() const;
    /// Text form with a +/-/+i/-i prefix.
    std::string str() const;

    bool commutes_with(const PauliString& other) const;

    /// Group product with exact phase tracking. Throws on width mismatch.
    PauliString operator*(const PauliString& other) const;

    bool operator==(const PauliString& other) const = default;

    /// Phase-stripped copy (phase forced to +1).
    PauliString without_phase() const { return PauliString(n_qubits_, x_, z_, 0); }

    /// Number of qubits acted on nontrivially.
    uint32_t weight() const;

  private:
    uint32_t n_qubits_;
    uint64_t x_;
    uint64_t z_;
    int phase_exp_;  // phase = i^phase_exp_, in [0,4)
};

struct HamiltonianTerm {
    double coefficient;
    PauliString op;  // always phase-free
};

/// A real-weighted sum of phase-free Pauli strings. Terms are merged and
/// near-zero coefficients dropped on construction; the 1-norm of the
/// coefficient vector is cached.
class Hamiltonian {
  public:
    Hamiltonian(uint32_t n_qubits, std::vector<HamiltonianTerm> terms);

    uint32_t n_qubits() const { return n_qubits_; }
    const std::vector<HamiltonianTerm>& terms() const { return terms_; }
    double l1_norm() const { return l1_norm_; }
    bool empty() const { return terms_.empty(); }

    /// Same terms with every coefficient multiplied by c.
    Hamiltonian scaled(double c) const;

    bool operator==(const Hamiltonian& other) const;

    /// Coefficients below this magnitude are dropped on construction.
    static constexpr double kDropThreshold = 1e-12;

  private:
    uint32_t n_qubits_;
    std::vector<HamiltonianTerm> terms_;
    double l1_norm_;
};

enum class HamiltonianKind { Cluster, Heisenberg, Ising, Scrambled };

/// Parses one of "cluster", "heisenberg", "ising", "scrambled".
HamiltonianKind hamiltonian_kind_from_name(std::string_view name);
std::string hamiltonian_kind_name(HamiltonianKind kind);

/// Open-boundary chain benchmark Hamiltonians. `seed` and `depth` are
/// required for (and only used by) the scrambled kind.
Hamiltonian build_hamiltonian(HamiltonianKind kind, uint32_t n, uint64_t seed = 0,
                              uint32_t depth = 0);

Hamiltonian build_cluster(uint32_t n);
Hamiltonian build_heisenberg(uint32_t n);
Hamiltonian build_ising(uint32_t n);

/// Locally scrambled Hamiltonian: conjugates -sum_j Z_j by a reversed random
/// brickwall of two-qubit rotation blocks, expanded analytically in the
/// Pauli basis. Isospectral with -sum_j Z_j by construction.
Hamiltonian build_scrambled(uint32_t n, uint64_t seed, uint32_t depth);

/// Text format: one `<coefficient> <pauli symbols>` per line, `#` comments,
/// blank lines ignored. Throws with a line number on malformed input.
Hamiltonian read_hamiltonian(const std::string& path);
Hamiltonian parse_hamiltonian(std::istream& in);
void write_hamiltonian(const Hamiltonian& h, const std::string& path);
std::string format_hamiltonian(const Hamiltonian& h);

}  // namespace flqas

#endif
