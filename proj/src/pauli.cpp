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

#include "flqas/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "flqas/rng.hpp"

namespace flqas {

namespace {

void check_width(uint32_t n) {
    if (n == 0) {
        throw std::invalid_argument("PauliString needs at least 1 qubit");
    }
    if (n > kMaxQubits) {
        throw std::invalid_argument("PauliString width exceeds " + std::to_string(kMaxQubits) +
                                    " qubits");
    }
}

uint64_t width_mask(uint32_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

}  // namespace

PauliString::PauliString(uint32_t n_qubits) : PauliString(n_qubits, 0, 0, 0) {}

PauliString::PauliString(uint32_t n_qubits, uint64_t x_mask, uint64_t z_mask, int phase_exponent)
    : n_qubits_(n_qubits),
      x_(x_mask & width_mask(n_qubits)),
      z_(z_mask & width_mask(n_qubits)),
      phase_exp_(((phase_exponent % 4) + 4) % 4) {
    check_width(n_qubits);
}

PauliString PauliString::from_text(std::string_view symbols, int phase_exponent) {
    if (symbols.empty()) {
        throw std::invalid_argument("empty Pauli string");
    }
    check_width(static_cast<uint32_t>(symbols.size()));
    uint64_t x = 0, z = 0;
    for (size_t q = 0; q < symbols.size(); q++) {
        uint64_t bit = uint64_t{1} << q;
        switch (symbols[q]) {
            case 'I':
                break;
            case 'X':
                x |= bit;
                break;
            case 'Y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument("invalid Pauli symbol '" +
                                            std::string(1, symbols[q]) + "' at index " +
                                            std::to_string(q));
        }
    }
    return PauliString(static_cast<uint32_t>(symbols.size()), x, z, phase_exponent);
}

std::complex<double> PauliString::phase() const {
    switch (phase_exp_) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

char PauliString::pauli_at(uint32_t q) const {
    bool x = (x_ >> q) & 1;
    bool z = (z_ >> q) & 1;
    return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

void PauliString::set_pauli(uint32_t q, char symbol) {
    if (q >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    uint64_t bit = uint64_t{1} << q;
    x_ &= ~bit;
    z_ &= ~bit;
    switch (symbol) {
        case 'I':
            break;
        case 'X':
            x_ |= bit;
            break;
        case 'Y':
            x_ |= bit;
            z_ |= bit;
            break;
        case 'Z':
            z_ |= bit;
            break;
        default:
            throw std::invalid_argument("invalid Pauli symbol");
    }
}

std::string PauliString::to_text() const {
    std::string out(n_qubits_, 'I');
    for (uint32_t q = 0; q < n_qubits_; q++) {
        out[q] = pauli_at(q);
    }
    return out;
}

std::string PauliString::str() const {
    static const char* prefixes[4] = {"+", "+i", "-", "-i"};
    return prefixes[phase_exp_] + to_text();
}

bool PauliString::commutes_with(const PauliString& other) const {
    if (n_qubits_ != other.n_qubits_) {
        throw std::invalid_argument("Pauli width mismatch");
    }
    int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
    return (anti & 1) == 0;
}

PauliString PauliString::operator*(const PauliString& other) const {
    if (n_qubits_ != other.n_qubits_) {
        throw std::invalid_argument("Pauli width mismatch");
    }
    // Work in the canonical form i^e X^x Z^z, where
    // e = phase_exp + popcount(x & z) since Y = i X Z.
    int e1 = phase_exp_ + std::popcount(x_ & z_);
    int e2 = other.phase_exp_ + std::popcount(other.x_ & other.z_);
    // Z^z1 X^x2 = (-1)^{|z1 & x2|} X^x2 Z^z1.
    int e = e1 + e2 + 2 * std::popcount(z_ & other.x_);
    uint64_t x = x_ ^ other.x_;
    uint64_t z = z_ ^ other.z_;
    int ph = e - std::popcount(x & z);
    return PauliString(n_qubits_, x, z, ph);
}

uint32_t PauliString::weight() const {
    return static_cast<uint32_t>(std::popcount(x_ | z_));
}

// ---------------------------------------------------------------------------

Hamiltonian::Hamiltonian(uint32_t n_qubits, std::vector<HamiltonianTerm> terms)
    : n_qubits_(n_qubits) {
    check_width(n_qubits);
    // Merge duplicates keyed on (x,z); keep a canonical sorted order.
    std::unordered_map<uint64_t, size_t> index;
    std::vector<HamiltonianTerm> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (t.op.n_qubits() != n_qubits) {
            throw std::invalid_argument("Hamiltonian term width mismatch");
        }
        if (t.op.phase_exponent() != 0) {
            throw std::invalid_argument("Hamiltonian terms must be phase-free");
        }
        if (t.op.is_identity()) {
            throw std::invalid_argument("identity term not allowed in Hamiltonian");
        }
        uint64_t key = t.op.x_mask() * 0x9e3779b97f4a7c15ULL ^ t.op.z_mask();
        auto [it, inserted] = index.try_emplace(key, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coefficient += t.coefficient;
        }
    }
    std::erase_if(merged,
                  [](const HamiltonianTerm& t) { return std::abs(t.coefficient) < kDropThreshold; });
    std::sort(merged.begin(), merged.end(), [](const HamiltonianTerm& a, const HamiltonianTerm& b) {
        if (a.op.x_mask() != b.op.x_mask()) {
            return a.op.x_mask() < b.op.x_mask();
        }
        return a.op.z_mask() < b.op.z_mask();
    });
    terms_ = std::move(merged);
    l1_norm_ = 0;
    for (const auto& t : terms_) {
        l1_norm_ += std::abs(t.coefficient);
    }
}

Hamiltonian Hamiltonian::scaled(double c) const {
    std::vector<HamiltonianTerm> out = terms_;
    for (auto& t : out) {
        t.coefficient *= c;
    }
    return Hamiltonian(n_qubits_, std::move(out));
}

bool Hamiltonian::operator==(const Hamiltonian& other) const {
    if (n_qubits_ != other.n_qubits_ || terms_.size() != other.terms_.size()) {
        return false;
    }
    for (size_t i = 0; i < terms_.size(); i++) {
        if (!(terms_[i].op == other.terms_[i].op) ||
            terms_[i].coefficient != other.terms_[i].coefficient) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

HamiltonianKind hamiltonian_kind_from_name(std::string_view name) {
    if (name == "cluster") return HamiltonianKind::Cluster;
    if (name == "heisenberg") return HamiltonianKind::Heisenberg;
    if (name == "ising") return HamiltonianKind::Ising;
    if (name == "scrambled") return HamiltonianKind::Scrambled;
    throw std::invalid_argument("unknown Hamiltonian kind: " + std::string(name));
}

std::string hamiltonian_kind_name(HamiltonianKind kind) {
    switch (kind) {
        case HamiltonianKind::Cluster:
            return "cluster";
        case HamiltonianKind::Heisenberg:
            return "heisenberg";
        case HamiltonianKind::Ising:
            return "ising";
        case HamiltonianKind::Scrambled:
            return "scrambled";
    }
    return "?";
}

namespace {

void check_chain(uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("chain Hamiltonians need n >= 2");
    }
    check_width(n);
}

PauliString single(uint32_t n, uint32_t q, char symbol) {
    PauliString p(n);
    p.set_pauli(q, symbol);
    return p;
}

}  // namespace

Hamiltonian build_cluster(uint32_t n) {
    check_chain(n);
    std::vector<HamiltonianTerm> terms;
    // Boundary terms X Z ... and ... Z X, bulk terms Z X Z.
    {
        PauliString left(n);
        left.set_pauli(0, 'X');
        left.set_pauli(1, 'Z');
        terms.push_back({-1.0, left});
    }
    for (uint32_t j = 1; j + 1 < n; j++) {
        PauliString p(n);
        p.set_pauli(j - 1, 'Z');
        p.set_pauli(j, 'X');
        p.set_pauli(j + 1, 'Z');
        terms.push_back({-1.0, p});
    }
    {
        PauliString right(n);
        right.set_pauli(n - 2, 'Z');
        right.set_pauli(n - 1, 'X');
        terms.push_back({-1.0, right});
    }
    return Hamiltonian(n, std::move(terms));
}

Hamiltonian build_heisenberg(uint32_t n) {
    check_chain(n);
    std::vector<HamiltonianTerm> terms;
    // Antiferromagnetic convention: with ferromagnetic (negative) couplings
    // and an aligned field the ground state is exactly |0...0>, which makes
    // the benchmark trivial for any ansatz. The antiferromagnetic chain has
    // an entangled ground state and matches the accuracy regime the
    // benchmark suite targets.
    for (uint32_t j = 0; j + 1 < n; j++) {
        for (char s : {'X', 'Y', 'Z'}) {
            PauliString p(n);
            p.set_pauli(j, s);
            p.set_pauli(j + 1, s);
            terms.push_back({1.0, p});
        }
    }
    for (uint32_t j = 0; j < n; j++) {
        terms.push_back({1.0, single(n, j, 'Z')});
    }
    return Hamiltonian(n, std::move(terms));
}

Hamiltonian build_ising(uint32_t n) {
    check_chain(n);
    std::vector<HamiltonianTerm> terms;
    for (uint32_t j = 0; j + 1 < n; j++) {
        PauliString p(n);
        p.set_pauli(j, 'Z');
        p.set_pauli(j + 1, 'Z');
        terms.push_back({-1.0, p});
    }
    for (uint32_t j = 0; j < n; j++) {
        terms.push_back({-1.0, single(n, j, 'X')});
    }
    return Hamiltonian(n, std::move(terms));
}

namespace {

// Sparse Pauli accumulator keyed on (x,z) masks.
using PauliMap = std::unordered_map<uint64_t, std::pair<PauliString, double>>;

uint64_t pauli_key(const PauliString& p) {
    return p.x_mask() * 0x9e3779b97f4a7c15ULL ^ p.z_mask();
}

void add_term(PauliMap& map, const PauliString& op, double coeff) {
    auto [it, inserted] = map.try_emplace(pauli_key(op), op, coeff);
    if (!inserted) {
        it->second.second += coeff;
    }
}

// Conjugates every accumulated term by exp(-i theta P / 2) from the right,
// i.e. Q -> R(theta)^dagger Q R(theta) = cos(theta) Q + sin(theta) (i P Q)
// for anticommuting Q; commuting terms pass through.
void conjugate_by_rotation(PauliMap& map, const PauliString& generator, double theta) {
    double c = std::cos(theta);
    double s = std::sin(theta);
    PauliMap next;
    next.reserve(map.size() * 2);
    for (auto& [key, term] : map) {
        auto& [op, coeff] = term;
        if (op.commutes_with(generator)) {
            add_term(next, op, coeff);
            continue;
        }
        add_term(next, op, coeff * c);
        PauliString rotated = generator * op;
        // i * P * Q is Hermitian when {P,Q} = 0; fold its sign into the
        // coefficient.
        int ph = (rotated.phase_exponent() + 1) % 4;
        double sign = ph == 0 ? 1.0 : -1.0;
        add_term(next, rotated.without_phase(), coeff * s * sign);
    }
    std::erase_if(next, [](const auto& kv) {
        return std::abs(kv.second.second) < Hamiltonian::kDropThreshold;
    });
    map = std::move(next);
}

PauliString two_site(uint32_t n, uint32_t a, uint32_t b, char sa, char sb) {
    PauliString p(n);
    p.set_pauli(a, sa);
    p.set_pauli(b, sb);
    return p;
}

}  // namespace

Hamiltonian build_scrambled(uint32_t n, uint64_t seed, uint32_t depth) {
    check_chain(n);
    if (depth == 0) {
        throw std::invalid_argument("scrambled Hamiltonian needs depth >= 1");
    }

    // Gate list of V, in application order. Each brickwall block on (a,b) is
    // a Cartan-style sandwich: per-qubit Rz/Ry, then Rxx/Ryy/Rzz, then
    // per-qubit Ry/Rz, all at uniformly random angles.
    SplitMix64 rng(derive_seed(seed, 0x5c2a, n, depth));
    std::vector<std::pair<PauliString, double>> gates;
    auto push_block = [&](uint32_t a, uint32_t b) {
        auto angle = [&] { return rng.next_double() * 2.0 * M_PI; };
        for (uint32_t q : {a, b}) {
            gates.emplace_back(single(n, q, 'Z'), angle());
            gates.emplace_back(single(n, q, 'Y'), angle());
        }
        gates.emplace_back(two_site(n, a, b, 'X', 'X'), angle());
        gates.emplace_back(two_site(n, a, b, 'Y', 'Y'), angle());
        gates.emplace_back(two_site(n, a, b, 'Z', 'Z'), angle());
        for (uint32_t q : {a, b}) {
            gates.emplace_back(single(n, q, 'Y'), angle());
            gates.emplace_back(single(n, q, 'Z'), angle());
        }
    };
    for (uint32_t d = 0; d < depth; d++) {
        for (uint32_t q = 0; q + 1 < n; q += 2) {
            push_block(q, q + 1);
        }
        for (uint32_t q = 1; q + 1 < n; q += 2) {
            push_block(q, q + 1);
        }
    }

    PauliMap map;
    for (uint32_t j = 0; j < n; j++) {
        add_term(map, single(n, j, 'Z'), -1.0);
    }
    // H_r = V^dagger H V: conjugate by the gates of V from last to first.
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        conjugate_by_rotation(map, it->first, it->second);
    }

    std::vector<HamiltonianTerm> terms;
    terms.reserve(map.size());
    for (auto& [key, term] : map) {
        terms.push_back({term.second, term.first});
    }
    return Hamiltonian(n, std::move(terms));
}

Hamiltonian build_hamiltonian(HamiltonianKind kind, uint32_t n, uint64_t seed, uint32_t depth) {
    switch (kind) {
        case HamiltonianKind::Cluster:
            return build_cluster(n);
        case HamiltonianKind::Heisenberg:
            return build_heisenberg(n);
        case HamiltonianKind::Ising:
            return build_ising(n);
        case HamiltonianKind::Scrambled:
            return build_scrambled(n, seed, depth);
    }
    throw std::invalid_argument("unknown Hamiltonian kind");
}

// ---------------------------------------------------------------------------

Hamiltonian parse_hamiltonian(std::istream& in) {
    std::vector<HamiltonianTerm> terms;
    std::string line;
    uint32_t n_qubits = 0;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        std::string coeff_text, symbols, extra;
        if (!(ls >> coeff_text)) {
            continue;  // blank line
        }
        if (!(ls >> symbols) || (ls >> extra)) {
            throw std::runtime_error("malformed Hamiltonian line " + std::to_string(line_no));
        }
        double coeff;
        size_t used = 0;
        try {
            coeff = std::stod(coeff_text, &used);
        } catch (const std::exception&) {
            throw std::runtime_error("bad coefficient on line " + std::to_string(line_no));
        }
        if (used != coeff_text.size()) {
            throw std::runtime_error("bad coefficient on line " + std::to_string(line_no));
        }
        PauliString op(1);
        try {
            op = PauliString::from_text(symbols);
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (n_qubits == 0) {
            n_qubits = op.n_qubits();
        } else if (op.n_qubits() != n_qubits) {
            throw std::runtime_error("inconsistent Pauli string length on line " +
                                     std::to_string(line_no));
        }
        terms.push_back({coeff, op});
    }
    if (terms.empty()) {
        throw std::runtime_error("Hamiltonian file contains no terms");
    }
    return Hamiltonian(n_qubits, std::move(terms));
}

Hamiltonian read_hamiltonian(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open Hamiltonian file: " + path);
    }
    return parse_hamiltonian(in);
}

std::string format_hamiltonian(const Hamiltonian& h) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& t : h.terms()) {
        out << t.coefficient << " " << t.op.to_text() << "\n";
    }
    return out.str();
}

void write_hamiltonian(const Hamiltonian& h, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write Hamiltonian file: " + path);
    }
    out << format_hamiltonian(h);
}

}  // namespace flqas
