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

#include "flqas/vqe.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "flqas/rng.hpp"

namespace flqas {

namespace {

void check_dense_width(uint32_t n) {
    if (n > kMaxDenseQubits) {
        throw std::invalid_argument("dense simulation limited to " +
                                    std::to_string(kMaxDenseQubits) + " qubits");
    }
}

// Coefficient f(a) with P|a> = f(a) |a ^ x>, for a phase-free P.
inline std::complex<double> pauli_basis_factor(const PauliString& p, uint64_t a) {
    int e = std::popcount(p.x_mask() & p.z_mask()) + 2 * std::popcount(a & p.z_mask());
    switch (e & 3) {
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

void apply_rotation(StateVector& psi, const PauliString& p, double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const std::complex<double> minus_is(0, -s);
    const uint64_t x = p.x_mask();
    const uint64_t dim = psi.size();
    if (x == 0) {
        for (uint64_t b = 0; b < dim; b++) {
            psi[b] *= c + minus_is * pauli_basis_factor(p, b);
        }
        return;
    }
    for (uint64_t b = 0; b < dim; b++) {
        uint64_t b2 = b ^ x;
        if (b2 < b) {
            continue;
        }
        auto amp_b = psi[b];
        auto amp_b2 = psi[b2];
        psi[b] = c * amp_b + minus_is * pauli_basis_factor(p, b2) * amp_b2;
        psi[b2] = c * amp_b2 + minus_is * pauli_basis_factor(p, b) * amp_b;
    }
}

void apply_cz(StateVector& psi, int a, int b) {
    uint64_t mask = (uint64_t{1} << a) | (uint64_t{1} << b);
    for (uint64_t i = 0; i < psi.size(); i++) {
        if ((i & mask) == mask) {
            psi[i] = -psi[i];
        }
    }
}

// <psi| P |psi> for a phase-free Pauli.
std::complex<double> pauli_expectation(const StateVector& psi, const PauliString& p) {
    std::complex<double> acc = 0;
    uint64_t x = p.x_mask();
    for (uint64_t b = 0; b < psi.size(); b++) {
        acc += std::conj(psi[b]) * pauli_basis_factor(p, b ^ x) * psi[b ^ x];
    }
    return acc;
}

// H|psi>, matrix-free.
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& psi) {
    StateVector out(psi.size(), {0, 0});
    for (const auto& term : h.terms()) {
        uint64_t x = term.op.x_mask();
        for (uint64_t b = 0; b < psi.size(); b++) {
            out[b] += term.coefficient * pauli_basis_factor(term.op, b ^ x) * psi[b ^ x];
        }
    }
    return out;
}

}  // namespace

StateVector simulate(const Circuit& c, std::span<const double> params) {
    check_dense_width(c.n_qubits());
    if (static_cast<int>(params.size()) != c.param_count()) {
        throw std::invalid_argument("parameter vector length mismatch");
    }
    StateVector psi(uint64_t{1} << c.n_qubits(), {0, 0});
    psi[0] = {1, 0};
    for (const auto& layer : c.layers()) {
        for (const auto& g : layer.gates) {
            if (g.kind == GateKind::CZ) {
                apply_cz(psi, g.qubits[0], g.qubits[1]);
            } else {
                apply_rotation(psi, c.gate_generator(g), params[g.param]);
            }
        }
    }
    return psi;
}

double energy(const StateVector& state, const Hamiltonian& h) {
    if (state.size() != (uint64_t{1} << h.n_qubits())) {
        throw std::invalid_argument("state dimension does not match Hamiltonian");
    }
    double acc = 0;
    for (const auto& term : h.terms()) {
        acc += term.coefficient * pauli_expectation(state, term.op).real();
    }
    return acc;
}

std::vector<double> gradient(const Circuit& c, std::span<const double> params,
                             const Hamiltonian& h) {
    std::vector<double> shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (size_t i = 0; i < params.size(); i++) {
        shifted[i] = params[i] + M_PI / 2;
        double plus = energy(simulate(c, shifted), h);
        shifted[i] = params[i] - M_PI / 2;
        double minus = energy(simulate(c, shifted), h);
        shifted[i] = params[i];
        grad[i] = (plus - minus) / 2;
    }
    return grad;
}

namespace {

struct RestartOutcome {
    double final_energy;
    int iterations;
    std::vector<double> params;
    std::vector<double> curve;
};

RestartOutcome run_restart(const Circuit& c, const Hamiltonian& h, const TrainConfig& cfg,
                           int restart, bool record_curve,
                           const std::chrono::steady_clock::time_point& deadline,
                           bool has_deadline, bool& timed_out) {
    SplitMix64 rng(derive_seed(cfg.seed, 0xada2, restart));
    int m = c.param_count();
    std::vector<double> theta(m);
    if (restart == 0 && !cfg.init_params.empty()) {
        theta = cfg.init_params;
    } else {
        for (auto& t : theta) {
            t = rng.next_double() * 2 * M_PI;
        }
    }
    std::vector<double> m1(m, 0), m2(m, 0);
    const double b1 = 0.9, b2 = 0.999, eps = 1e-8;

    double loss = energy(simulate(c, theta), h);
    RestartOutcome out;
    if (record_curve) {
        out.curve.push_back(loss);
    }
    int plateau = 0;
    int iter = 0;
    for (; iter < cfg.max_iters; iter++) {
        if (has_deadline && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            break;
        }
        auto g = gradient(c, theta, h);
        for (int i = 0; i < m; i++) {
            m1[i] = b1 * m1[i] + (1 - b1) * g[i];
            m2[i] = b2 * m2[i] + (1 - b2) * g[i] * g[i];
            double mhat = m1[i] / (1 - std::pow(b1, iter + 1));
            double vhat = m2[i] / (1 - std::pow(b2, iter + 1));
            theta[i] -= cfg.learning_rate * mhat / (std::sqrt(vhat) + eps);
        }
        double new_loss = energy(simulate(c, theta), h);
        if (record_curve) {
            out.curve.push_back(new_loss);
        }
        plateau = std::abs(new_loss - loss) < cfg.tol ? plateau + 1 : 0;
        loss = new_loss;
        if (plateau >= 10) {
            iter++;
            break;
        }
    }
    out.final_energy = loss;
    out.iterations = iter;
    out.params = std::move(theta);
    return out;
}

}  // namespace

TrainResult train(const Circuit& c, const Hamiltonian& h, const TrainConfig& cfg,
                  bool record_curves) {
    if (cfg.n_restarts < 1 || cfg.learning_rate <= 0) {
        throw std::invalid_argument("invalid training config");
    }
    if (!cfg.init_params.empty() &&
        cfg.init_params.size() != static_cast<size_t>(c.param_count())) {
        throw std::invalid_argument("init_params size does not match the parameter count");
    }
    if (c.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("circuit and Hamiltonian width mismatch");
    }
    check_dense_width(c.n_qubits());

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(cfg.timeout_secs));
    bool has_deadline = cfg.timeout_secs > 0;

    std::vector<RestartOutcome> outcomes(cfg.n_restarts);
    std::vector<char> timed_out_flags(cfg.n_restarts, 0);
    int workers = std::max(1, cfg.workers);
    auto run_range = [&](int begin, int end) {
        for (int r = begin; r < end; r++) {
            bool flag = false;
            outcomes[r] =
                run_restart(c, h, cfg, r, record_curves, deadline, has_deadline, flag);
            timed_out_flags[r] = flag;
        }
    };
    if (workers == 1) {
        run_range(0, cfg.n_restarts);
    } else {
        std::vector<std::thread> pool;
        int chunk = (cfg.n_restarts + workers - 1) / workers;
        for (int w = 0; w < workers; w++) {
            int begin = w * chunk;
            int end = std::min(cfg.n_restarts, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run_range, begin, end);
            }
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    TrainResult result;
    result.ground_energy = exact_ground_energy(h);
    result.best_energy = outcomes[0].final_energy;
    result.best_params = outcomes[0].params;
    double sum = 0, iter_sum = 0;
    for (int r = 0; r < cfg.n_restarts; r++) {
        double e = outcomes[r].final_energy;
        result.final_energies.push_back(e);
        if (e < result.best_energy) {
            result.best_energy = e;
            result.best_params = outcomes[r].params;
        }
        sum += e;
        iter_sum += outcomes[r].iterations;
        result.timed_out = result.timed_out || timed_out_flags[r];
        if (record_curves) {
            for (size_t i = 0; i < outcomes[r].curve.size(); i++) {
                result.curves.push_back({r, static_cast<int>(i), outcomes[r].curve[i]});
            }
        }
    }
    result.mean_energy = sum / cfg.n_restarts;
    result.mean_iterations = iter_sum / cfg.n_restarts;
    result.e_ratio = result.best_energy / result.ground_energy;
    result.mean_e_ratio = result.mean_energy / result.ground_energy;
    return result;
}

std::vector<double> dense_spectrum(const Hamiltonian& h) {
    if (h.n_qubits() > 10) {
        throw std::invalid_argument("dense spectrum limited to 10 qubits");
    }
    uint64_t dim = uint64_t{1} << h.n_qubits();
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& term : h.terms()) {
        uint64_t x = term.op.x_mask();
        for (uint64_t a = 0; a < dim; a++) {
            mat(a ^ x, a) += term.coefficient * pauli_basis_factor(term.op, a);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat, Eigen::EigenvaluesOnly);
    std::vector<double> eigs(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + dim);
    return eigs;
}

namespace {

// Lanczos with full reorthogonalization, matrix-free.
double lanczos_ground_energy(const Hamiltonian& h) {
    uint64_t dim = uint64_t{1} << h.n_qubits();
    SplitMix64 rng(0x1a9c20241ULL);
    StateVector v(dim);
    double norm = 0;
    for (auto& a : v) {
        a = {rng.next_double() - 0.5, rng.next_double() - 0.5};
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (auto& a : v) {
        a /= norm;
    }

    const int max_iters = 400;
    std::vector<StateVector> basis;
    std::vector<double> alpha, beta;
    double ground = 0;
    for (int it = 0; it < max_iters; it++) {
        basis.push_back(v);
        StateVector w = apply_hamiltonian(h, v);
        // Reorthogonalize against the full basis.
        for (const auto& u : basis) {
            std::complex<double> overlap = 0;
            for (uint64_t b = 0; b < dim; b++) {
                overlap += std::conj(u[b]) * w[b];
            }
            if (&u == &basis.back()) {
                alpha.push_back(overlap.real());
            }
            for (uint64_t b = 0; b < dim; b++) {
                w[b] -= overlap * u[b];
            }
        }
        double wn = 0;
        for (const auto& a : w) {
            wn += std::norm(a);
        }
        wn = std::sqrt(wn);

        int k = static_cast<int>(alpha.size());
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(k, k);
        for (int i = 0; i < k; i++) {
            tri(i, i) = alpha[i];
            if (i + 1 < k) {
                tri(i, i + 1) = tri(i + 1, i) = beta[i];
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(tri);
        double new_ground = solver.eigenvalues()(0);
        // Residual bound |beta_k * last component of the ground eigenvector|.
        double resid = wn * std::abs(solver.eigenvectors()(k - 1, 0));
        ground = new_ground;
        if (resid < 1e-10 || wn < 1e-12 || it + 1 == max_iters ||
            static_cast<uint64_t>(k) >= dim) {
            break;
        }
        beta.push_back(wn);
        for (uint64_t b = 0; b < dim; b++) {
            v[b] = w[b] / wn;
        }
    }
    return ground;
}

}  // namespace

double exact_ground_energy(const Hamiltonian& h) {
    check_dense_width(h.n_qubits());
    if (h.n_qubits() <= 10) {
        return dense_spectrum(h).front();
    }
    return lanczos_ground_energy(h);
}

}  // namespace flqas
