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

#include "flqas/fluctuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "flqas/rng.hpp"
#include "flqas/stabilizer.hpp"
#include "flqas/vqe.hpp"

namespace flqas {

namespace {

constexpr int kBootstrapResamples = 200;

void check_inputs(const Circuit& c, const Hamiltonian& h) {
    if (c.n_qubits() != h.n_qubits()) {
        throw std::invalid_argument("circuit and Hamiltonian width mismatch");
    }
    if (c.param_count() < 1) {
        throw std::invalid_argument("circuit has no tunable parameters (sigma0 undefined)");
    }
    if (h.empty()) {
        throw std::invalid_argument("empty Hamiltonian");
    }
}

// Bootstrap standard error of rf over the raw loss samples.
double bootstrap_stderr(const std::vector<double>& losses, double l1, double sqrt_2m,
                        uint64_t seed) {
    size_t n = losses.size();
    SplitMix64 rng(derive_seed(seed, 0xb007));
    std::vector<double> rfs(kBootstrapResamples);
    for (int b = 0; b < kBootstrapResamples; b++) {
        double sum = 0, sumsq = 0;
        for (size_t i = 0; i < n; i++) {
            double v = losses[rng.next_below(n)];
            sum += v;
            sumsq += v * v;
        }
        double mean = sum / n;
        double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1));
        rfs[b] = std::sqrt(var) / l1 * sqrt_2m;
    }
    double mean = 0;
    for (double v : rfs) {
        mean += v;
    }
    mean /= kBootstrapResamples;
    double var = 0;
    for (double v : rfs) {
        var += (v - mean) * (v - mean);
    }
    return std::sqrt(var / (kBootstrapResamples - 1));
}

FluctuationEstimate estimate_from_losses(const std::vector<double>& losses, double l1, int m,
                                         uint64_t seed) {
    size_t n = losses.size();
    double sum = 0;
    for (double v : losses) {
        sum += v;
    }
    double mean = sum / n;
    double ss = 0;
    for (double v : losses) {
        ss += (v - mean) * (v - mean);
    }
    double var = ss / (n - 1);
    double sqrt_2m = std::sqrt(2.0 * m);
    FluctuationEstimate est;
    est.rf = std::sqrt(var) / l1 * sqrt_2m;
    est.sigma0 = 1.0 / sqrt_2m;
    est.sigma = est.rf * est.sigma0;
    est.n_samples = static_cast<int>(n);
    est.stderr_rf = bootstrap_stderr(losses, l1, sqrt_2m, seed);
    est.seed = seed;
    return est;
}

}  // namespace

double clifford_loss(const Circuit& c, const Hamiltonian& h, const DiscreteAssignment& a) {
    StabilizerTableau t = run_clifford_instance(c, a);
    double loss = 0;
    for (const auto& term : h.terms()) {
        loss += term.coefficient * t.expectation(term.op);
    }
    return loss;
}

FluctuationEstimate estimate_rf(const Circuit& c, const Hamiltonian& h, int n_samples,
                                uint64_t seed, int workers) {
    check_inputs(c, h);
    if (n_samples < 2) {
        throw std::invalid_argument("need at least 2 samples for a variance");
    }
    int m = c.param_count();
    std::vector<double> losses(n_samples);
    auto run_range = [&](int begin, int end) {
        for (int i = begin; i < end; i++) {
            SplitMix64 rng(derive_seed(seed, 0x5a3c, static_cast<uint64_t>(i)));
            DiscreteAssignment a(m);
            for (auto& v : a) {
                v = rng.next_quarter_turn();
            }
            losses[i] = clifford_loss(c, h, a);
        }
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        run_range(0, n_samples);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n_samples + workers - 1) / workers;
        for (int w = 0; w < workers; w++) {
            int begin = w * chunk;
            int end = std::min(n_samples, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run_range, begin, end);
            }
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    return estimate_from_losses(losses, h.l1_norm(), m, seed);
}

std::vector<FluctuationEstimate> estimate_rf_removals(const Circuit& c, const Hamiltonian& h,
                                                      const std::vector<GatePosition>& removals,
                                                      int n_samples, uint64_t seed, int workers) {
    check_inputs(c, h);
    if (n_samples < 2) {
        throw std::invalid_argument("need at least 2 samples for a variance");
    }
    int m = c.param_count();

    // Flatten the circuit once; gate order is shared by every candidate.
    struct FlatGate {
        PauliString generator;
        std::array<int, 2> qubits;
        int param;  // -1 for CZ
    };
    std::vector<FlatGate> flat;
    std::vector<std::vector<int>> flat_of(c.layers().size());
    for (size_t li = 0; li < c.layers().size(); li++) {
        for (const auto& g : c.layers()[li].gates) {
            flat_of[li].push_back(static_cast<int>(flat.size()));
            flat.push_back({g.param >= 0 ? c.gate_generator(g) : PauliString(c.n_qubits()),
                            g.qubits, g.param});
        }
    }

    struct Candidate {
        int flat_index;
        int param;  // removed parameter index, -1 for CZ
        int replay_from;  // first flat index whose angle can differ
    };
    std::vector<Candidate> cands;
    cands.reserve(removals.size());
    for (const auto& pos : removals) {
        const Gate& g = c.gate_at(pos);
        if (g.param >= 0 && m <= 1) {
            throw std::invalid_argument("removal leaves no tunable parameters");
        }
        Candidate cand{flat_of[static_cast<size_t>(pos.layer)][static_cast<size_t>(pos.gate)],
                       g.param, 0};
        // Angles match the pruned circuit up to the first gate whose
        // parameter index shifts. For circuits built by with_layer /
        // without_gate the parameter order follows the gate order, so this
        // is the removed gate itself; the general test keeps hand-written
        // circuits correct too.
        cand.replay_from = cand.flat_index;
        for (int fi = 0; fi < cand.flat_index; fi++) {
            if (cand.param >= 0 && flat[fi].param > cand.param) {
                cand.replay_from = fi;
                break;
            }
        }
        cands.push_back(cand);
    }

    std::vector<std::vector<double>> losses(cands.size(),
                                            std::vector<double>(static_cast<size_t>(n_samples)));
    auto run_range = [&](int begin, int end) {
        std::vector<int> v(static_cast<size_t>(m));
        std::vector<StabilizerTableau> snapshots;
        for (int i = begin; i < end; i++) {
            SplitMix64 rng(derive_seed(seed, 0x5a3c, static_cast<uint64_t>(i)));
            for (auto& val : v) {
                val = rng.next_quarter_turn();
            }
            // One pass over the full circuit, keeping the tableau before
            // each gate so candidates can start from their shared prefix.
            snapshots.clear();
            snapshots.reserve(flat.size());
            StabilizerTableau t(c.n_qubits());
            for (const auto& g : flat) {
                snapshots.push_back(t);
                if (g.param >= 0) {
                    int k = v[static_cast<size_t>(g.param)];
                    if (k != 0) {
                        t.apply_pauli_rotation(g.generator, k);
                    }
                } else {
                    t.apply_cz(g.qubits[0], g.qubits[1]);
                }
            }
            for (size_t ci = 0; ci < cands.size(); ci++) {
                const Candidate& cand = cands[ci];
                StabilizerTableau s = snapshots[static_cast<size_t>(cand.replay_from)];
                for (int fi = cand.replay_from; fi < static_cast<int>(flat.size()); fi++) {
                    if (fi == cand.flat_index) {
                        continue;
                    }
                    const FlatGate& g = flat[static_cast<size_t>(fi)];
                    if (g.param >= 0) {
                        // In the pruned circuit, parameters above the removed
                        // one shift down by one stream position.
                        int idx = (cand.param >= 0 && g.param > cand.param) ? g.param - 1
                                                                            : g.param;
                        int k = v[static_cast<size_t>(idx)];
                        if (k != 0) {
                            s.apply_pauli_rotation(g.generator, k);
                        }
                    } else {
                        s.apply_cz(g.qubits[0], g.qubits[1]);
                    }
                }
                double loss = 0;
                for (const auto& term : h.terms()) {
                    loss += term.coefficient * s.expectation(term.op);
                }
                losses[ci][static_cast<size_t>(i)] = loss;
            }
        }
    };
    workers = std::max(1, workers);
    if (workers == 1) {
        run_range(0, n_samples);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n_samples + workers - 1) / workers;
        for (int w = 0; w < workers; w++) {
            int begin = w * chunk;
            int end = std::min(n_samples, begin + chunk);
            if (begin < end) {
                pool.emplace_back(run_range, begin, end);
            }
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    std::vector<FluctuationEstimate> out;
    out.reserve(cands.size());
    for (size_t ci = 0; ci < cands.size(); ci++) {
        int m_pruned = cands[ci].param >= 0 ? m - 1 : m;
        out.push_back(estimate_from_losses(losses[ci], h.l1_norm(), m_pruned, seed));
    }
    return out;
}

double exact_rf_enumeration(const Circuit& c, const Hamiltonian& h) {
    check_inputs(c, h);
    int m = c.param_count();
    if (m > 30 || (uint64_t{1} << (2 * m)) > 1000000ULL) {
        throw std::invalid_argument(
            "exact enumeration refused: 4^M = " +
            (m > 30 ? std::string(">10^18") : std::to_string(uint64_t{1} << (2 * m))) +
            " assignments exceed the 10^6 budget");
    }
    uint64_t total = uint64_t{1} << (2 * m);
    double sum = 0, sumsq = 0;
    DiscreteAssignment a(m);
    for (uint64_t idx = 0; idx < total; idx++) {
        uint64_t v = idx;
        for (int i = 0; i < m; i++) {
            a[i] = static_cast<int>(v & 3);
            v >>= 2;
        }
        double loss = clifford_loss(c, h, a);
        sum += loss;
        sumsq += loss * loss;
    }
    double mean = sum / static_cast<double>(total);
    double var = std::max(0.0, sumsq / static_cast<double>(total) - mean * mean);
    return std::sqrt(var) / h.l1_norm() * std::sqrt(2.0 * m);
}

std::pair<double, double> continuous_rf_montecarlo(const Circuit& c, const Hamiltonian& h,
                                                   int n_samples, uint64_t seed) {
    check_inputs(c, h);
    if (c.n_qubits() > kMaxDenseQubits) {
        throw std::invalid_argument("continuous oracle limited to dense-simulable widths");
    }
    if (n_samples < 100) {
        throw std::invalid_argument("continuous oracle needs at least 100 samples");
    }
    int m = c.param_count();
    std::vector<double> losses(n_samples);
    std::vector<double> theta(m);
    for (int i = 0; i < n_samples; i++) {
        SplitMix64 rng(derive_seed(seed, 0xc047, static_cast<uint64_t>(i)));
        for (auto& t : theta) {
            t = rng.next_double() * 2 * M_PI;
        }
        losses[i] = energy(simulate(c, theta), h);
    }
    auto est = estimate_from_losses(losses, h.l1_norm(), m, seed);
    return {est.rf, est.stderr_rf};
}

}  // namespace flqas
