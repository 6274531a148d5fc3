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

#ifndef FLQAS_FLUCTUATION_HPP
#define FLQAS_FLUCTUATION_HPP

#include <cstdint>
#include <utility>

#include "flqas/circuit.hpp"
#include "flqas/pauli.hpp"

namespace flqas {

/// Landscape-fluctuation estimate for one circuit/Hamiltonian pair.
/// sigma is the standard deviation of the 1-norm-normalized loss over
/// uniformly random parameters, sigma0 = 1/sqrt(2M) the parameter-count
/// reference scale, and rf = sigma/sigma0 the relative fluctuation.
struct FluctuationEstimate {
    double sigma;
    double sigma0;
    double rf;
    int n_samples;
    double stderr_rf;  // bootstrap standard error of rf
    uint64_t seed;
};

/// Loss L = sum_j lambda_j <h_j> at one discrete quarter-turn assignment,
/// evaluated with the stabilizer engine.
double clifford_loss(const Circuit& c, const Hamiltonian& h, const DiscreteAssignment& a);

/// Estimates rf by uniform Clifford sampling. Deterministic in
/// (circuit, hamiltonian, n_samples, seed) for any worker count: sample i
/// always draws from the stream derived from (seed, i) and the reduction is
/// ordered by sample index.
FluctuationEstimate estimate_rf(const Circuit& c, const Hamiltonian& h, int n_samples,
                                uint64_t seed, int workers = 1);

/// Batch variant of estimate_rf for redundancy elimination: entry k equals
/// estimate_rf(c.without_gate(removals[k]), h, n_samples, seed, workers) bit
/// for bit. All candidates share one sample stream, so per sample the
/// tableau prefix up to the removed gate is simulated once and only the
/// suffix is replayed per candidate.
std::vector<FluctuationEstimate> estimate_rf_removals(const Circuit& c, const Hamiltonian& h,
                                                      const std::vector<GatePosition>& removals,
                                                      int n_samples, uint64_t seed,
                                                      int workers = 1);

/// Exact rf from enumeration of all 4^M discrete assignments. Refuses when
/// 4^M exceeds 10^6.
double exact_rf_enumeration(const Circuit& c, const Hamiltonian& h);

/// rf from continuous [0, 2pi)^M Monte Carlo over dense statevector
/// simulation; returns (rf, bootstrap stderr). Verification oracle only.
std::pair<double, double> continuous_rf_montecarlo(const Circuit& c, const Hamiltonian& h,
                                                   int n_samples, uint64_t seed);

}  // namespace flqas

#endif
