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

#ifndef FLQAS_VQE_HPP
#define FLQAS_VQE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "flqas/circuit.hpp"
#include "flqas/pauli.hpp"

namespace flqas {

/// Dense simulation is limited to this many qubits.
inline constexpr uint32_t kMaxDenseQubits = 12;

using StateVector = std::vector<std::complex<double>>;

/// U(theta)|0...0> by dense statevector simulation, gates in circuit order
/// with R_P(theta) = exp(-i theta P / 2).
StateVector simulate(const Circuit& c, std::span<const double> params);

/// <psi| h |psi>; the imaginary residue is discarded (it is below 1e-10 for
/// any Hermitian h).
double energy(const StateVector& state, const Hamiltonian& h);

/// Parameter-shift gradient of the loss, exact for exp(-i theta P / 2) gates.
std::vector<double> gradient(const Circuit& c, std::span<const double> params,
                             const Hamiltonian& h);

struct TrainConfig {
    double learning_rate = 0.1;
    int max_iters = 500;
    int n_restarts = 100;
    double tol = 1e-7;       // plateau threshold on |delta loss|
    uint64_t seed = 0;
    int workers = 1;
    double timeout_secs = 0;  // 0 = unlimited
    // Warm start: if non-empty, restart 0 begins from these parameters
    // instead of a random draw. Size must equal the circuit's param count.
    std::vector<double> init_params;
};

struct TrainCurvePoint {
    int restart;
    int iteration;
    double energy;
};

struct TrainResult {
    double best_energy;
    std::vector<double> best_params;  // parameters of the best restart
    double mean_energy;
    double ground_energy;          // exact E0
    double e_ratio;                // best_energy / E0
    double mean_e_ratio;           // mean_energy / E0
    std::vector<double> final_energies;  // one per restart
    double mean_iterations;
    bool timed_out = false;
    std::vector<TrainCurvePoint> curves;  // filled iff record_curves
};

/// Adam training with uniform [0, 2pi) restarts; stops a restart after the
/// loss change stays below tol for 10 consecutive iterations.
TrainResult train(const Circuit& c, const Hamiltonian& h, const TrainConfig& cfg,
                  bool record_curves = false);

/// Minimum eigenvalue of h: dense diagonalization up to 10 qubits, Lanczos
/// with full reorthogonalization above (residual < 1e-9).
double exact_ground_energy(const Hamiltonian& h);

/// Full eigenvalue spectrum, ascending. Dense; n <= 10.
std::vector<double> dense_spectrum(const Hamiltonian& h);

}  // namespace flqas

#endif
