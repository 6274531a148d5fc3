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

#include "flqas/search.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "flqas/rng.hpp"

namespace flqas {

namespace {

// Relative tolerance for argmax ties; keeps selections stable under exact
// rescalings of the Hamiltonian.
constexpr double kTieTol = 1e-9;

bool clearly_better(double a, double b) {
    return a > b + kTieTol * std::max({1.0, std::abs(a), std::abs(b)});
}

void validate(const SearchConfig& cfg) {
    if (cfg.delta <= 0 || cfg.delta > 1) {
        throw std::invalid_argument("decay base must be in (0, 1]");
    }
    if (cfg.window < 0 || cfg.l_min > cfg.l_max || cfg.l_min < 1) {
        throw std::invalid_argument("invalid layer bounds");
    }
    if (cfg.epsilon <= 0 || cfg.epsilon >= 1) {
        throw std::invalid_argument("epsilon must be in (0, 1)");
    }
    if (cfg.elimination_ratio < 0 || cfg.elimination_ratio >= 1) {
        throw std::invalid_argument("elimination ratio must be in [0, 1)");
    }
    if (cfg.n_samples < 2) {
        throw std::invalid_argument("need at least 2 predictor samples");
    }
}

nlohmann::json candidate_json(const CandidateScore& cs) {
    return {{"label", cs.label},      {"rf", cs.rf},
            {"alpha", cs.alpha},      {"score_raw", cs.score_raw},
            {"score", cs.score},      {"stderr_rf", cs.stderr_rf}};
}

}  // namespace

double penalized_rf(double rf) {
    return std::max(0.0, std::min(rf, 2.0 - rf));
}

double decay_factor(const Circuit& c, const std::string& label, const SearchConfig& cfg) {
    const auto& layers = c.layers();
    int window = std::min<int>(cfg.window, static_cast<int>(layers.size()));
    int occurrences = 0;
    for (int i = 0; i < window; i++) {
        if (layers[layers.size() - 1 - i].label == label) {
            occurrences++;
        }
    }
    return std::pow(cfg.delta, occurrences);
}

CandidateScore score_candidate(const Circuit& c, const LayerTemplate& tmpl, const Hamiltonian& h,
                               const SearchConfig& cfg, int step, int candidate_index) {
    Circuit grown = c.with_layer(tmpl);
    uint64_t seed = derive_seed(cfg.seed, 0x57e9, static_cast<uint64_t>(step),
                                static_cast<uint64_t>(candidate_index));
    auto est = estimate_rf(grown, h, cfg.n_samples, seed, cfg.workers);
    double alpha = decay_factor(c, tmpl.label, cfg);
    return {tmpl.label, est.rf,  alpha, est.rf * alpha, penalized_rf(est.rf) * alpha,
            est.stderr_rf};
}

std::pair<Circuit, SearchTrace> layerwise_search(const Hamiltonian& h,
                                                 const std::vector<LayerTemplate>& pool,
                                                 const SearchConfig& cfg) {
    validate(cfg);
    if (pool.empty()) {
        throw std::invalid_argument("empty layer pool");
    }

    // Seed circuit: one transversal layer of the pool's first single-qubit
    // rotation (RY preferred) so that M >= 1 before the first scoring round.
    const LayerTemplate* seed_tmpl = nullptr;
    for (const auto& tmpl : pool) {
        if (!gate_is_two_qubit(tmpl.kind) && gate_is_parameterized(tmpl.kind)) {
            if (tmpl.kind == GateKind::RY) {
                seed_tmpl = &tmpl;
                break;
            }
            if (seed_tmpl == nullptr) {
                seed_tmpl = &tmpl;
            }
        }
    }
    if (seed_tmpl == nullptr) {
        throw std::runtime_error("pool has no single-qubit rotation layer to seed the search");
    }
    Circuit circuit = Circuit(h.n_qubits()).with_layer(*seed_tmpl);

    SearchTrace trace;
    while (circuit.depth() < cfg.l_max) {
        int step = static_cast<int>(trace.steps.size());
        SearchStep record;
        int best = -1;
        for (int i = 0; i < static_cast<int>(pool.size()); i++) {
            record.candidates.push_back(score_candidate(circuit, pool[i], h, cfg, step, i));
            if (best == -1 || clearly_better(record.candidates[i].score,
                                             record.candidates[best].score)) {
                best = i;
            }
        }
        circuit = circuit.with_layer(pool[best]);
        record.chosen = pool[best].label;
        record.chosen_score = record.candidates[best].score;
        record.gate_count = circuit.gate_count();
        record.param_count = circuit.param_count();
        // The decay factor only biases selection away from repeats; the
        // stopping test looks at the grown circuit's own landscape quality.
        double circuit_score = penalized_rf(record.candidates[best].rf);
        trace.steps.push_back(std::move(record));
        if (circuit_score > 1 - cfg.epsilon && circuit.depth() >= cfg.l_min) {
            break;
        }
    }
    return {circuit, trace};
}

namespace {

std::string gate_label(const Circuit& c, GatePosition pos) {
    const Gate& g = c.gate_at(pos);
    std::ostringstream out;
    out << gate_kind_name(g.kind) << "@L" << pos.layer << "[q" << g.qubits[0];
    if (g.qubits[1] >= 0) {
        out << ",q" << g.qubits[1];
    }
    out << "]";
    return out.str();
}

}  // namespace

std::pair<Circuit, EliminationTrace> eliminate_redundancy(const Circuit& c, const Hamiltonian& h,
                                                          const SearchConfig& cfg) {
    validate(cfg);
    EliminationTrace trace;
    int target = static_cast<int>(std::ceil(cfg.elimination_ratio * c.gate_count()));
    if (cfg.elimination_rounds >= 0) {
        target = std::min(target, cfg.elimination_rounds);
    }
    Circuit current = c;
    for (int round = 0; round < target; round++) {
        auto current_est = estimate_rf(current, h, cfg.n_samples,
                                       derive_seed(cfg.seed, 0xe1a0, round, 0xffff), cfg.workers);
        EliminationRound record;
        record.rf_before = current_est.rf;

        // The most redundant gate is the one whose removal perturbs the
        // relative fluctuation the least: a gate that merges into a
        // neighbour (or acts trivially) leaves the loss landscape essentially
        // unchanged, while a load-bearing gate shifts it. Ranking by the
        // resulting rf instead would preferentially delete the most
        // impactful gates.
        std::vector<GatePosition> positions;
        for (int li = 0; li < current.depth(); li++) {
            int n_gates = static_cast<int>(current.layers()[li].gates.size());
            for (int gi = 0; gi < n_gates; gi++) {
                GatePosition pos{li, gi};
                if (current.gate_at(pos).param >= 0 && current.param_count() <= 1) {
                    continue;  // never remove the last parameterized gate
                }
                positions.push_back(pos);
            }
        }
        // Every candidate in a round shares one sample stream (common random
        // numbers): the per-sample angle noise then cancels in comparisons,
        // so the ranking reflects the gates rather than the sampling. The
        // batch estimator exploits the shared stream to simulate the common
        // circuit prefix once per sample.
        auto ests = estimate_rf_removals(current, h, positions, cfg.n_samples,
                                         derive_seed(cfg.seed, 0xe1a1, round, 0), cfg.workers);
        int best_index = -1;
        GatePosition best_pos{-1, -1};
        double best_rf = 0;
        double best_delta = 0;
        for (size_t i = 0; i < positions.size(); i++) {
            const auto& est = ests[i];
            record.candidates.push_back({gate_label(current, positions[i]), est.rf, 1.0, est.rf,
                                         penalized_rf(est.rf), est.stderr_rf});
            double delta = std::abs(est.rf - current_est.rf);
            if (best_index == -1 || clearly_better(best_delta, delta)) {
                best_index = static_cast<int>(i);
                best_pos = positions[i];
                best_rf = est.rf;
                best_delta = delta;
            }
        }
        if (best_index == -1) {
            break;  // nothing removable
        }
        if (!cfg.force_ratio && best_delta > current_est.stderr_rf) {
            break;  // every removal perturbs rf beyond the noise floor
        }
        record.removed_layer = best_pos.layer;
        record.removed_gate = best_pos.gate;
        record.removed_label = gate_label(current, best_pos);
        record.rf_after = best_rf;
        current = current.without_gate(best_pos);
        trace.rounds.push_back(std::move(record));
    }
    return {current, trace};
}

std::string SearchTrace::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& step : steps) {
        nlohmann::json js;
        js["chosen"] = step.chosen;
        js["chosen_score"] = step.chosen_score;
        js["gate_count"] = step.gate_count;
        js["param_count"] = step.param_count;
        js["candidates"] = nlohmann::json::array();
        for (const auto& cs : step.candidates) {
            js["candidates"].push_back(candidate_json(cs));
        }
        j.push_back(js);
    }
    return j.dump(2);
}

std::string SearchTrace::to_csv() const {
    std::ostringstream out;
    out.precision(12);
    out << "step,label,rf,alpha,score\n";
    for (size_t s = 0; s < steps.size(); s++) {
        for (const auto& cs : steps[s].candidates) {
            out << s << "," << cs.label << "," << cs.rf << "," << cs.alpha << "," << cs.score
                << "\n";
        }
    }
    return out.str();
}

std::string EliminationTrace::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& round : rounds) {
        nlohmann::json jr;
        jr["removed_layer"] = round.removed_layer;
        jr["removed_gate"] = round.removed_gate;
        jr["removed_label"] = round.removed_label;
        jr["rf_before"] = round.rf_before;
        jr["rf_after"] = round.rf_after;
        jr["candidates"] = nlohmann::json::array();
        for (const auto& cs : round.candidates) {
            jr["candidates"].push_back(candidate_json(cs));
        }
        j.push_back(jr);
    }
    return j.dump(2);
}

}  // namespace flqas
