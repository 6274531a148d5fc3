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

#ifndef FLQAS_SEARCH_HPP
#define FLQAS_SEARCH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flqas/circuit.hpp"
#include "flqas/fluctuation.hpp"
#include "flqas/layergen.hpp"
#include "flqas/pauli.hpp"

namespace flqas {

struct SearchConfig {
    double delta = 0.8;           // decay base
    int window = 5;               // decay counting window over trailing layers
    double epsilon = 0.20;        // stopping slack on the circuit's penalized rf
    int l_min = 4;
    int l_max = 40;
    int n_samples = 1000;
    uint64_t seed = 0;
    double elimination_ratio = 0.20;
    int elimination_rounds = -1;  // -1: derived from elimination_ratio
    bool force_ratio = false;     // ignore the score-drop guard (ratio sweeps)
    int workers = 1;
};

struct CandidateScore {
    std::string label;
    double rf;
    double alpha;
    double score_raw;  // rf * alpha
    double score;      // penalized: max(0, min(rf, 2-rf)) * alpha
    double stderr_rf;
};

struct SearchStep {
    std::vector<CandidateScore> candidates;
    std::string chosen;
    double chosen_score;
    int gate_count;
    int param_count;
};

struct SearchTrace {
    std::vector<SearchStep> steps;

    std::string to_json() const;
    std::string to_csv() const;  // step,label,rf,alpha,score
};

struct EliminationRound {
    std::vector<CandidateScore> candidates;  // label = gate description
    int removed_layer;
    int removed_gate;
    std::string removed_label;
    double rf_before;
    double rf_after;
};

struct EliminationTrace {
    std::vector<EliminationRound> rounds;

    std::string to_json() const;
};

/// Penalty that treats rf = 1 as ideal: min(rf, 2 - rf) clamped at zero.
double penalized_rf(double rf);

/// delta^(occurrences of `label` among the last `window` layer labels).
double decay_factor(const Circuit& c, const std::string& label, const SearchConfig& cfg);

/// Scores c + template. The estimate seed derives from (cfg.seed, step,
/// candidate index) so repeated evaluations never share noise.
CandidateScore score_candidate(const Circuit& c, const LayerTemplate& tmpl, const Hamiltonian& h,
                               const SearchConfig& cfg, int step, int candidate_index);

/// Layer-wise growth: appends the argmax-scoring template until l_max, with
/// early stop once the grown circuit's penalized rf (no decay factor)
/// clears 1 - epsilon at depth >= l_min.
std::pair<Circuit, SearchTrace> layerwise_search(const Hamiltonian& h,
                                                 const std::vector<LayerTemplate>& pool,
                                                 const SearchConfig& cfg);

/// Greedy redundancy elimination: repeatedly removes the gate whose removal
/// perturbs rf the least (the most redundant gate leaves the loss landscape
/// unchanged), up to ceil(elimination_ratio * gate_count) removals, stopping
/// early once every removal would shift rf by more than the current
/// estimate's stderr (unless force_ratio).
std::pair<Circuit, EliminationTrace> eliminate_redundancy(const Circuit& c, const Hamiltonian& h,
                                                          const SearchConfig& cfg);

}  // namespace flqas

#endif
