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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "flqas/layergen.hpp"
#include "flqas/pauli.hpp"
#include "flqas/search.hpp"

using namespace flqas;

namespace {

LayerTemplate transversal(const std::string& label, GateKind kind, int n) {
    LayerTemplate t{label, kind, {}};
    for (int q = 0; q < n; q++) {
        t.sites.push_back({q, -1});
    }
    return t;
}

Hamiltonian minus_z(uint32_t n) {
    std::vector<HamiltonianTerm> terms;
    for (uint32_t q = 0; q < n; q++) {
        PauliString p(n);
        p.set_pauli(q, 'Z');
        terms.push_back({-1.0, p});
    }
    return Hamiltonian(n, terms);
}

}  // namespace

TEST_CASE("penalized rf") {
    CHECK(penalized_rf(0.0) == doctest::Approx(0.0));
    CHECK(penalized_rf(0.7) == doctest::Approx(0.7));
    CHECK(penalized_rf(1.0) == doctest::Approx(1.0));
    CHECK(penalized_rf(1.3) == doctest::Approx(0.7));
    CHECK(penalized_rf(2.5) == doctest::Approx(0.0));
}

TEST_CASE("decay factor counts trailing window occurrences") {
    SearchConfig cfg;
    cfg.delta = 0.8;
    cfg.window = 5;
    Circuit c(2);
    CHECK(decay_factor(c, "ry", cfg) == doctest::Approx(1.0));
    c = c.with_layer(transversal("ry", GateKind::RY, 2));
    CHECK(decay_factor(c, "ry", cfg) == doctest::Approx(0.8));
    CHECK(decay_factor(c, "rx", cfg) == doctest::Approx(1.0));
    c = c.with_layer(transversal("ry", GateKind::RY, 2));
    CHECK(decay_factor(c, "ry", cfg) == doctest::Approx(0.64));
    // Only the trailing window counts.
    for (int i = 0; i < 5; i++) {
        c = c.with_layer(transversal("rx", GateKind::RX, 2));
    }
    CHECK(decay_factor(c, "ry", cfg) == doctest::Approx(1.0));
    CHECK(decay_factor(c, "rx", cfg) == doctest::Approx(std::pow(0.8, 5)));
}

TEST_CASE("config validation") {
    auto h = minus_z(2);
    std::vector<LayerTemplate> pool{transversal("ry", GateKind::RY, 2)};
    SearchConfig cfg;
    cfg.delta = 0;
    CHECK_THROWS_AS(layerwise_search(h, pool, cfg), std::invalid_argument);
    cfg = {};
    cfg.epsilon = 1.5;
    CHECK_THROWS_AS(layerwise_search(h, pool, cfg), std::invalid_argument);
    cfg = {};
    cfg.l_min = 5;
    cfg.l_max = 3;
    CHECK_THROWS_AS(layerwise_search(h, pool, cfg), std::invalid_argument);
    cfg = {};
    CHECK_THROWS_AS(layerwise_search(h, {}, cfg), std::invalid_argument);
    std::vector<LayerTemplate> no_seed{{"cz-m1", GateKind::CZ, {{0, 1}}}};
    CHECK_THROWS_AS(layerwise_search(h, no_seed, cfg), std::runtime_error);
}

TEST_CASE("ry-only search trajectory") {
    // With a single candidate the trace is forced; alpha decays per pick and
    // rf stays near 1 on the -sum Z problem (only the window decay moves the
    // score).
    auto h = minus_z(2);
    std::vector<LayerTemplate> pool{transversal("ry", GateKind::RY, 2)};
    SearchConfig cfg;
    cfg.l_min = 1;
    cfg.l_max = 3;
    cfg.n_samples = 400;
    cfg.seed = 5;
    auto [circuit, trace] = layerwise_search(h, pool, cfg);
    REQUIRE(trace.steps.size() >= 1);
    // The seed layer is depth 1; the first scored candidate sees one prior
    // "ry" layer.
    CHECK(trace.steps[0].candidates[0].alpha == doctest::Approx(0.8));
    CHECK(trace.steps[0].chosen == "ry");
    if (trace.steps.size() > 1) {
        CHECK(trace.steps[1].candidates[0].alpha == doctest::Approx(0.64));
    }
    CHECK(circuit.depth() <= cfg.l_max);
}

TEST_CASE("search stops at l_max") {
    auto h = minus_z(2);
    std::vector<LayerTemplate> pool{transversal("rz", GateKind::RZ, 2),
                                    transversal("ry", GateKind::RY, 2)};
    SearchConfig cfg;
    cfg.l_min = 1;
    cfg.l_max = 4;
    cfg.epsilon = 1e-6;  // effectively never satisfied
    cfg.n_samples = 200;
    auto [circuit, trace] = layerwise_search(h, pool, cfg);
    CHECK(circuit.depth() == 4);
    CHECK(trace.steps.size() == 3);  // seed layer + 3 growth steps
    for (const auto& step : trace.steps) {
        CHECK(step.candidates.size() == 2);
    }
}

TEST_CASE("trace serialization") {
    auto h = minus_z(2);
    std::vector<LayerTemplate> pool{transversal("ry", GateKind::RY, 2)};
    SearchConfig cfg;
    cfg.l_min = 1;
    cfg.l_max = 2;
    cfg.n_samples = 100;
    auto [circuit, trace] = layerwise_search(h, pool, cfg);
    auto csv = trace.to_csv();
    CHECK(csv.starts_with("step,label,rf,alpha,score\n"));
    CHECK(csv.find("ry") != std::string::npos);
    CHECK(trace.to_json().find("\"chosen\"") != std::string::npos);
}

TEST_CASE("elimination with ratio zero is a no-op") {
    auto h = build_ising(3);
    Circuit c(3);
    c = c.with_layer(transversal("ry", GateKind::RY, 3));
    c = c.with_layer({"rzz-m1", GateKind::RZZ, {{0, 1}}});
    SearchConfig cfg;
    cfg.elimination_ratio = 0;
    auto [pruned, trace] = eliminate_redundancy(c, h, cfg);
    CHECK(pruned == c);
    CHECK(trace.rounds.empty());
}

TEST_CASE("forced elimination removes the requested count") {
    auto h = build_ising(3);
    Circuit c(3);
    c = c.with_layer(transversal("ry", GateKind::RY, 3));
    c = c.with_layer({"rzz-m1", GateKind::RZZ, {{0, 1}}});
    c = c.with_layer({"rzz-m2", GateKind::RZZ, {{1, 2}}});
    c = c.with_layer(transversal("rx", GateKind::RX, 3));
    SearchConfig cfg;
    cfg.elimination_ratio = 0.25;  // ceil(0.25 * 8) = 2 gates
    cfg.force_ratio = true;
    cfg.n_samples = 300;
    cfg.seed = 9;
    auto [pruned, trace] = eliminate_redundancy(c, h, cfg);
    CHECK(trace.rounds.size() == 2);
    CHECK(pruned.gate_count() == 6);
    for (const auto& round : trace.rounds) {
        CHECK_FALSE(round.removed_label.empty());
        CHECK_FALSE(round.candidates.empty());
    }
}

TEST_CASE("elimination determinism") {
    auto h = build_heisenberg(3);
    Circuit c(3);
    c = c.with_layer(transversal("ry", GateKind::RY, 3));
    c = c.with_layer({"rzz-m1", GateKind::RZZ, {{0, 1}}});
    c = c.with_layer(transversal("rx", GateKind::RX, 3));
    SearchConfig cfg;
    cfg.elimination_ratio = 0.3;
    cfg.force_ratio = true;
    cfg.n_samples = 200;
    cfg.seed = 4;
    auto [a, ta] = eliminate_redundancy(c, h, cfg);
    cfg.workers = 3;
    auto [b, tb] = eliminate_redundancy(c, h, cfg);
    CHECK(a == b);
    REQUIRE(ta.rounds.size() == tb.rounds.size());
    for (size_t i = 0; i < ta.rounds.size(); i++) {
        CHECK(ta.rounds[i].removed_label == tb.rounds[i].removed_label);
    }
}

TEST_CASE("full search pipeline on ising n=4") {
    auto h = build_ising(4);
    auto pool = build_layer_pool(GateSet::RXYZ2XYZ, interaction_graph(h));
    SearchConfig cfg;
    cfg.l_min = 2;
    cfg.l_max = 8;
    cfg.n_samples = 300;
    cfg.seed = 2;
    auto [circuit, trace] = layerwise_search(h, pool, cfg);
    CHECK(circuit.depth() >= 2);
    CHECK(circuit.depth() <= 8);
    CHECK(circuit.param_count() > 0);
    // The chosen label in each step is the best (tie-broken) candidate.
    for (const auto& step : trace.steps) {
        double best = -1;
        for (const auto& cand : step.candidates) {
            best = std::max(best, cand.score);
        }
        CHECK(step.chosen_score == doctest::Approx(best));
    }
}
