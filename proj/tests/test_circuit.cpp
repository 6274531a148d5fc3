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

#include "flqas/circuit.hpp"
#include "flqas/rng.hpp"

using namespace flqas;

namespace {

LayerTemplate transversal(const std::string& label, GateKind kind, int n) {
    LayerTemplate t{label, kind, {}};
    for (int q = 0; q < n; q++) {
        t.sites.push_back({q, -1});
    }
    return t;
}

LayerTemplate pairs_layer(const std::string& label, GateKind kind,
                          std::vector<std::array<int, 2>> sites) {
    return {label, kind, std::move(sites)};
}

Circuit random_circuit(SplitMix64& rng, uint32_t n, int depth) {
    Circuit c(n);
    for (int d = 0; d < depth; d++) {
        switch (rng.next_below(3)) {
            case 0:
                c = c.with_layer(transversal("ry", GateKind::RY, static_cast<int>(n)));
                break;
            case 1:
                c = c.with_layer(transversal("rx", GateKind::RX, static_cast<int>(n)));
                break;
            default: {
                std::vector<std::array<int, 2>> sites;
                for (uint32_t q = 0; q + 1 < n; q += 2) {
                    sites.push_back({static_cast<int>(q), static_cast<int>(q) + 1});
                }
                if (sites.empty()) {
                    sites.push_back({0, -1});
                    c = c.with_layer({"rz", GateKind::RZ, sites});
                } else {
                    c = c.with_layer(pairs_layer("rzz-m1", GateKind::RZZ, sites));
                }
            }
        }
    }
    return c;
}

}  // namespace

TEST_CASE("gate kind helpers") {
    CHECK(gate_is_two_qubit(GateKind::RZZ));
    CHECK_FALSE(gate_is_two_qubit(GateKind::RY));
    CHECK(gate_is_parameterized(GateKind::RX));
    CHECK_FALSE(gate_is_parameterized(GateKind::CZ));
    CHECK(gate_kind_name(GateKind::RXX) == "rxx");
    CHECK(gate_kind_from_name("cz") == GateKind::CZ);
    CHECK_THROWS_AS(gate_kind_from_name("rw"), std::invalid_argument);
}

TEST_CASE("layer append assigns fresh params") {
    Circuit c(3);
    CHECK(c.param_count() == 0);
    CHECK(c.gate_count() == 0);

    c = c.with_layer(transversal("ry", GateKind::RY, 3));
    CHECK(c.depth() == 1);
    CHECK(c.param_count() == 3);
    CHECK(c.gate_at({0, 2}).param == 2);

    c = c.with_layer(pairs_layer("rzz-m1", GateKind::RZZ, {{0, 1}}));
    CHECK(c.param_count() == 4);
    CHECK(c.gate_at({1, 0}).param == 3);
    CHECK(c.gate_at({1, 0}).qubits == std::array<int, 2>{0, 1});

    c = c.with_layer(pairs_layer("cz-m1", GateKind::CZ, {{1, 2}}));
    CHECK(c.param_count() == 4);  // CZ takes no parameter
    CHECK(c.gate_at({2, 0}).param == -1);
    CHECK(c.gate_count() == 5);
}

TEST_CASE("layer append validates sites") {
    Circuit c(2);
    CHECK_THROWS_AS(c.with_layer(pairs_layer("rzz", GateKind::RZZ, {{0, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(c.with_layer(pairs_layer("rzz", GateKind::RZZ, {{0, 1}, {1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(c.with_layer(transversal("ry", GateKind::RY, 3)), std::invalid_argument);
    CHECK_THROWS_AS(c.with_layer(pairs_layer("ry", GateKind::RY, {{0, 1}})),
                    std::invalid_argument);
}

TEST_CASE("gate removal compacts parameters") {
    Circuit c(2);
    c = c.with_layer(transversal("ry", GateKind::RY, 2));   // params 0,1
    c = c.with_layer(pairs_layer("rzz-m1", GateKind::RZZ, {{0, 1}}));  // param 2
    c = c.with_layer(transversal("rx", GateKind::RX, 2));   // params 3,4

    Circuit pruned = c.without_gate({0, 1});  // drop param 1
    CHECK(pruned.param_count() == 4);
    CHECK(pruned.gate_at({0, 0}).param == 0);
    CHECK(pruned.gate_at({1, 0}).param == 1);  // was 2
    CHECK(pruned.gate_at({2, 0}).param == 2);
    CHECK(pruned.gate_at({2, 1}).param == 3);

    // Original untouched (immutability).
    CHECK(c.param_count() == 5);

    // Removing a layer's only gate drops the layer.
    Circuit no_mid = c.without_gate({1, 0});
    CHECK(no_mid.depth() == 2);
    CHECK(no_mid.param_count() == 4);

    CHECK_THROWS_AS(c.without_gate({9, 0}), std::out_of_range);

    Circuit tiny(1);
    tiny = tiny.with_layer(transversal("ry", GateKind::RY, 1));
    CHECK_THROWS_AS(tiny.without_gate({0, 0}), std::invalid_argument);
}

TEST_CASE("gate generators") {
    Circuit c(3);
    c = c.with_layer(transversal("ry", GateKind::RY, 3));
    c = c.with_layer(pairs_layer("rxx-m1", GateKind::RXX, {{0, 2}}));
    CHECK(c.gate_generator(c.gate_at({0, 1})).str() == "+IYI");
    CHECK(c.gate_generator(c.gate_at({1, 0})).str() == "+XIX");
    CHECK_THROWS_AS(c.gate_generator(Gate{GateKind::CZ, {0, 1}, -1}), std::invalid_argument);
}

TEST_CASE("clifford instance mapping") {
    Circuit c(2);
    c = c.with_layer(transversal("ry", GateKind::RY, 2));
    c = c.with_layer(pairs_layer("cz-m1", GateKind::CZ, {{0, 1}}));
    c = c.with_layer(pairs_layer("rzz-m1", GateKind::RZZ, {{0, 1}}));

    auto ops = clifford_instance(c, {1, 2, 3});
    REQUIRE(ops.size() == 4);
    CHECK(ops[0].is_rotation);
    CHECK(ops[0].generator.str() == "+YI");
    CHECK(ops[0].quarter_turns == 1);
    CHECK(ops[1].quarter_turns == 2);
    CHECK_FALSE(ops[2].is_rotation);
    CHECK(ops[2].qubits == std::array<int, 2>{0, 1});
    CHECK(ops[3].generator.str() == "+ZZ");
    CHECK(ops[3].quarter_turns == 3);

    CHECK_THROWS_AS(clifford_instance(c, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(clifford_instance(c, {1, 2, 4}), std::invalid_argument);

    // RY(pi) on both qubits flips |00> to |11> up to phase.
    auto t = run_clifford_instance(c, {2, 2, 0});
    CHECK(t.expectation(PauliString::from_text("ZI")) == -1);
    CHECK(t.expectation(PauliString::from_text("IZ")) == -1);
}

TEST_CASE("json round trip") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; trial++) {
        uint32_t n = 1 + rng.next_below(6);
        Circuit c = random_circuit(rng, n, 1 + static_cast<int>(rng.next_below(6)));
        Circuit back = Circuit::from_json(c.to_json());
        CHECK(back == c);
    }
}

TEST_CASE("json validation") {
    CHECK_THROWS(Circuit::from_json("{"));
    CHECK_THROWS(Circuit::from_json(R"({"n_qubits": 0, "layers": []})"));
    // Gapped parameter indices are rejected.
    CHECK_THROWS(Circuit::from_json(R"({"n_qubits": 2, "layers": [
        {"label": "ry", "gates": [
            {"kind": "ry", "qubits": [0], "param": 0},
            {"kind": "ry", "qubits": [1], "param": 2}]}]})"));
    // Out-of-range qubit.
    CHECK_THROWS(Circuit::from_json(R"({"n_qubits": 2, "layers": [
        {"label": "ry", "gates": [{"kind": "ry", "qubits": [5], "param": 0}]}]})"));

    Circuit ok = Circuit::from_json(R"({"n_qubits": 2, "layers": [
        {"label": "rzz-m1", "gates": [{"kind": "rzz", "qubits": [0, 1], "param": 0}]}]})");
    CHECK(ok.param_count() == 1);
    CHECK(ok.gate_at({0, 0}).kind == GateKind::RZZ);
}
