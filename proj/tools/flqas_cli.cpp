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

// flqas command-line front end.
//
// Subcommands: hamiltonian, layers, score, search, eliminate, train,
// pipeline, oracle-check. Exit codes: 0 success, 1 runtime failure (including
// out-of-time runs), 2 usage error. The FLQAS_SEED environment variable
// overrides the default sampling seed when --seed is not given.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "flqas/circuit.hpp"
#include "flqas/fluctuation.hpp"
#include "flqas/layergen.hpp"
#include "flqas/pauli.hpp"
#include "flqas/rng.hpp"
#include "flqas/search.hpp"
#include "flqas/vqe.hpp"

namespace {

using nlohmann::json;
using namespace flqas;

constexpr int kSchemaVersion = 1;

/// Errors that are the caller's fault (bad flags, missing files): exit 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

uint64_t default_seed() {
    const char* env = std::getenv("FLQAS_SEED");
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    try {
        size_t used = 0;
        uint64_t v = std::stoull(env, &used);
        if (env[used] != '\0') {
            throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError(std::string("FLQAS_SEED is not an unsigned integer: ") + env);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.ends_with('\n')) {
            std::cout << "\n";
        }
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write file: " + path);
    }
    out << content;
}

// --------------------------------------------------------------------------
// Shared Hamiltonian source flags: either --ham <file> or --kind/--n
// (+ --ham-seed/--depth for the scrambled kind).

struct HamSpec {
    std::string path;
    std::string kind;
    uint32_t n = 0;
    uint64_t ham_seed = 0;
    bool ham_seed_given = false;
    uint32_t depth = 1;

    void add_flags(CLI::App* cmd) {
        cmd->add_option("--ham", path, "Hamiltonian text file");
        cmd->add_option("--kind", kind, "built-in kind: cluster, heisenberg, ising, scrambled");
        cmd->add_option("--n", n, "qubit count for a built-in kind");
        cmd->add_option("--ham-seed", ham_seed, "scrambling seed (scrambled kind)");
        cmd->add_option("--depth", depth, "scrambling brickwall depth")->capture_default_str();
        cmd->callback([this, cmd] { ham_seed_given = cmd->count("--ham-seed") > 0; });
    }

    Hamiltonian resolve(json* descriptor = nullptr) const {
        if (!path.empty()) {
            auto h = read_hamiltonian(path);
            if (descriptor != nullptr) {
                *descriptor = {{"source", "file"},
                               {"path", path},
                               {"n_qubits", h.n_qubits()},
                               {"n_terms", h.terms().size()},
                               {"l1_norm", h.l1_norm()}};
            }
            return h;
        }
        if (kind.empty() || n == 0) {
            throw UsageError("provide --ham <file> or --kind and --n");
        }
        HamiltonianKind k;
        try {
            k = hamiltonian_kind_from_name(kind);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (k == HamiltonianKind::Scrambled && !ham_seed_given) {
            throw UsageError("the scrambled kind needs --ham-seed");
        }
        auto h = build_hamiltonian(k, n, ham_seed, depth);
        if (descriptor != nullptr) {
            *descriptor = {{"source", "builtin"},
                           {"kind", kind},
                           {"n_qubits", h.n_qubits()},
                           {"n_terms", h.terms().size()},
                           {"l1_norm", h.l1_norm()}};
            if (k == HamiltonianKind::Scrambled) {
                (*descriptor)["ham_seed"] = ham_seed;
                (*descriptor)["depth"] = depth;
            }
        }
        return h;
    }
};

Circuit load_circuit(const std::string& path) {
    return Circuit::from_json(read_text_file(path));
}

json estimate_json(const FluctuationEstimate& est) {
    return {{"sigma", est.sigma},           {"sigma0", est.sigma0},
            {"rf", est.rf},                 {"n_samples", est.n_samples},
            {"stderr_rf", est.stderr_rf},   {"seed", est.seed}};
}

json train_json(const TrainResult& r) {
    return {{"best_energy", r.best_energy},
            {"mean_energy", r.mean_energy},
            {"ground_energy", r.ground_energy},
            {"e_ratio", r.e_ratio},
            {"mean_e_ratio", r.mean_e_ratio},
            {"final_energies", r.final_energies},
            {"mean_iterations", r.mean_iterations},
            {"oot", r.timed_out}};
}

std::string curves_csv(const TrainResult& r) {
    std::ostringstream out;
    out.precision(12);
    out << "restart,iteration,energy\n";
    for (const auto& p : r.curves) {
        out << p.restart << "," << p.iteration << "," << p.energy << "\n";
    }
    return out.str();
}

// --------------------------------------------------------------------------
// Subcommand implementations. Each returns the process exit code.

struct HamiltonianCmd {
    std::string kind;
    uint32_t n = 0;
    uint64_t seed = 0;
    bool seed_given = false;
    uint32_t depth = 1;
    std::string out;

    int run() const {
        HamiltonianKind k;
        try {
            k = hamiltonian_kind_from_name(kind);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (k == HamiltonianKind::Scrambled && !seed_given) {
            throw UsageError("the scrambled kind needs --seed");
        }
        auto h = build_hamiltonian(k, n, seed, depth);
        write_output(out, format_hamiltonian(h));
        return 0;
    }
};

struct LayersCmd {
    HamSpec ham;
    std::string gate_set = "rxyz2xyz";
    std::string out;

    int run() const {
        auto h = ham.resolve();
        auto pool = build_layer_pool(gate_set_from_name(gate_set), interaction_graph(h));
        json j = json::array();
        for (const auto& t : pool) {
            json sites = json::array();
            for (auto s : t.sites) {
                if (s[1] < 0) {
                    sites.push_back(json::array({s[0]}));
                } else {
                    sites.push_back(json::array({s[0], s[1]}));
                }
            }
            j.push_back({{"label", t.label}, {"kind", gate_kind_name(t.kind)}, {"sites", sites}});
        }
        write_output(out, j.dump(2));
        return 0;
    }
};

struct ScoreCmd {
    std::string circuit_path;
    HamSpec ham;
    int samples = 1000;
    uint64_t seed = 0;
    int workers = 1;
    std::string out;

    int run() const {
        auto c = load_circuit(circuit_path);
        auto h = ham.resolve();
        auto est = estimate_rf(c, h, samples, seed, workers);
        write_output(out, estimate_json(est).dump(2));
        return 0;
    }
};

void add_search_flags(CLI::App* cmd, SearchConfig* cfg) {
    cmd->add_option("--delta", cfg->delta, "repeat-layer decay base")->capture_default_str();
    cmd->add_option("--window", cfg->window, "decay counting window")->capture_default_str();
    cmd->add_option("--epsilon", cfg->epsilon, "stopping slack on the score")->capture_default_str();
    cmd->add_option("--l-min", cfg->l_min, "minimum layer count")->capture_default_str();
    cmd->add_option("--l-max", cfg->l_max, "maximum layer count")->capture_default_str();
    cmd->add_option("--samples", cfg->n_samples, "predictor sample count")->capture_default_str();
    cmd->add_option("--workers", cfg->workers, "worker thread bound")->capture_default_str();
}

struct SearchCmd {
    HamSpec ham;
    SearchConfig cfg;
    std::string gate_set = "rxyz2xyz";
    std::string out;
    std::string trace_csv;
    std::string trace_json;

    int run() const {
        auto h = ham.resolve();
        auto pool = build_layer_pool(gate_set_from_name(gate_set), interaction_graph(h));
        auto [circuit, trace] = layerwise_search(h, pool, cfg);
        write_output(out, circuit.to_json());
        if (!trace_csv.empty()) {
            write_output(trace_csv, trace.to_csv());
        }
        if (!trace_json.empty()) {
            write_output(trace_json, trace.to_json());
        }
        return 0;
    }
};

struct EliminateCmd {
    std::string circuit_path;
    HamSpec ham;
    SearchConfig cfg;
    std::string out;
    std::string trace_json;

    int run() const {
        auto c = load_circuit(circuit_path);
        auto h = ham.resolve();
        auto [pruned, trace] = eliminate_redundancy(c, h, cfg);
        write_output(out, pruned.to_json());
        if (!trace_json.empty()) {
            write_output(trace_json, trace.to_json());
        }
        return 0;
    }
};

struct TrainCmd {
    std::string circuit_path;
    HamSpec ham;
    TrainConfig cfg;
    std::string out;
    std::string curves_path;

    int run() const {
        auto c = load_circuit(circuit_path);
        auto h = ham.resolve();
        auto result = train(c, h, cfg, !curves_path.empty());
        write_output(out, train_json(result).dump(2));
        if (!curves_path.empty()) {
            write_output(curves_path, curves_csv(result));
        }
        return result.timed_out ? 1 : 0;
    }
};

struct PipelineCmd {
    HamSpec ham;
    SearchConfig cfg;
    std::string gate_set = "rxyz2xyz";
    bool skip_train = false;
    TrainConfig train_cfg;
    double timeout_secs = 3000;
    std::string out;
    std::string out_circuit;
    std::string out_trace;

    int run() const {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        auto elapsed = [&t0] {
            return std::chrono::duration<double>(clock::now() - t0).count();
        };

        json report;
        report["schema_version"] = kSchemaVersion;
        report["config"] = {{"gate_set", gate_set},
                            {"delta", cfg.delta},
                            {"window", cfg.window},
                            {"epsilon", cfg.epsilon},
                            {"l_min", cfg.l_min},
                            {"l_max", cfg.l_max},
                            {"n_samples", cfg.n_samples},
                            {"seed", cfg.seed},
                            {"elimination_ratio", cfg.elimination_ratio},
                            {"force_ratio", cfg.force_ratio},
                            {"workers", cfg.workers},
                            {"skip_train", skip_train},
                            {"train_seed", train_cfg.seed},
                            {"train_restarts", train_cfg.n_restarts},
                            {"train_max_iters", train_cfg.max_iters},
                            {"train_lr", train_cfg.learning_rate},
                            {"timeout_secs", timeout_secs}};
        report["oot"] = false;
        json timings;

        auto finish = [&](int code) {
            timings["total"] = elapsed();
            report["timings"] = std::move(timings);
            write_output(out, report.dump(2));
            return code;
        };
        auto out_of_time = [&] {
            if (timeout_secs > 0 && elapsed() > timeout_secs) {
                report["oot"] = true;
                return true;
            }
            return false;
        };

        std::string phase = "hamiltonian";
        try {
            json descriptor;
            auto h = ham.resolve(&descriptor);
            report["hamiltonian"] = descriptor;

            phase = "layergen";
            auto phase_start = clock::now();
            auto pool = build_layer_pool(gate_set_from_name(gate_set), interaction_graph(h));
            timings["layergen"] =
                std::chrono::duration<double>(clock::now() - phase_start).count();

            phase = "search";
            phase_start = clock::now();
            auto [searched, trace] = layerwise_search(h, pool, cfg);
            timings["search"] =
                std::chrono::duration<double>(clock::now() - phase_start).count();
            report["search_trace"] = json::parse(trace.to_json());
            report["circuit_searched"] = json::parse(searched.to_json());
            if (!out_trace.empty()) {
                write_output(out_trace, trace.to_csv());
            }
            if (out_of_time()) {
                report["failed_phase"] = "search";
                return finish(1);
            }

            phase = "eliminate";
            phase_start = clock::now();
            auto [pruned, elim] = eliminate_redundancy(searched, h, cfg);
            timings["eliminate"] =
                std::chrono::duration<double>(clock::now() - phase_start).count();
            report["elimination"] = json::parse(elim.to_json());
            report["circuit"] = json::parse(pruned.to_json());
            report["gate_count"] = pruned.gate_count();
            report["param_count"] = pruned.param_count();
            if (!out_circuit.empty()) {
                write_output(out_circuit, pruned.to_json());
            }
            if (out_of_time()) {
                report["failed_phase"] = "eliminate";
                return finish(1);
            }

            if (!skip_train) {
                phase = "train";
                phase_start = clock::now();
                TrainConfig tc = train_cfg;
                tc.workers = cfg.workers;
                if (timeout_secs > 0) {
                    tc.timeout_secs = timeout_secs - elapsed();
                }
                auto result = train(pruned, h, tc);
                timings["train"] =
                    std::chrono::duration<double>(clock::now() - phase_start).count();
                report["train"] = train_json(result);
                if (result.timed_out) {
                    report["oot"] = true;
                    report["failed_phase"] = "train";
                    return finish(1);
                }
            }
        } catch (const std::exception& e) {
            report["failed_phase"] = phase;
            report["error"] = e.what();
            finish(1);
            throw;
        }
        return finish(0);
    }
};

struct OracleCheckCmd {
    int n_trials = 50;
    uint64_t seed = 0;
    int samples = 1000;
    std::string out;

    // One random shallow circuit with at most 6 parameters.
    static Circuit random_small_circuit(SplitMix64& rng, uint32_t n) {
        Circuit c(n);
        LayerTemplate ry{"ry", GateKind::RY, {}};
        for (uint32_t q = 0; q < n; q++) {
            ry.sites.push_back({static_cast<int>(q), -1});
        }
        c = c.with_layer(ry);
        if (n >= 2 && rng.next_below(2) == 0) {
            GateKind kind = rng.next_below(2) == 0 ? GateKind::RZZ : GateKind::RXX;
            LayerTemplate pair{"pair-m1", kind, {{0, 1}}};
            c = c.with_layer(pair);
        }
        while (c.param_count() + static_cast<int>(n) <= 6 && rng.next_below(2) == 0) {
            LayerTemplate rx{"rx", GateKind::RX, ry.sites};
            c = c.with_layer(rx);
        }
        return c;
    }

    static Hamiltonian random_hamiltonian(SplitMix64& rng, uint32_t n) {
        if (n >= 2) {
            switch (rng.next_below(3)) {
                case 0:
                    return build_ising(n);
                case 1:
                    return build_heisenberg(n);
                default:
                    return build_cluster(n);
            }
        }
        PauliString z(1);
        z.set_pauli(0, 'Z');
        return Hamiltonian(1, {{-1.0, z}});
    }

    int run() const {
        if (n_trials <= 0) {
            throw UsageError("--n-trials must be positive");
        }
        int rf_failures = 0;
        int expectation_failures = 0;
        for (int trial = 0; trial < n_trials; trial++) {
            SplitMix64 rng(derive_seed(seed, 0x0bac1e, trial, 0));
            uint32_t n = 1 + static_cast<uint32_t>(rng.next_below(4));
            Circuit c = random_small_circuit(rng, n);
            auto h = random_hamiltonian(rng, n);

            // Clifford estimate vs exact discrete enumeration.
            double exact = exact_rf_enumeration(c, h);
            auto est = estimate_rf(c, h, samples, rng.next());
            if (std::abs(est.rf - exact) > 3 * std::max(est.stderr_rf, 1e-12)) {
                rf_failures++;
            }

            // Stabilizer expectations vs dense simulation at a random
            // discrete assignment.
            DiscreteAssignment a(static_cast<size_t>(c.param_count()));
            std::vector<double> angles(a.size());
            for (size_t i = 0; i < a.size(); i++) {
                a[i] = static_cast<int>(rng.next_below(4));
                angles[i] = a[i] * M_PI / 2;
            }
            auto tableau = run_clifford_instance(c, a);
            auto psi = simulate(c, angles);
            for (const auto& term : h.terms()) {
                // <psi|P|psi> via the energy helper on a single-term sum.
                Hamiltonian single(h.n_qubits(), {{1.0, term.op}});
                double dense = energy(psi, single);
                if (std::abs(tableau.expectation(term.op) - dense) > 1e-10) {
                    expectation_failures++;
                    break;
                }
            }
        }
        // 3*stderr is a statistical bound; tolerate the expected tail.
        int allowed = std::max(1, (n_trials + 49) / 50);
        bool pass = expectation_failures == 0 && rf_failures <= allowed;
        json j = {{"trials", n_trials},
                  {"rf_failures", rf_failures},
                  {"expectation_failures", expectation_failures},
                  {"pass", pass}};
        write_output(out, j.dump(2));
        return pass ? 0 : 1;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Training-free quantum architecture search toolkit"};
    app.require_subcommand(1);

    int exit_code = 0;
    uint64_t seed_default = 0;

    HamiltonianCmd ham_cmd;
    LayersCmd layers_cmd;
    ScoreCmd score_cmd;
    SearchCmd search_cmd;
    EliminateCmd eliminate_cmd;
    TrainCmd train_cmd;
    PipelineCmd pipeline_cmd;
    OracleCheckCmd oracle_cmd;

    try {
        seed_default = default_seed();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    score_cmd.seed = seed_default;
    search_cmd.cfg.seed = seed_default;
    eliminate_cmd.cfg.seed = seed_default;
    train_cmd.cfg.seed = seed_default;
    train_cmd.cfg.timeout_secs = 3000;
    pipeline_cmd.cfg.seed = seed_default;
    pipeline_cmd.train_cfg.seed = derive_seed(seed_default, 0x42a117, 0, 0);
    oracle_cmd.seed = seed_default;

    {
        auto* cmd = app.add_subcommand("hamiltonian", "Write a built-in Hamiltonian");
        cmd->add_option("--kind", ham_cmd.kind,
                        "cluster, heisenberg, ising, or scrambled")->required();
        cmd->add_option("--n", ham_cmd.n, "qubit count")->required();
        auto* seed_opt = cmd->add_option("--seed", ham_cmd.seed, "scrambling seed");
        cmd->add_option("--depth", ham_cmd.depth, "scrambling brickwall depth")->capture_default_str();
        cmd->add_option("--out", ham_cmd.out, "output path (default stdout)");
        cmd->callback([&, seed_opt] {
            ham_cmd.seed_given = seed_opt->count() > 0;
            exit_code = ham_cmd.run();
        });
    }
    {
        auto* cmd = app.add_subcommand("layers", "Dump the candidate layer pool");
        layers_cmd.ham.add_flags(cmd);
        cmd->add_option("--gate-set", layers_cmd.gate_set, "native gate set")->capture_default_str();
        cmd->add_option("--out", layers_cmd.out, "output path (default stdout)");
        cmd->final_callback([&] { exit_code = layers_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("score", "Estimate the relative fluctuation");
        cmd->add_option("--circuit", score_cmd.circuit_path, "circuit JSON file")->required();
        score_cmd.ham.add_flags(cmd);
        cmd->add_option("--samples", score_cmd.samples, "sample count")->capture_default_str();
        cmd->add_option("--seed", score_cmd.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--workers", score_cmd.workers, "worker thread bound")->capture_default_str();
        cmd->add_option("--out", score_cmd.out, "output path (default stdout)");
        cmd->final_callback([&] { exit_code = score_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("search", "Layer-wise architecture search");
        search_cmd.ham.add_flags(cmd);
        cmd->add_option("--gate-set", search_cmd.gate_set, "native gate set")->capture_default_str();
        add_search_flags(cmd, &search_cmd.cfg);
        cmd->add_option("--seed", search_cmd.cfg.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--out", search_cmd.out, "circuit output path (default stdout)");
        cmd->add_option("--trace", search_cmd.trace_csv, "search trace CSV path");
        cmd->add_option("--trace-json", search_cmd.trace_json, "search trace JSON path");
        cmd->final_callback([&] { exit_code = search_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("eliminate", "Redundant-gate elimination");
        cmd->add_option("--circuit", eliminate_cmd.circuit_path, "circuit JSON file")
            ->required();
        eliminate_cmd.ham.add_flags(cmd);
        cmd->add_option("--ratio", eliminate_cmd.cfg.elimination_ratio,
                        "fraction of gates to try to remove")->capture_default_str();
        cmd->add_option("--rounds", eliminate_cmd.cfg.elimination_rounds,
                        "hard cap on removals (-1: from ratio)")->capture_default_str();
        cmd->add_flag("--force-ratio", eliminate_cmd.cfg.force_ratio,
                      "remove the full ratio even when the score drops");
        cmd->add_option("--samples", eliminate_cmd.cfg.n_samples, "sample count")->capture_default_str();
        cmd->add_option("--seed", eliminate_cmd.cfg.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--workers", eliminate_cmd.cfg.workers, "worker thread bound")->capture_default_str();
        cmd->add_option("--out", eliminate_cmd.out, "circuit output path (default stdout)");
        cmd->add_option("--trace-json", eliminate_cmd.trace_json, "trace JSON path");
        cmd->final_callback([&] { exit_code = eliminate_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("train", "Train a circuit with VQE");
        cmd->add_option("--circuit", train_cmd.circuit_path, "circuit JSON file")->required();
        train_cmd.ham.add_flags(cmd);
        cmd->add_option("--restarts", train_cmd.cfg.n_restarts, "independent restarts")->capture_default_str();
        cmd->add_option("--iters", train_cmd.cfg.max_iters, "max iterations per restart")->capture_default_str();
        cmd->add_option("--lr", train_cmd.cfg.learning_rate, "Adam learning rate")->capture_default_str();
        cmd->add_option("--tol", train_cmd.cfg.tol, "plateau tolerance")->capture_default_str();
        cmd->add_option("--seed", train_cmd.cfg.seed, "restart-init seed")->capture_default_str();
        cmd->add_option("--workers", train_cmd.cfg.workers, "worker thread bound")->capture_default_str();
        cmd->add_option("--timeout-secs", train_cmd.cfg.timeout_secs,
                        "wall-clock budget (0: unlimited)")->capture_default_str();
        cmd->add_option("--out", train_cmd.out, "result JSON path (default stdout)");
        cmd->add_option("--curves", train_cmd.curves_path, "training-curve CSV path");
        cmd->final_callback([&] { exit_code = train_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("pipeline", "Search, eliminate, and train end to end");
        pipeline_cmd.ham.add_flags(cmd);
        cmd->add_option("--gate-set", pipeline_cmd.gate_set, "native gate set")->capture_default_str();
        add_search_flags(cmd, &pipeline_cmd.cfg);
        cmd->add_option("--seed", pipeline_cmd.cfg.seed, "sampling seed")->capture_default_str();
        cmd->add_option("--ratio", pipeline_cmd.cfg.elimination_ratio,
                        "elimination gate fraction")->capture_default_str();
        cmd->add_flag("--force-ratio", pipeline_cmd.cfg.force_ratio,
                      "remove the full ratio even when the score drops");
        cmd->add_flag("--skip-train", pipeline_cmd.skip_train, "skip the VQE phase");
        cmd->add_option("--restarts", pipeline_cmd.train_cfg.n_restarts,
                        "training restarts")->capture_default_str();
        cmd->add_option("--iters", pipeline_cmd.train_cfg.max_iters,
                        "max iterations per restart")->capture_default_str();
        cmd->add_option("--lr", pipeline_cmd.train_cfg.learning_rate, "Adam learning rate")
            ->capture_default_str();
        cmd->add_option("--train-seed", pipeline_cmd.train_cfg.seed, "restart-init seed")->capture_default_str();
        cmd->add_option("--timeout-secs", pipeline_cmd.timeout_secs,
                        "wall-clock budget for the whole pipeline")->capture_default_str();
        cmd->add_option("--out", pipeline_cmd.out, "report JSON path (default stdout)");
        cmd->add_option("--out-circuit", pipeline_cmd.out_circuit, "final circuit JSON path");
        cmd->add_option("--out-trace", pipeline_cmd.out_trace, "search trace CSV path");
        cmd->final_callback([&] { exit_code = pipeline_cmd.run(); });
    }
    {
        auto* cmd = app.add_subcommand("oracle-check",
                                       "Cross-check the predictor against exact oracles");
        cmd->add_option("--n-trials", oracle_cmd.n_trials, "number of randomized trials")->capture_default_str();
        cmd->add_option("--seed", oracle_cmd.seed, "trial seed")->capture_default_str();
        cmd->add_option("--samples", oracle_cmd.samples, "predictor samples per trial")->capture_default_str();
        cmd->add_option("--out", oracle_cmd.out, "summary JSON path (default stdout)");
        cmd->final_callback([&] { exit_code = oracle_cmd.run(); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
