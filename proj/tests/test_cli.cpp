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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

fs::path work_dir() {
    static fs::path dir = [] {
        auto d = fs::temp_directory_path() / "flqas_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

RunResult run_cli(const std::string& args) {
    auto out_path = work_dir() / "stdout.txt";
    auto err_path = work_dir() / "stderr.txt";
    std::string cmd = std::string(FLQAS_CLI_PATH) + " " + args + " > " + out_path.string() +
                      " 2> " + err_path.string();
    int status = std::system(cmd.c_str());
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, slurp(out_path), slurp(err_path)};
}

int count_term_lines(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') {
            count++;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("help and usage errors") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("score --help").exit_code == 0);
    CHECK(run_cli("").exit_code == 2);           // missing subcommand
    CHECK(run_cli("frobnicate").exit_code == 2); // unknown subcommand
    CHECK(run_cli("hamiltonian --kind ising --n 4 --bogus-flag 1").exit_code == 2);
}

TEST_CASE("hamiltonian generation") {
    auto ising = run_cli("hamiltonian --kind ising --n 6");
    CHECK(ising.exit_code == 0);
    CHECK(count_term_lines(ising.out) == 11);  // 5 ZZ + 6 X

    auto cluster = run_cli("hamiltonian --kind cluster --n 3");
    CHECK(cluster.exit_code == 0);
    CHECK(count_term_lines(cluster.out) == 3);

    auto no_seed = run_cli("hamiltonian --kind scrambled --n 4");
    CHECK(no_seed.exit_code == 2);
    CHECK(no_seed.err.find("seed") != std::string::npos);

    auto bad_kind = run_cli("hamiltonian --kind nope --n 4");
    CHECK(bad_kind.exit_code == 2);
}

TEST_CASE("score subcommand") {
    auto circuit_path = work_dir() / "toy.json";
    {
        std::ofstream out(circuit_path);
        out << R"({"n_qubits": 1, "layers": [
            {"label": "ry", "gates": [{"kind": "ry", "qubits": [0], "param": 0}]}]})";
    }
    auto ham_path = work_dir() / "minus_z.txt";
    {
        std::ofstream out(ham_path);
        out << "-1.0 Z\n";
    }
    auto r = run_cli("score --circuit " + circuit_path.string() + " --ham " +
                     ham_path.string() + " --samples 1000 --seed 7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::abs(j["rf"].get<double>() - 1.0) <= 3 * j["stderr_rf"].get<double>());
    CHECK(j["n_samples"] == 1000);

    auto missing = run_cli("score --circuit /nonexistent.json --ham " + ham_path.string());
    CHECK(missing.exit_code == 2);
    CHECK_FALSE(missing.err.empty());
}

TEST_CASE("layers subcommand") {
    auto r = run_cli("layers --kind ising --n 4 --gate-set rxyz2xyz");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.size() == 11);
}

TEST_CASE("search then eliminate then train round trip") {
    auto circuit_path = work_dir() / "searched.json";
    auto r = run_cli("search --kind ising --n 3 --l-min 2 --l-max 4 --samples 200 --seed 3 "
                     "--out " + circuit_path.string());
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(slurp(circuit_path));
    CHECK(j["n_qubits"] == 3);
    CHECK(j["layers"].size() >= 2);

    auto pruned_path = work_dir() / "pruned.json";
    auto e = run_cli("eliminate --circuit " + circuit_path.string() +
                     " --kind ising --n 3 --ratio 0.2 --force-ratio --samples 200 --seed 3 "
                     "--out " + pruned_path.string());
    REQUIRE(e.exit_code == 0);
    auto jp = nlohmann::json::parse(slurp(pruned_path));
    CHECK(jp["n_qubits"] == 3);

    auto t = run_cli("train --circuit " + pruned_path.string() +
                     " --kind ising --n 3 --restarts 4 --iters 150 --seed 5");
    REQUIRE(t.exit_code == 0);
    auto jt = nlohmann::json::parse(t.out);
    CHECK(jt["e_ratio"].get<double>() > 0.5);
    CHECK(jt["e_ratio"].get<double>() <= 1.0 + 1e-9);
    CHECK(jt["oot"] == false);
}

TEST_CASE("pipeline replay is byte identical") {
    auto c1 = work_dir() / "p1.json";
    auto c2 = work_dir() / "p2.json";
    std::string base = "pipeline --kind ising --n 3 --l-min 2 --l-max 4 --samples 200 "
                       "--seed 11 --skip-train --out " + (work_dir() / "report.json").string();
    auto r1 = run_cli(base + " --out-circuit " + c1.string());
    REQUIRE(r1.exit_code == 0);
    auto r2 = run_cli(base + " --out-circuit " + c2.string());
    REQUIRE(r2.exit_code == 0);
    CHECK(slurp(c1) == slurp(c2));

    auto report = nlohmann::json::parse(slurp(work_dir() / "report.json"));
    CHECK(report["schema_version"] == 1);
    CHECK(report["oot"] == false);
    CHECK(report.contains("timings"));
    CHECK(report.contains("search_trace"));
    CHECK_FALSE(report.contains("train"));
}

TEST_CASE("seed env var overrides the default only") {
    auto ham_path = work_dir() / "mz.txt";
    {
        std::ofstream out(ham_path);
        out << "-1.0 Z\n";
    }
    auto circuit_path = work_dir() / "toy2.json";
    {
        std::ofstream out(circuit_path);
        out << R"({"n_qubits": 1, "layers": [
            {"label": "ry", "gates": [{"kind": "ry", "qubits": [0], "param": 0}]}]})";
    }
    std::string base = "score --circuit " + circuit_path.string() + " --ham " +
                       ham_path.string() + " --samples 100";
    // Run through env(1) so the variable reaches the child.
    auto env_run = [&](const std::string& env_prefix, const std::string& args) {
        auto out_path = work_dir() / "stdout.txt";
        auto err_path = work_dir() / "stderr.txt";
        std::string cmd = env_prefix + " " + std::string(FLQAS_CLI_PATH) + " " + args + " > " +
                          out_path.string() + " 2> " + err_path.string();
        int status = std::system(cmd.c_str());
        return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_path),
                         slurp(err_path)};
    };
    auto defaulted = env_run("env FLQAS_SEED=55", base);
    REQUIRE(defaulted.exit_code == 0);
    CHECK(nlohmann::json::parse(defaulted.out)["seed"] == 55);

    // An explicit --seed wins over the environment.
    auto explicit_seed = env_run("env FLQAS_SEED=55", base + " --seed 7");
    REQUIRE(explicit_seed.exit_code == 0);
    CHECK(nlohmann::json::parse(explicit_seed.out)["seed"] == 7);

    auto bad = env_run("env FLQAS_SEED=banana", base);
    CHECK(bad.exit_code == 2);
}

TEST_CASE("oracle check") {
    auto r = run_cli("oracle-check --n-trials 10 --samples 400 --seed 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["expectation_failures"] == 0);

    CHECK(run_cli("oracle-check --n-trials 0").exit_code == 2);
}
