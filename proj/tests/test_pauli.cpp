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
#include <complex>
#include <sstream>

#include "flqas/pauli.hpp"
#include "flqas/rng.hpp"
#include "flqas/vqe.hpp"

using namespace flqas;

TEST_CASE("pauli text parsing") {
    auto zz = PauliString::from_text("ZZ");
    CHECK(zz.z_mask() == 0b11);
    CHECK(zz.x_mask() == 0);
    CHECK(zz.phase_exponent() == 0);

    auto xy = PauliString::from_text("XY");
    CHECK(xy.x_mask() == 0b11);
    CHECK(xy.z_mask() == 0b10);

    CHECK(PauliString::from_text("IXYZ").to_text() == "IXYZ");
    CHECK_THROWS_WITH_AS(PauliString::from_text("QA"), doctest::Contains("index 0"),
                         std::invalid_argument);
    CHECK_THROWS_AS(PauliString::from_text(""), std::invalid_argument);
}

TEST_CASE("pauli multiplication phases") {
    auto X = PauliString::from_text("X");
    auto Y = PauliString::from_text("Y");
    auto Z = PauliString::from_text("Z");

    auto xz = X * Z;
    CHECK(xz.to_text() == "Y");
    CHECK(xz.phase() == std::complex<double>(0, -1));  // X Z = -i Y

    CHECK((Z * Z).is_identity());
    CHECK((Z * Z).phase_exponent() == 0);

    auto xi_zi = PauliString::from_text("XI") * PauliString::from_text("ZI");
    CHECK(xi_zi.to_text() == "YI");
    CHECK(xi_zi.phase() == std::complex<double>(0, -1));

    CHECK((Y * X).phase() == std::complex<double>(0, -1));  // Y X = -i Z
    CHECK((X * Y).phase() == std::complex<double>(0, 1));

    CHECK_THROWS_AS(PauliString::from_text("XX") * X, std::invalid_argument);
}

TEST_CASE("commutation") {
    auto X = PauliString::from_text("X");
    auto Z = PauliString::from_text("Z");
    CHECK_FALSE(X.commutes_with(Z));
    CHECK(PauliString::from_text("XX").commutes_with(PauliString::from_text("ZZ")));
    CHECK(PauliString::from_text("XYZ").commutes_with(PauliString::from_text("III")));
    CHECK_THROWS_AS(X.commutes_with(PauliString::from_text("XX")), std::invalid_argument);
}

TEST_CASE("commutator phase property") {
    // p*q and q*p differ exactly by (-1)^(anticommute) for random pairs.
    SplitMix64 rng(42);
    for (int trial = 0; trial < 200; trial++) {
        uint32_t n = 1 + rng.next_below(6);
        PauliString p(n, rng.next(), rng.next(), static_cast<int>(rng.next_below(4)));
        PauliString q(n, rng.next(), rng.next(), static_cast<int>(rng.next_below(4)));
        auto pq = p * q;
        auto qp = q * p;
        int expected_shift = p.commutes_with(q) ? 0 : 2;
        CHECK((qp.phase_exponent() - pq.phase_exponent() + 4) % 4 == expected_shift);
        CHECK(pq.x_mask() == qp.x_mask());
        CHECK(pq.z_mask() == qp.z_mask());
    }
}

TEST_CASE("cluster hamiltonian n=3") {
    auto h = build_cluster(3);
    REQUIRE(h.terms().size() == 3);
    CHECK(h.l1_norm() == doctest::Approx(3.0));
    bool found_xzi = false, found_zxz = false, found_izx = false;
    for (const auto& t : h.terms()) {
        CHECK(t.coefficient == doctest::Approx(-1.0));
        auto text = t.op.to_text();
        found_xzi |= text == "XZI";
        found_zxz |= text == "ZXZ";
        found_izx |= text == "IZX";
    }
    CHECK(found_xzi);
    CHECK(found_zxz);
    CHECK(found_izx);
}

TEST_CASE("ising hamiltonian n=3") {
    auto h = build_ising(3);
    CHECK(h.terms().size() == 5);
    CHECK(h.l1_norm() == doctest::Approx(5.0));
}

TEST_CASE("heisenberg hamiltonian n=2") {
    auto h = build_heisenberg(2);
    CHECK(h.terms().size() == 5);  // XX YY ZZ + 2 fields
    CHECK(h.l1_norm() == doctest::Approx(5.0));
}

TEST_CASE("chain builders reject n < 2") {
    CHECK_THROWS_AS(build_ising(1), std::invalid_argument);
    CHECK_THROWS_AS(build_hamiltonian(HamiltonianKind::Scrambled, 4, 1, 0),
                    std::invalid_argument);
}

TEST_CASE("hamiltonian merging and l1 norm") {
    auto zz = PauliString::from_text("ZZ");
    auto xi = PauliString::from_text("XI");
    Hamiltonian h(2, {{-0.5, zz}, {-0.5, zz}, {0.25, xi}});
    CHECK(h.terms().size() == 2);
    CHECK(h.l1_norm() == doctest::Approx(1.25));

    // Reordering terms leaves the canonical form and norm unchanged.
    Hamiltonian h2(2, {{0.25, xi}, {-1.0, zz}});
    CHECK(h == h2);

    // Terms cancelling to zero are dropped.
    Hamiltonian h3(2, {{-0.5, zz}, {0.5, zz}, {1.0, xi}});
    CHECK(h3.terms().size() == 1);
}

TEST_CASE("hamiltonian file io round trip") {
    auto h = build_heisenberg(4);
    std::istringstream in(format_hamiltonian(h));
    auto reread = parse_hamiltonian(in);
    CHECK(reread == h);
}

TEST_CASE("hamiltonian text format") {
    std::istringstream in("-1.0 ZZ\n-1.0 XI\n# comment\n\n-1.0 IX\n");
    auto h = parse_hamiltonian(in);
    CHECK(h == build_ising(2));

    std::istringstream dup("-0.5 ZZ\n-0.5 ZZ\n");
    auto merged = parse_hamiltonian(dup);
    REQUIRE(merged.terms().size() == 1);
    CHECK(merged.terms()[0].coefficient == doctest::Approx(-1.0));

    std::istringstream bad("abc ZZ\n");
    CHECK_THROWS_WITH_AS(parse_hamiltonian(bad), doctest::Contains("line 1"),
                         std::runtime_error);

    std::istringstream mixed("-1 ZZ\n-1 XYZ\n");
    CHECK_THROWS_WITH_AS(parse_hamiltonian(mixed), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("scrambled hamiltonian term count and spectrum") {
    auto hr = build_scrambled(4, 7, 1);
    CHECK(hr.terms().size() > 10);
    // Isospectral with -sum Z_j.
    std::vector<HamiltonianTerm> zterms;
    for (uint32_t q = 0; q < 4; q++) {
        PauliString p(4);
        p.set_pauli(q, 'Z');
        zterms.push_back({-1.0, p});
    }
    Hamiltonian hz(4, zterms);
    auto spec_r = dense_spectrum(hr);
    auto spec_z = dense_spectrum(hz);
    REQUIRE(spec_r.size() == spec_z.size());
    for (size_t i = 0; i < spec_r.size(); i++) {
        CHECK(spec_r[i] == doctest::Approx(spec_z[i]).epsilon(1e-9));
    }
}

TEST_CASE("generated hamiltonians are hermitian") {
    for (auto kind : {HamiltonianKind::Cluster, HamiltonianKind::Heisenberg,
                      HamiltonianKind::Ising}) {
        auto h = build_hamiltonian(kind, 5);
        for (double e : dense_spectrum(h)) {
            CHECK(std::isfinite(e));
        }
        double recomputed = 0;
        for (const auto& t : h.terms()) {
            CHECK(t.coefficient == t.coefficient);  // real by type
            recomputed += std::abs(t.coefficient);
        }
        CHECK(recomputed == doctest::Approx(h.l1_norm()).epsilon(1e-15));
    }
}
