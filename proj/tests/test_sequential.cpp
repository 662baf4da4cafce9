// Copyright 2026 The qscatter Authors
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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/selftest.hpp"
#include "qscatter/sequential.hpp"

using namespace qscatter;

namespace {

Observable obs(const ComplexMatrix &m, const char *label) {
    return Observable(m, label);
}

double total(const std::map<std::vector<int>, double> &table) {
    double s = 0;
    for (const auto &[k, p] : table) {
        s += p;
    }
    return s;
}

}  // namespace

TEST_CASE("luders measurement") {
    const auto z_on_zero = luders_measure(basis_state(1, "0"), obs(pauli_z(), "Z"));
    REQUIRE(z_on_zero.size() == 2);
    CHECK(z_on_zero[0].outcome == 1);
    CHECK(z_on_zero[0].probability == doctest::Approx(1.0));
    CHECK(z_on_zero[1].probability == 0.0);
    CHECK_FALSE(z_on_zero[1].post_state.has_value());

    const auto x_on_zero = luders_measure(basis_state(1, "0"), obs(pauli_x(), "X"));
    CHECK(x_on_zero[0].probability == doctest::Approx(0.5));
    CHECK(x_on_zero[1].probability == doctest::Approx(0.5));
    REQUIRE(x_on_zero[0].post_state.has_value());
    CHECK(expectation(*x_on_zero[0].post_state, pauli_x()) == doctest::Approx(1.0));
    CHECK(expectation(*x_on_zero[1].post_state, pauli_x()) == doctest::Approx(-1.0));

    // measuring Z_1 on a Bell pair collapses the partner
    const auto zi = luders_measure(bell_phi_plus(), obs(kron(pauli_z(), pauli_i()), "ZI"));
    CHECK(expectation(*zi[1].post_state, kron(pauli_i(), pauli_z())) == doctest::Approx(-1.0));

    CHECK_THROWS_AS(luders_measure(basis_state(2, "00"), obs(pauli_z(), "Z")), Error);
    CHECK_THROWS_AS(luders_measure(basis_state(1, "0"), Observable(scale(pauli_z(), 2.0), "2Z", false)), Error);
}

TEST_CASE("joint distribution") {
    const std::vector<Observable> zxz{obs(pauli_z(), "Z"), obs(pauli_x(), "X"), obs(pauli_z(), "Z")};
    const OutcomeDistribution d = joint_distribution(basis_state(1, "0"), zxz);
    CHECK(d.table.size() == 8);
    CHECK(total(d.table) == doctest::Approx(1.0));
    // Z then X then Z on |0>: the product has zero mean
    CHECK(std::abs(correlator_sequential(basis_state(1, "0"), zxz)) < 1e-12);
    CHECK(d.table.at({-1, 1, 1}) == 0.0);
    CHECK(d.table.at({1, 1, -1}) == doctest::Approx(0.25));

    // a PM row: products are +1 so only tuples with product +1 appear
    const auto square = pm_square();
    const std::vector<Observable> abc(square[0].begin(), square[0].end());
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const OutcomeDistribution r = joint_distribution(random_test_state(2, seed), abc);
        CHECK(r.table.size() == 8);
        CHECK(total(r.table) == doctest::Approx(1.0));
        for (const auto &[tuple, p] : r.table) {
            if (tuple[0] * tuple[1] * tuple[2] == -1) {
                CHECK(p < 1e-12);
            }
        }
    }
    // the third column multiplies to -I
    std::vector<Observable> col;
    for (const auto &r3 : pm_square()) {
        col.push_back(r3[2]);
    }
    CHECK(correlator_sequential(random_test_state(2, 7), col) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(joint_distribution(basis_state(1, "0"), zxz).prefix_marginal(4), Error);
}

TEST_CASE("two-time correlators") {
    const Observable z = obs(pauli_z(), "Z");
    const Observable x = obs(pauli_x(), "X");
    const QuantumState zero = basis_state(1, "0");
    CHECK(two_time_formula(zero, z, z) == doctest::Approx(1.0));
    CHECK(std::abs(two_time_formula(zero, z, x)) < 1e-15);
    for (double theta : {0.4, 2.0, std::acos(-0.75)}) {
        const Observable s = sigma_theta(theta);
        CHECK(two_time_formula(maximally_mixed(1), z, s) == doctest::Approx(std::cos(theta)));
    }

    // for two measurements the Luders pair correlation equals the
    // symmetrized expectation on any state
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t q = 1 + static_cast<std::size_t>(rep % 2);
        const std::size_t dim = std::size_t{1} << q;
        const Observable a(random_dichotomic(dim, rng), "a");
        const Observable b(random_dichotomic(dim, rng), "b");
        const Observable c(random_dichotomic(dim, rng), "c");
        const QuantumState rho = random_test_state(q, 60 + static_cast<std::uint64_t>(rep));
        const std::vector<Observable> ab{a, b};
        const std::vector<Observable> abc{a, b, c};
        CHECK(std::abs(correlator_sequential(rho, ab) - two_time_formula(rho, a, b)) < 1e-10);
        const OutcomeDistribution d = joint_distribution(rho, abc);
        CHECK(d.table.size() == 8);
        CHECK(std::abs(d.pair_correlation(0, 1) - two_time_formula(rho, a, b)) < 1e-10);
        // a later measurement does not disturb earlier marginals
        const auto m2 = d.prefix_marginal(2);
        const OutcomeDistribution d2 = joint_distribution(rho, ab);
        for (const auto &[tuple, p] : d2.table) {
            CHECK(std::abs(m2.at(tuple) - p) < 1e-10);
        }
        CHECK(std::abs(total(d.prefix_marginal(1)) - 1) < 1e-10);
    }
}

TEST_CASE("commuting sequences are noninvasive") {
    // diagonal dichotomic observables commute; the sequential product mean
    // equals the expectation of the operator product
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 20; ++rep) {
        std::vector<Observable> seq;
        ComplexMatrix product = ComplexMatrix::identity(4);
        for (int k = 0; k < 3; ++k) {
            std::vector<double> signs(4);
            for (auto &s : signs) {
                s = (rng() & 1U) ? 1.0 : -1.0;
            }
            const ComplexMatrix dmat = ComplexMatrix::diagonal(signs);
            seq.emplace_back(dmat, "d");
            product = matmul(product, dmat);
        }
        const QuantumState rho = random_test_state(2, 500 + static_cast<std::uint64_t>(rep));
        CHECK(std::abs(correlator_sequential(rho, seq) - expectation(rho, product)) < 1e-10);
        // order does not matter either
        std::vector<Observable> reversed(seq.rbegin(), seq.rend());
        CHECK(std::abs(correlator_sequential(rho, seq) - correlator_sequential(rho, reversed)) < 1e-10);
    }
}
