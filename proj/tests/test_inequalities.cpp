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
#include <numbers>
#include <string>

#include <doctest.h>

#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/selftest.hpp"
#include "test_support.hpp"

using namespace qscatter;
using qscatter::testing::check_close;
using qscatter::testing::naive_product;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Method kMethods[] = {Method::kScattering, Method::kDirect, Method::kSequential};

// <rho, A (x) B> by explicit index sums, independent of kron and trace.
double brute_two_qubit(const QuantumState &rho, const ComplexMatrix &a, const ComplexMatrix &b) {
    const ComplexMatrix d = rho.density();
    Complex s{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            s += d(j, i) * a(i >> 1, j >> 1) * b(i & 1, j & 1);
        }
    }
    return s.real();
}

ComplexMatrix planar(double angle) {
    return add(scale(pauli_z(), std::cos(angle)), scale(pauli_x(), std::sin(angle)));
}

}  // namespace

TEST_CASE("sigma_theta") {
    check_close(sigma_theta(0).matrix(), pauli_z(), 0.0);
    check_close(sigma_theta(kPi / 2).matrix(), pauli_x(), 1e-15);
    for (double t : {0.3, 1.9, -2.2}) {
        const ComplexMatrix m = sigma_theta(t).matrix();
        check_close(matmul(m, m), pauli_i(), 1e-14);
        CHECK(is_hermitian(m, 0.0));
    }
    CHECK_THROWS_AS(Observable(ComplexMatrix{{0, 1}, {0, 0}}, "bad"), Error);
}

TEST_CASE("PM square structure") {
    const auto sq = pm_square();
    const ComplexMatrix id = ComplexMatrix::identity(4);
    for (std::size_t i = 0; i < 3; ++i) {
        ComplexMatrix row = id;
        ComplexMatrix col = id;
        for (std::size_t j = 0; j < 3; ++j) {
            row = naive_product(row, sq[i][j].matrix());
            col = naive_product(col, sq[j][i].matrix());
            for (std::size_t k = 0; k < 3; ++k) {
                // entries in a row or column commute
                check_close(commutator(sq[i][j].matrix(), sq[i][k].matrix()), ComplexMatrix::zeros(4, 4), 1e-15);
                check_close(commutator(sq[j][i].matrix(), sq[k][i].matrix()), ComplexMatrix::zeros(4, 4), 1e-15);
            }
        }
        check_close(row, id, 1e-15);
        check_close(col, i == 2 ? scale(id, -1.0) : id, 1e-15);
    }
    CHECK(pm_pauli_string("gamma") == "YY");
    CHECK_THROWS_AS(pm_observable("delta"), Error);
    CHECK(pm_terms().size() == 6);
}

TEST_CASE("PM inequality") {
    for (Method m : kMethods) {
        const InequalityReport r = eval_pm(basis_state(2, "00"), m);
        CHECK(r.sum == doctest::Approx(6.0).epsilon(1e-10));
        CHECK(r.violated);
        CHECK(r.terms.size() == 6);
        CHECK(r.terms.back().coefficient == -1.0);
        CHECK(r.terms.back().value == doctest::Approx(-1.0));
        CHECK(eval_pm(maximally_mixed(2), m).sum == doctest::Approx(6.0).epsilon(1e-10));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const QuantumState rho = random_test_state(2, seed);
        for (Method m : kMethods) {
            CHECK(std::abs(eval_pm(rho, m).sum - 6.0) < 1e-9);
        }
    }
    CHECK_THROWS_AS(eval_pm(basis_state(1, "0"), Method::kDirect), Error);
}

TEST_CASE("methods agree on random correlators") {
    std::mt19937_64 rng(404);
    for (int rep = 0; rep < 50; ++rep) {
        const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
        const QuantumState rho = random_test_state(spec.system_qubits(), 700 + static_cast<std::uint64_t>(rep));
        const double d = evaluate_correlator(rho, spec, Method::kDirect);
        CHECK(std::abs(evaluate_correlator(rho, spec, Method::kScattering) - d) < 1e-10);
    }
    CHECK(parse_method("sequential") == Method::kSequential);
    CHECK(method_name(Method::kScattering) == "scattering");
    CHECK_THROWS_AS(parse_method("psychic"), Error);
}

TEST_CASE("KCBS temporal sum") {
    const QuantumState zero = basis_state(1, "0");
    for (Method m : kMethods) {
        CHECK(eval_kcbs_temporal(zero, 0.0, m).sum == doctest::Approx(5.0));
        CHECK(eval_kcbs_temporal(zero, kPi, m).sum == doctest::Approx(-3.0));
        for (double t : {0.5, 2.0, std::acos(-0.75), 3.0}) {
            const InequalityReport r = eval_kcbs_temporal(random_test_state(1, 3), t, m);
            CHECK(r.sum == doctest::Approx(1 + 4 * std::cos(t)).epsilon(1e-10));
            CHECK(r.violated == (r.sum < -3 - 1e-9));
        }
    }
    // the minimum -3 sits exactly on the bound: no violation
    CHECK_FALSE(eval_kcbs_temporal(zero, kPi, Method::kDirect).violated);
    CHECK_THROWS_AS(eval_kcbs_temporal(zero, std::nan(""), Method::kDirect), Error);
}

TEST_CASE("pentagon sums") {
    const QuantumState mixed = maximally_mixed(1);
    for (Method m : kMethods) {
        CHECK(eval_pentagon_lg(mixed, 0.0, m).sum == doctest::Approx(10.0));
        CHECK(eval_pentagon_lg(mixed, std::acos(-0.75), m).sum == doctest::Approx(-0.5));
    }
    const InequalityReport pw = eval_pentagon_lg(basis_state(1, "1"), 1.3, Method::kSequential);
    CHECK(pw.terms.size() == 10);
    CHECK(pw.sum == doctest::Approx(4 + 6 * std::cos(1.3)));
    CHECK_FALSE(pw.notes.empty());

    for (double t : {0.0, 0.9, std::acos(-0.75), kPi}) {
        const double c = std::cos(t);
        const InequalityReport inv = eval_pentagon_lg_invasive(mixed, t);
        CHECK(inv.sum == doctest::Approx(4 * c + 3 * c * c + 2 * c * c * c + c * c * c * c).epsilon(1e-10));
    }
    CHECK(eval_pentagon_lg_invasive(mixed, std::acos(-0.75)).sum == doctest::Approx(-1.839844).epsilon(1e-6));
    CHECK(eval_pentagon_lg_invasive(mixed, kPi).sum == doctest::Approx(-2.0));
}

TEST_CASE("pentagram observables") {
    for (int j = 0; j < 5; ++j) {
        const ComplexMatrix a = pentagram_observable(j).matrix();
        const ComplexMatrix b = pentagram_observable((j + 1) % 5).matrix();
        CHECK((trace(matmul(a, b)).real() / 2) == doctest::Approx(std::cos(4 * kPi / 5)));
        check_close(matmul(a, a), pauli_i(), 1e-14);
    }
    CHECK_THROWS_AS(pentagram_observable(5), Error);
}

TEST_CASE("transformed Bell inequality") {
    for (Method m : kMethods) {
        const InequalityReport r = eval_transformed_bell(bell_phi_plus(), m);
        REQUIRE(r.terms.size() == 5);
        for (const auto &t : r.terms) {
            CHECK(t.value == doctest::Approx(std::cos(4 * kPi / 5)).epsilon(1e-10));
        }
        CHECK(r.sum == doctest::Approx(-5 * std::cos(kPi / 5)).epsilon(1e-10));
        CHECK(r.violated);
        REQUIRE(r.constraints_satisfied.has_value());
        CHECK(*r.constraints_satisfied);
    }

    // product state: compare each term against an index-level oracle
    const QuantumState s00 = basis_state(2, "00");
    const InequalityReport p = eval_transformed_bell(s00, Method::kDirect);
    for (int k = 0; k < 5; ++k) {
        const int q = (k + 1) % 5;
        // ry(phi)^dagger sigma_z ry(phi) = cos(phi) sigma_z - sin(phi) sigma_x
        const double expected =
            brute_two_qubit(s00, planar(-4 * kPi * k / 5), planar(-4 * kPi * q / 5));
        CHECK(p.terms[static_cast<std::size_t>(k)].value == doctest::Approx(expected).epsilon(1e-12));
        CHECK(expected == doctest::Approx(std::cos(4 * kPi * k / 5) * std::cos(4 * kPi * q / 5)));
    }
    CHECK_FALSE(*p.constraints_satisfied);
    CHECK(p.violated == (p.sum < -3 - 1e-9));
}

TEST_CASE("noise in reports") {
    const NoiseModel depol{0.4, 1.0};
    // PM products are +-I, so depolarizing leaves every term unchanged
    CHECK(eval_pm(basis_state(2, "00"), Method::kDirect, depol).sum == doctest::Approx(6.0));
    const NoiseModel vis{0.0, 0.9};
    const InequalityReport r = eval_pm(basis_state(2, "00"), Method::kScattering, vis);
    CHECK(r.sum == doctest::Approx(6 * std::pow(0.9, 3)).epsilon(1e-10));
    CHECK(r.ideal_sum == doctest::Approx(6.0));
    CHECK(r.noise.has_value());
    const InequalityReport b = eval_transformed_bell(bell_phi_plus(), Method::kDirect, vis);
    CHECK(b.sum == doctest::Approx(-5 * std::cos(kPi / 5) * 0.9).epsilon(1e-10));
    // two blocks per two-time correlator
    const InequalityReport k = eval_kcbs_temporal(basis_state(1, "0"), kPi, Method::kDirect, vis);
    CHECK(k.sum == doctest::Approx(-3 * 0.81).epsilon(1e-10));
    CHECK_FALSE(k.violated);
    CHECK_THROWS_AS(eval_pm(basis_state(2, "00"), Method::kDirect, NoiseModel{1.5, 1.0}), Error);
}

TEST_CASE("verdicts") {
    CHECK(violates(3.9, 4.0, BoundDirection::kAtMost) == false);
    CHECK(violates(4.1, 4.0, BoundDirection::kAtMost));
    CHECK(violates(-3.1, -3.0, BoundDirection::kAtLeast));
    CHECK_FALSE(violates(-3.0, -3.0, BoundDirection::kAtLeast));
}
