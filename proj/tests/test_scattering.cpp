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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/scattering.hpp"
#include "qscatter/selftest.hpp"
#include "qscatter/spec_io.hpp"
#include "test_support.hpp"

using namespace qscatter;
using qscatter::testing::check_close;
using qscatter::testing::naive_product;

namespace {

constexpr double kPi = std::numbers::pi;

TemporalCorrelationSpec single_slot(const ComplexMatrix &o, const ComplexMatrix &u) {
    return TemporalCorrelationSpec(1, {TimeSlot::per_qubit({o}, u)});
}

// Re tr(rho W) and Im tr(rho W) computed without the library's trace helpers.
Complex trace_product(const QuantumState &rho, const ComplexMatrix &w) {
    const ComplexMatrix m = naive_product(rho.density(), w);
    Complex s{};
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += m(i, i);
    }
    return s;
}

}  // namespace

TEST_CASE("heisenberg observable") {
    const ComplexMatrix zi = kron(pauli_z(), pauli_i());
    const TimeSlot plain = TimeSlot::joint(zi, ComplexMatrix::identity(4));
    check_close(heisenberg_observable(plain), zi, 0.0);

    const TimeSlot rotated = TimeSlot::per_qubit({pauli_i(), pauli_z()}, kron(pauli_i(), ry_matrix(-kPi / 2)));
    check_close(heisenberg_observable(rotated), kron(pauli_i(), pauli_x()), 1e-15);

    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        const TimeSlot s = TimeSlot::joint(zi, random_unitary(4, rng));
        const Spectrum sp = hermitian_eigen(heisenberg_observable(s));
        CHECK(std::abs(sp.eigenvalues.front() + 1) < 1e-10);
        CHECK(std::abs(sp.eigenvalues.back() - 1) < 1e-10);
    }
}

TEST_CASE("time slot validation") {
    const ComplexMatrix not_dichotomic = scale(pauli_z(), 2.0);
    CHECK_THROWS_AS(TimeSlot::per_qubit({not_dichotomic}, pauli_i()), Error);
    CHECK_THROWS_AS(TimeSlot::per_qubit({pauli_z()}, ComplexMatrix{{1, 1}, {0, 1}}), Error);
    CHECK_THROWS_AS(TimeSlot::joint(pauli_z(), ComplexMatrix::identity(4)), Error);
    CHECK_THROWS_AS(TemporalCorrelationSpec(2, {TimeSlot::per_qubit({pauli_z()}, pauli_i())}), Error);
    CHECK_THROWS_AS(TemporalCorrelationSpec(4, {}), Error);
}

TEST_CASE("scattering circuit structure") {
    const TemporalCorrelationSpec empty(1, {});
    CHECK(correlator_scattering(basis_state(1, "0"), empty) == doctest::Approx(1.0));
    CHECK(correlator_direct(basis_state(1, "0"), empty) == doctest::Approx(1.0));
    check_close(build_scattering_circuit(empty).unitary(), ComplexMatrix::identity(4), 1e-15);

    std::mt19937_64 rng(21);
    const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
    const Circuit c = build_scattering_circuit(spec);
    CHECK(c.qubits() == spec.system_qubits() + 1);
    const std::size_t d = std::size_t{1} << spec.system_qubits();
    const ComplexMatrix u = controlled_product(spec);
    ComplexMatrix block = kron(ComplexMatrix{{1, 0}, {0, 0}}, ComplexMatrix::identity(d));
    block = add(block, kron(ComplexMatrix{{0, 0}, {0, 1}}, u));
    const ComplexMatrix h = kron(hadamard_matrix(), ComplexMatrix::identity(d));
    check_close(c.unitary(), matmul(matmul(h, block), h), 1e-10);
}

TEST_CASE("probe readout") {
    const QuantumState zero_sys = QuantumState::pure({1, 0, 0, 0});  // |0>|0>
    const QuantumState one_sys = QuantumState::pure({0, 0, 1, 0});   // |1>|0>
    CHECK(probe_sigma_z(zero_sys) == doctest::Approx(1.0));
    CHECK(probe_sigma_z(one_sys) == doctest::Approx(-1.0));
    CHECK(std::abs(probe_sigma_y(zero_sys)) < 1e-15);

    const QuantumState plus = QuantumState::pure({1 / std::sqrt(2.0), 1 / std::sqrt(2.0)});
    CHECK(std::abs(correlator_scattering(plus, single_slot(pauli_z(), pauli_i()))) < 1e-12);

    // commuting product: Hermitian, so no imaginary part
    const QuantumState rho2 = random_test_state(2, 4);
    const std::array<std::string_view, 3> row{"A", "B", "C"};
    CHECK(std::abs(probe_sigma_y(scattering_output(rho2, pm_term_spec(row)))) < 1e-12);

    // non-commuting: <sigma_y> = -Im tr(rho W)
    std::mt19937_64 rng(66);
    for (int rep = 0; rep < 20; ++rep) {
        const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
        const QuantumState rho = random_test_state(spec.system_qubits(), 300 + static_cast<std::uint64_t>(rep));
        const Complex t = trace_product(rho, controlled_product(spec));
        CHECK(std::abs(probe_sigma_y(scattering_output(rho, spec)) + t.imag()) < 1e-10);
        CHECK(std::abs(correlator_scattering(rho, spec) - t.real()) < 1e-10);
        // the probe marginal stays normalized
        const std::array<std::size_t, 1> probe{0};
        CHECK(std::abs(trace(partial_trace(scattering_output(rho, spec), probe).density()) - 1.0) < 1e-10);
    }
}

TEST_CASE("correlators on PM entries") {
    const std::array<std::string_view, 3> gcc{"gamma", "c", "C"};
    const std::array<std::string_view, 3> abc{"A", "B", "C"};
    const std::array<std::string_view, 3> aaa{"A", "alpha", "a"};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const QuantumState rho = random_test_state(2, seed);
        CHECK(correlator_scattering(rho, pm_term_spec(gcc)) == doctest::Approx(-1.0).epsilon(1e-10));
        CHECK(correlator_scattering(rho, pm_term_spec(abc)) == doctest::Approx(1.0).epsilon(1e-10));
    }
    CHECK(correlator_direct(basis_state(2, "00"), pm_term_spec(aaa)) == doctest::Approx(1.0));
    const QuantumState out = scattering_output(basis_state(2, "00"), pm_term_spec(aaa));
    CHECK(probe_sigma_z(out) == doctest::Approx(1.0));
}

TEST_CASE("scattering equals direct on random specs") {
    std::mt19937_64 rng(777);
    double worst = 0;
    for (int rep = 0; rep < 200; ++rep) {
        const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
        const QuantumState rho = random_test_state(spec.system_qubits(), 40 + static_cast<std::uint64_t>(rep));
        const double s = correlator_scattering(rho, spec);
        const double d = correlator_direct(rho, spec);
        worst = std::max(worst, std::abs(s - d));
        CHECK(std::abs(s) <= 1 + 1e-10);
    }
    CHECK(worst < 1e-10);
    // three system qubits as well
    for (int rep = 0; rep < 10; ++rep) {
        const TemporalCorrelationSpec spec = random_spec(rng, 3, 2);
        const QuantumState rho = random_test_state(spec.system_qubits(), 900 + static_cast<std::uint64_t>(rep));
        CHECK(std::abs(correlator_scattering(rho, spec) - correlator_direct(rho, spec)) < 1e-10);
    }
}

TEST_CASE("ordered and controlled products are reverses") {
    std::mt19937_64 rng(5);
    const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
    ComplexMatrix forward = ComplexMatrix::identity(std::size_t{1} << spec.system_qubits());
    ComplexMatrix backward = forward;
    for (const auto &s : spec.slots()) {
        forward = naive_product(forward, heisenberg_observable(s));
        backward = naive_product(heisenberg_observable(s), backward);
    }
    check_close(ordered_product(spec), forward, 1e-12);
    check_close(controlled_product(spec), backward, 1e-12);
}

TEST_CASE("pauli evolution") {
    for (double theta : {0.2, 1.0, -2.3}) {
        check_close(pauli_evolution('x', theta), rx_matrix(2 * theta), 1e-15);
        check_close(pauli_evolution('y', theta), ry_matrix(2 * theta), 1e-15);
        check_close(pauli_evolution('z', theta), rz_matrix(2 * theta), 1e-15);
    }
    CHECK_THROWS_AS(pauli_evolution('q', 0.1), Error);
}

TEST_CASE("spec parsing") {
    CHECK(parse_angle("pi/2") == doctest::Approx(kPi / 2));
    CHECK(parse_angle("theta=acos(-0.75)") == doctest::Approx(std::acos(-0.75)));
    CHECK(parse_angle(" -2*pi/5 + 1 ") == doctest::Approx(-2 * kPi / 5 + 1));
    CHECK(parse_angle("1.5e-1") == doctest::Approx(0.15));
    CHECK_THROWS_AS(parse_angle("acos(2)"), Error);
    CHECK_THROWS_AS(parse_angle("pie"), Error);
    CHECK_THROWS_AS(parse_angle("1 +"), Error);
    CHECK_THROWS_AS(parse_angle(""), Error);

    const char *text = R"json({
      "system_qubits": 2,
      "slots": [
        {"observable": ["Z", "I"], "evolution": [{"gate": "ry", "qubit": 0, "angle": "-pi/2"}]},
        {"observable": "pm:gamma"},
        {"observable": ["sigma_theta(pi/3)", "pentagram:2"]}
      ]})json";
    const TemporalCorrelationSpec spec = parse_spec_json(text);
    REQUIRE(spec.slots().size() == 3);
    check_close(heisenberg_observable(spec.slots()[0]), kron(pauli_x(), pauli_i()), 1e-15);
    check_close(heisenberg_observable(spec.slots()[1]), kron(pauli_y(), pauli_y()), 0.0);
    check_close(spec.slots()[2].observable(),
                kron(add(scale(pauli_z(), 0.5), scale(pauli_x(), std::sqrt(3.0) / 2)),
                     pentagram_observable(2).matrix()),
                1e-15);

    CHECK_THROWS_AS(parse_spec_json("{"), Error);
    CHECK_THROWS_AS(parse_spec_json(R"({"system_qubits": 1, "slots": [{"observable": ["W"]}]})"), Error);
    CHECK_THROWS_AS(parse_spec_json(R"({"system_qubits": 1, "slots": [{"observable": ["Z", "Z"]}]})"), Error);
    CHECK_THROWS_AS(parse_spec_json(R"({"system_qubits": 1, "slots": [{"observable": "pm:A"}]})"), Error);
    CHECK_THROWS_AS(
        parse_spec_json(
            R"({"system_qubits": 1, "slots": [{"observable": ["Z"], "evolution": [{"gate": "ry", "qubit": 3, "angle": 1}]}]})"),
        Error);
}
