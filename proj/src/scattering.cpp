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

#include "qscatter/scattering.hpp"

#include <bit>

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

namespace {

void require_dichotomic(const ComplexMatrix &o, const std::string &what) {
    require(is_hermitian(o, tol::kHermitian), ErrorCode::kNotHermitian, what + ": observable is not Hermitian");
    require(max_abs_diff(matmul(o, o), ComplexMatrix::identity(o.rows())) <= tol::kDichotomic,
            ErrorCode::kInvalidArgument, what + ": observable does not square to identity");
}

}  // namespace

TimeSlot::TimeSlot(std::size_t qubits, ComplexMatrix observable, ComplexMatrix evolution, std::string label)
    : qubits_(qubits), observable_(std::move(observable)), evolution_(std::move(evolution)),
      label_(std::move(label)) {
    const std::size_t dim = std::size_t{1} << qubits_;
    require(observable_.is_square() && observable_.rows() == dim, ErrorCode::kDimensionMismatch,
            "TimeSlot: observable does not match system size");
    require(evolution_.is_square() && evolution_.rows() == dim, ErrorCode::kDimensionMismatch,
            "TimeSlot: evolution does not match system size");
    require(is_unitary(evolution_, tol::kUnitary), ErrorCode::kInvalidArgument, "TimeSlot: evolution is not unitary");
    require_dichotomic(observable_, "TimeSlot");
}

TimeSlot TimeSlot::per_qubit(std::vector<ComplexMatrix> factors, ComplexMatrix evolution, std::string label) {
    require(!factors.empty(), ErrorCode::kInvalidArgument, "TimeSlot: no per-qubit observables");
    for (const auto &f : factors) {
        require(f.is_square() && f.rows() == 2, ErrorCode::kDimensionMismatch,
                "TimeSlot: per-qubit observables must be 2x2");
        require_dichotomic(f, "TimeSlot");
    }
    ComplexMatrix obs = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        obs = kron(obs, factors[i]);
    }
    return TimeSlot(factors.size(), std::move(obs), std::move(evolution), std::move(label));
}

TimeSlot TimeSlot::joint(ComplexMatrix observable, ComplexMatrix evolution, std::string label) {
    require(observable.is_square() && observable.rows() >= 2 && std::has_single_bit(observable.rows()),
            ErrorCode::kDimensionMismatch, "TimeSlot: observable dimension is not 2^N");
    const auto qubits = static_cast<std::size_t>(std::countr_zero(observable.rows()));
    return TimeSlot(qubits, std::move(observable), std::move(evolution), std::move(label));
}

TemporalCorrelationSpec::TemporalCorrelationSpec(std::size_t system_qubits, std::vector<TimeSlot> slots)
    : system_qubits_(system_qubits), slots_(std::move(slots)) {
    require(system_qubits_ >= 1 && system_qubits_ <= 3, ErrorCode::kInvalidArgument,
            "TemporalCorrelationSpec: system must have 1 to 3 qubits");
    for (const auto &s : slots_) {
        require(s.system_qubits() == system_qubits_, ErrorCode::kDimensionMismatch,
                "TemporalCorrelationSpec: slot sized for a different system");
    }
}

ComplexMatrix heisenberg_observable(const TimeSlot &slot) {
    const ComplexMatrix o = matmul(matmul(adjoint(slot.evolution()), slot.observable()), slot.evolution());
    return scale(add(o, adjoint(o)), 0.5);
}

ComplexMatrix ordered_product(const TemporalCorrelationSpec &spec) {
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << spec.system_qubits());
    for (const auto &slot : spec.slots()) {
        u = matmul(u, heisenberg_observable(slot));
    }
    return u;
}

ComplexMatrix controlled_product(const TemporalCorrelationSpec &spec) {
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << spec.system_qubits());
    for (const auto &slot : spec.slots()) {
        u = matmul(heisenberg_observable(slot), u);
    }
    return u;
}

Circuit build_scattering_circuit(const TemporalCorrelationSpec &spec) {
    const std::size_t n = spec.system_qubits();
    Circuit c(n + 1);
    std::vector<std::size_t> system(n);
    for (std::size_t q = 0; q < n; ++q) {
        system[q] = q + 1;
    }
    c.add(hadamard(0));
    std::size_t k = 0;
    for (const auto &slot : spec.slots()) {
        ++k;
        const std::string label = slot.label().empty() ? "O(t" + std::to_string(k) + ")" : slot.label();
        c.add(GateOp::controlled(0, ControlPolarity::kOnOne, system, heisenberg_observable(slot), "c-" + label));
    }
    c.add(hadamard(0));
    return c;
}

namespace {

double probe_expectation(const QuantumState &state, const ComplexMatrix &pauli) {
    require(state.qubits() >= 2, ErrorCode::kDimensionMismatch, "probe readout needs a probe and a system");
    const std::size_t probe[] = {0};
    return expectation(state, embed(pauli, probe, state.qubits()));
}

}  // namespace

double probe_sigma_z(const QuantumState &state) {
    return probe_expectation(state, pauli_z());
}

double probe_sigma_y(const QuantumState &state) {
    return probe_expectation(state, pauli_y());
}

QuantumState scattering_output(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec) {
    require(rho_sys.qubits() == spec.system_qubits(), ErrorCode::kDimensionMismatch,
            "scattering: state and spec system sizes differ");
    const Circuit circuit = build_scattering_circuit(spec);
    if (rho_sys.is_pure()) {
        const auto psi = rho_sys.amplitudes();
        std::vector<Complex> in(2 * psi.size());
        std::copy(psi.begin(), psi.end(), in.begin());
        return apply(circuit, QuantumState::pure(std::move(in)));
    }
    const ComplexMatrix probe0{{1, 0}, {0, 0}};
    return apply(circuit, QuantumState::mixed(kron(probe0, rho_sys.density())));
}

double correlator_scattering(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec) {
    return probe_sigma_z(scattering_output(rho_sys, spec));
}

double correlator_direct(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec) {
    require(rho_sys.qubits() == spec.system_qubits(), ErrorCode::kDimensionMismatch,
            "correlator_direct: state and spec system sizes differ");
    return expectation(rho_sys, ordered_product(spec));
}

ComplexMatrix pauli_evolution(char axis, double theta) {
    switch (axis) {
        case 'x':
            return rx_matrix(2 * theta);
        case 'y':
            return ry_matrix(2 * theta);
        case 'z':
            return rz_matrix(2 * theta);
        default:
            fail(ErrorCode::kInvalidArgument, std::string("pauli_evolution: unknown axis '") + axis + "'");
    }
}

}  // namespace qscatter
