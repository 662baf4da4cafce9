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

#include "qscatter/inequalities.hpp"

#include <cmath>
#include <numbers>

#include "qscatter/circuits.hpp"
#include "qscatter/error.hpp"
#include "qscatter/sequential.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

namespace {

constexpr double kPi = std::numbers::pi;

ComplexMatrix pauli(char axis) {
    switch (axis) {
        case 'I':
        case 'i':
            return pauli_i();
        case 'X':
        case 'x':
            return pauli_x();
        case 'Y':
        case 'y':
            return pauli_y();
        case 'Z':
        case 'z':
            return pauli_z();
        default:
            fail(ErrorCode::kInvalidArgument, std::string("unknown Pauli '") + axis + "'");
    }
}

struct PmEntry {
    std::string_view label;
    std::string_view paulis;
};

constexpr std::array<PmEntry, 9> kPmEntries{{
    {"A", "ZI"},
    {"B", "IZ"},
    {"C", "ZZ"},
    {"a", "IX"},
    {"b", "XI"},
    {"c", "XX"},
    {"alpha", "ZX"},
    {"beta", "XZ"},
    {"gamma", "YY"},
}};

std::string join_labels(std::span<const std::string_view> labels) {
    std::string out;
    for (const auto &l : labels) {
        if (!out.empty()) {
            out += '*';
        }
        out += l;
    }
    return out;
}

// Term value under the requested method with optional noise, plus the
// noiseless direct value on the untouched state.
ReportTerm make_term(std::string label, const QuantumState &rho, const TemporalCorrelationSpec &spec, Method method,
                     const std::optional<NoiseModel> &noise, int blocks, double coefficient = 1.0) {
    ReportTerm t;
    t.label = std::move(label);
    t.coefficient = coefficient;
    t.ideal = correlator_direct(rho, spec);
    if (noise) {
        const QuantumState noisy = depolarize(rho, noise->state_depolarizing_p);
        t.value = apply_visibility(evaluate_correlator(noisy, spec, method), blocks, noise->block_visibility_v);
    } else {
        t.value = evaluate_correlator(rho, spec, method);
    }
    return t;
}

void finish(InequalityReport &r) {
    r.sum = 0.0;
    r.ideal_sum = 0.0;
    for (const auto &t : r.terms) {
        r.sum += t.coefficient * t.value;
        r.ideal_sum += t.coefficient * t.ideal;
    }
    r.violated = violates(r.sum, r.classical_bound, r.direction);
    if (r.noise) {
        r.notes.emplace_back(
            "noise: values use (1-p) rho + p I/d and v^n per controlled block; a phenomenological model only");
    }
}

// Single-qubit slot measuring sigma_z after the rotation that turns it into
// sigma_theta (identity evolution for theta = 0).
TimeSlot rotated_z_slot(double theta, std::string label) {
    return TimeSlot::per_qubit({pauli_z()}, ry_matrix(-theta), std::move(label));
}

// The five observables (Z, S, Z, S, Z) used by the KCBS and pentagon sums.
double cycle_angle(std::size_t index, double theta) {
    return index % 2 == 1 ? theta : 0.0;
}

TemporalCorrelationSpec two_time_spec(std::size_t i, std::size_t j, double theta) {
    return TemporalCorrelationSpec(1, {rotated_z_slot(cycle_angle(i, theta), "X" + std::to_string(i)),
                                       rotated_z_slot(cycle_angle(j, theta), "X" + std::to_string(j))});
}

void require_qubits(const QuantumState &rho, std::size_t n, const char *what) {
    require(rho.qubits() == n, ErrorCode::kDimensionMismatch,
            std::string(what) + ": expected a " + std::to_string(n) + "-qubit state");
}

}  // namespace

std::string_view method_name(Method m) {
    switch (m) {
        case Method::kScattering:
            return "scattering";
        case Method::kDirect:
            return "direct";
        case Method::kSequential:
            return "sequential";
    }
    return "direct";
}

Method parse_method(std::string_view name) {
    if (name == "scattering") {
        return Method::kScattering;
    }
    if (name == "direct") {
        return Method::kDirect;
    }
    if (name == "sequential") {
        return Method::kSequential;
    }
    fail(ErrorCode::kInvalidArgument, "unknown method '" + std::string(name) + "'");
}

bool violates(double sum, double bound, BoundDirection direction) {
    return direction == BoundDirection::kAtLeast ? sum < bound - tol::kVerdict : sum > bound + tol::kVerdict;
}

double evaluate_correlator(const QuantumState &rho, const TemporalCorrelationSpec &spec, Method method) {
    switch (method) {
        case Method::kScattering:
            return correlator_scattering(rho, spec);
        case Method::kDirect:
            return correlator_direct(rho, spec);
        case Method::kSequential: {
            std::vector<Observable> seq;
            for (const auto &slot : spec.slots()) {
                seq.emplace_back(heisenberg_observable(slot), slot.label());
            }
            return correlator_sequential(rho, seq);
        }
    }
    fail(ErrorCode::kInternal, "evaluate_correlator: unknown method");
}

ComplexMatrix rotation_to_pauli(char axis) {
    switch (axis) {
        case 'x':
        case 'X':
            return ry_matrix(-kPi / 2);
        case 'y':
        case 'Y':
            return rx_matrix(kPi / 2);
        case 'z':
        case 'Z':
        case 'i':
        case 'I':
            return pauli_i();
        default:
            fail(ErrorCode::kInvalidArgument, std::string("rotation_to_pauli: unknown axis '") + axis + "'");
    }
}

std::string pm_pauli_string(std::string_view label) {
    for (const auto &e : kPmEntries) {
        if (e.label == label) {
            return std::string(e.paulis);
        }
    }
    fail(ErrorCode::kInvalidArgument, "unknown PM observable '" + std::string(label) + "'");
}

Observable pm_observable(std::string_view label) {
    const std::string p = pm_pauli_string(label);
    return Observable(kron(pauli(p[0]), pauli(p[1])), std::string(label));
}

std::array<std::array<Observable, 3>, 3> pm_square() {
    auto row = [](std::size_t r) {
        return std::array<Observable, 3>{pm_observable(kPmEntries[3 * r].label),
                                         pm_observable(kPmEntries[3 * r + 1].label),
                                         pm_observable(kPmEntries[3 * r + 2].label)};
    };
    return {row(0), row(1), row(2)};
}

const std::array<std::array<std::string_view, 3>, 6> &pm_terms() {
    static const std::array<std::array<std::string_view, 3>, 6> terms{{
        {"A", "B", "C"},
        {"b", "c", "a"},
        {"gamma", "alpha", "beta"},
        {"A", "alpha", "a"},
        {"b", "B", "beta"},
        {"gamma", "c", "C"},
    }};
    return terms;
}

TemporalCorrelationSpec pm_term_spec(std::span<const std::string_view, 3> labels) {
    std::vector<TimeSlot> slots;
    for (const auto &label : labels) {
        const std::string p = pm_pauli_string(label);
        std::vector<ComplexMatrix> factors;
        for (char axis : p) {
            factors.push_back(axis == 'I' ? pauli_i() : pauli_z());
        }
        slots.push_back(TimeSlot::per_qubit(std::move(factors),
                                            kron(rotation_to_pauli(p[0]), rotation_to_pauli(p[1])),
                                            std::string(label)));
    }
    return TemporalCorrelationSpec(2, std::move(slots));
}

InequalityReport eval_pm(const QuantumState &rho, Method method, const std::optional<NoiseModel> &noise) {
    require_qubits(rho, 2, "eval_pm");
    if (noise) {
        noise->validate();
    }
    InequalityReport r;
    r.name = "pm";
    r.classical_bound = 4.0;
    r.direction = BoundDirection::kAtMost;
    r.quantum_prediction = 6.0;
    r.method = method;
    r.noise = noise;
    const auto &terms = pm_terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
        r.terms.push_back(make_term(join_labels(terms[k]), rho, pm_term_spec(terms[k]), method, noise, kPmBlocks,
                                    k + 1 == terms.size() ? -1.0 : 1.0));
    }
    finish(r);
    return r;
}

InequalityReport eval_kcbs_temporal(const QuantumState &rho, double theta, Method method,
                                    const std::optional<NoiseModel> &noise) {
    require_qubits(rho, 1, "eval_kcbs_temporal");
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "eval_kcbs_temporal: non-finite theta");
    if (noise) {
        noise->validate();
    }
    InequalityReport r;
    r.name = "kcbs";
    r.classical_bound = -3.0;
    r.direction = BoundDirection::kAtLeast;
    r.quantum_prediction = 1.0 + 4.0 * std::cos(theta);
    r.method = method;
    r.noise = noise;
    for (std::size_t i = 0; i < 5; ++i) {
        const std::size_t j = (i + 1) % 5;
        r.terms.push_back(make_term("X" + std::to_string(i) + "*X" + std::to_string(j), rho,
                                    two_time_spec(i, j, theta), method, noise, kTwoTimeBlocks));
    }
    finish(r);
    return r;
}

InequalityReport eval_pentagon_lg(const QuantumState &rho, double theta, Method method,
                                  const std::optional<NoiseModel> &noise) {
    require_qubits(rho, 1, "eval_pentagon_lg");
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "eval_pentagon_lg: non-finite theta");
    if (noise) {
        noise->validate();
    }
    InequalityReport r;
    r.name = "pentagon";
    r.classical_bound = -2.0;
    r.direction = BoundDirection::kAtLeast;
    r.quantum_prediction = 4.0 + 6.0 * std::cos(theta);
    r.method = method;
    r.noise = noise;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            r.terms.push_back(make_term("X" + std::to_string(i + 1) + "*X" + std::to_string(j + 1), rho,
                                        two_time_spec(i, j, theta), method, noise, kTwoTimeBlocks));
        }
    }
    finish(r);
    r.notes.emplace_back(
        "pairwise two-time reading gives 4 + 6 cos(theta); the reference value -9/4 at cos(theta) = -3/4 is not "
        "reproduced by this reading or by the invasive five-measurement reading");
    return r;
}

InequalityReport eval_pentagon_lg_invasive(const QuantumState &rho, double theta) {
    require_qubits(rho, 1, "eval_pentagon_lg_invasive");
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "eval_pentagon_lg_invasive: non-finite theta");
    std::vector<Observable> seq;
    for (std::size_t i = 0; i < 5; ++i) {
        seq.push_back(i % 2 == 1 ? sigma_theta(theta) : Observable(pauli_z(), "sigma_z"));
    }
    const OutcomeDistribution d = joint_distribution(rho, seq);
    InequalityReport r;
    r.name = "pentagon-invasive";
    r.classical_bound = -2.0;
    r.direction = BoundDirection::kAtLeast;
    const double c = std::cos(theta);
    r.quantum_prediction = 4 * c + 3 * c * c + 2 * c * c * c + c * c * c * c;
    r.method = Method::kSequential;
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i + 1; j < 5; ++j) {
            ReportTerm t;
            t.label = "X" + std::to_string(i + 1) + "*X" + std::to_string(j + 1);
            t.value = d.pair_correlation(i, j);
            t.ideal = t.value;
            r.terms.push_back(std::move(t));
        }
    }
    finish(r);
    r.notes.emplace_back(
        "invasive reading: all five observables measured in one sequence, giving 4c + 3c^2 + 2c^3 + c^4 with "
        "c = cos(theta)");
    return r;
}

Observable pentagram_observable(int j) {
    require(j >= 0 && j <= 4, ErrorCode::kInvalidArgument, "pentagram_observable: j must be in 0..4");
    // e^{-i phi sigma_y} = ry(2 phi), phi = 2 pi j / 5.
    const ComplexMatrix u = ry_matrix(4.0 * kPi * j / 5.0);
    const ComplexMatrix o = matmul(matmul(adjoint(u), pauli_z()), u);
    return Observable(scale(add(o, adjoint(o)), 0.5), "sigma_" + std::to_string(j));
}

TemporalCorrelationSpec bell_term_spec(int r, int q) {
    require(r >= 0 && r <= 4 && q >= 0 && q <= 4, ErrorCode::kInvalidArgument, "bell_term_spec: index out of range");
    const ComplexMatrix id = pauli_i();
    TimeSlot a = TimeSlot::per_qubit({pauli_z(), id}, kron(ry_matrix(4.0 * kPi * r / 5.0), id),
                                     "A" + std::to_string(r));
    TimeSlot b = TimeSlot::per_qubit({id, pauli_z()}, kron(id, ry_matrix(4.0 * kPi * q / 5.0)),
                                     "B" + std::to_string(q));
    return TemporalCorrelationSpec(2, {std::move(a), std::move(b)});
}

InequalityReport eval_transformed_bell(const QuantumState &rho_ab, Method method,
                                       const std::optional<NoiseModel> &noise) {
    require_qubits(rho_ab, 2, "eval_transformed_bell");
    if (noise) {
        noise->validate();
    }
    InequalityReport r;
    r.name = "bell";
    r.classical_bound = -3.0;
    r.direction = BoundDirection::kAtLeast;
    r.quantum_prediction = -5.0 * std::cos(kPi / 5.0);
    r.method = method;
    r.noise = noise;
    for (int k = 0; k < 5; ++k) {
        const int q = (k + 1) % 5;
        r.terms.push_back(make_term("A" + std::to_string(k) + "*B" + std::to_string(q), rho_ab, bell_term_spec(k, q),
                                    method, noise, kBellBlocks));
    }
    bool satisfied = true;
    for (int j = 0; j < 5; ++j) {
        ReportTerm t = make_term("A" + std::to_string(j) + "*B" + std::to_string(j), rho_ab, bell_term_spec(j, j),
                                 method, std::nullopt, kBellBlocks);
        satisfied = satisfied && std::abs(t.ideal - 1.0) <= tol::kVerdict;
        r.constraints.push_back(std::move(t));
    }
    r.constraints_satisfied = satisfied;
    finish(r);
    return r;
}

}  // namespace qscatter
