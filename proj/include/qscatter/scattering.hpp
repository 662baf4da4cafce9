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

// Generalized scattering (Hadamard-test) circuit for n-point temporal
// correlators. A probe qubit at register index 0 is put in superposition,
// controls one Heisenberg-evolved observable per time slot, and is rotated
// back; its <sigma_z> then equals Re tr(rho_sys O(t_1) ... O(t_n)).

#pragma once

#include <string>
#include <vector>

#include "qscatter/circuits.hpp"
#include "qscatter/numerics.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

/**
 * Observable measured at one time instant together with the evolution that
 * precedes it. `observable` acts on all N system qubits and squares to the
 * identity; `evolution` is the 2^N x 2^N unitary U_k, so the measured
 * operator is U_k^dagger O U_k.
 */
class TimeSlot {
public:
    /// Tensor product of one dichotomic 2x2 operator per system qubit
    /// (identity allowed), qubit 0 leftmost.
    static TimeSlot per_qubit(std::vector<ComplexMatrix> factors, ComplexMatrix evolution, std::string label = {});
    /// A dichotomic operator on the whole system register.
    static TimeSlot joint(ComplexMatrix observable, ComplexMatrix evolution, std::string label = {});

    const ComplexMatrix &observable() const noexcept {
        return observable_;
    }
    const ComplexMatrix &evolution() const noexcept {
        return evolution_;
    }
    const std::string &label() const noexcept {
        return label_;
    }
    std::size_t system_qubits() const noexcept {
        return qubits_;
    }

private:
    TimeSlot(std::size_t qubits, ComplexMatrix observable, ComplexMatrix evolution, std::string label);

    std::size_t qubits_;
    ComplexMatrix observable_;
    ComplexMatrix evolution_;
    std::string label_;
};

/// Ordered time slots on an N-qubit system (1 <= N <= 3).
class TemporalCorrelationSpec {
public:
    TemporalCorrelationSpec(std::size_t system_qubits, std::vector<TimeSlot> slots);

    std::size_t system_qubits() const noexcept {
        return system_qubits_;
    }
    const std::vector<TimeSlot> &slots() const noexcept {
        return slots_;
    }

private:
    std::size_t system_qubits_;
    std::vector<TimeSlot> slots_;
};

/// U_k^dagger O U_k.
ComplexMatrix heisenberg_observable(const TimeSlot &slot);

/// O(t_1) O(t_2) ... O(t_n), left to right; identity for no slots.
ComplexMatrix ordered_product(const TemporalCorrelationSpec &spec);

/// The operator the scattering circuit applies under control of the probe:
/// slot 1 acts first, so this is O(t_n) ... O(t_1).
ComplexMatrix controlled_product(const TemporalCorrelationSpec &spec);

/// H(probe); controlled-O(t_k) on the system for k = 1..n; H(probe).
/// The circuit has N + 1 qubits with the probe at index 0.
Circuit build_scattering_circuit(const TemporalCorrelationSpec &spec);

/// Re tr(rho (sigma_z (x) I)) with the probe at qubit 0.
double probe_sigma_z(const QuantumState &state);
/// Re tr(rho (sigma_y (x) I)); after the scattering circuit this is
/// -Im tr(rho_sys W) with W = controlled_product(spec).
double probe_sigma_y(const QuantumState &state);

/// |0><0| (x) rho_sys through the scattering circuit.
QuantumState scattering_output(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec);

/// Probe <sigma_z> after the scattering circuit.
double correlator_scattering(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec);
/// Re tr(rho_sys O(t_1) ... O(t_n)).
double correlator_direct(const QuantumState &rho_sys, const TemporalCorrelationSpec &spec);

/// exp(-i theta sigma_a) for a in {'x', 'y', 'z'}: the evolution generated by
/// H = hbar omega sigma_a over a time with omega t = theta.
ComplexMatrix pauli_evolution(char axis, double theta);

}  // namespace qscatter
