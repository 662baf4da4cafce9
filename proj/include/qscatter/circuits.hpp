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

#pragma once

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "qscatter/numerics.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

enum class ControlPolarity { kOnOne, kOnZero };

/**
 * One gate of a circuit: a unitary `u` on an ordered list of target qubits,
 * optionally conditioned on a control qubit. A gate whose targets are all
 * register qubits in order is a "global" gate. Labels are for display only.
 */
class GateOp {
public:
    static GateOp single(std::size_t target, ComplexMatrix u, std::string label);
    static GateOp controlled(std::size_t control, ControlPolarity polarity, std::vector<std::size_t> targets,
                             ComplexMatrix u, std::string label);
    static GateOp global(std::size_t qubits, ComplexMatrix u, std::string label);

    const ComplexMatrix &unitary() const noexcept {
        return u_;
    }
    const std::vector<std::size_t> &targets() const noexcept {
        return targets_;
    }
    const std::optional<std::size_t> &control() const noexcept {
        return control_;
    }
    ControlPolarity polarity() const noexcept {
        return polarity_;
    }
    const std::string &label() const noexcept {
        return label_;
    }

    /// Full 2^n x 2^n matrix of this gate on an n-qubit register.
    ComplexMatrix full_matrix(std::size_t qubits) const;
    GateOp inverse() const;

private:
    GateOp(std::optional<std::size_t> control, ControlPolarity polarity, std::vector<std::size_t> targets,
           ComplexMatrix u, std::string label);

    std::optional<std::size_t> control_;
    ControlPolarity polarity_;
    std::vector<std::size_t> targets_;
    ComplexMatrix u_;
    std::string label_;
};

class Circuit {
public:
    explicit Circuit(std::size_t qubits);

    std::size_t qubits() const noexcept {
        return qubits_;
    }
    const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }

    /// Appends a gate; throws if any index is outside the register.
    Circuit &add(GateOp op);
    /// Adjoint circuit: reversed order, each gate inverted.
    Circuit inverse() const;
    /// Product of all gate matrices, last gate leftmost.
    ComplexMatrix unitary() const;

private:
    std::size_t qubits_;
    std::vector<GateOp> ops_;
};

// Gate matrices. Rotations follow r_a(theta) = exp(-i theta sigma_a / 2).
ComplexMatrix hadamard_matrix();
ComplexMatrix rx_matrix(double theta);
ComplexMatrix ry_matrix(double theta);
ComplexMatrix rz_matrix(double theta);

GateOp hadamard(std::size_t target);
GateOp pauli_x_gate(std::size_t target);
GateOp pauli_y_gate(std::size_t target);
GateOp pauli_z_gate(std::size_t target);
GateOp rx(double theta, std::size_t target);
GateOp ry(double theta, std::size_t target);
GateOp rz(double theta, std::size_t target);
GateOp cnot(std::size_t control, std::size_t target);

/// Lifts u (acting on `targets`, first target = most significant) to the full
/// n-qubit register with identity elsewhere.
ComplexMatrix embed(const ComplexMatrix &u, std::span<const std::size_t> targets, std::size_t qubits);

/// Gates applied first to last; pure states stay pure, mixed go to U rho U^dagger.
QuantumState apply(const Circuit &circuit, const QuantumState &state);

/// Haar-random unitary (QR of a complex Gaussian matrix, phases fixed).
ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng);

/// Named circuits accepted by the CLI. "fig4b-prep": Hadamard on qubit 2,
/// then CNOT with control 2 and target 1, on three qubits (probe = qubit 0).
Circuit named_circuit(std::string_view name);

}  // namespace qscatter
