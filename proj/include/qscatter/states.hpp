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

#include <cstdint>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "qscatter/numerics.hpp"

namespace qscatter {

/**
 * State of an n-qubit register, either a normalized amplitude vector or a
 * density matrix.
 *
 * Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
 * basis label: basis index 0b100 on three qubits is |1> (x) |0> (x) |0>.
 * Pure states are promoted to density matrices on demand; a mixed state is
 * never demoted.
 */
class QuantumState {
public:
    /// Validates normalization to tol::kNorm.
    static QuantumState pure(std::vector<Complex> amplitudes);
    /// Validates Hermiticity, unit trace and positivity.
    static QuantumState mixed(ComplexMatrix rho);

    std::size_t qubits() const noexcept {
        return qubits_;
    }
    std::size_t dimension() const noexcept {
        return std::size_t{1} << qubits_;
    }
    bool is_pure() const noexcept {
        return std::holds_alternative<std::vector<Complex>>(form_);
    }
    /// Throws if the state is mixed.
    std::span<const Complex> amplitudes() const;
    ComplexMatrix density() const;

private:
    using Form = std::variant<std::vector<Complex>, ComplexMatrix>;
    QuantumState(std::size_t qubits, Form form) : qubits_(qubits), form_(std::move(form)) {
    }

    std::size_t qubits_;
    Form form_;
};

QuantumState basis_state(std::size_t qubits, std::string_view label);
/// (|00> + |11>) / sqrt(2).
QuantumState bell_phi_plus();
QuantumState maximally_mixed(std::size_t qubits);
/// (1 - epsilon) I / 2^n + epsilon |psi><psi|.
QuantumState pseudopure(const QuantumState &psi, double epsilon);

/// Uhlmann-Jozsa fidelity (tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, or the
/// squared overlap when both states are pure.
double fidelity(const QuantumState &a, const QuantumState &b);

/// Reduced state on `keep` (sorted ascending; qubit order is preserved).
/// An empty keep set traces out everything and yields the 1x1 matrix [1].
ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t qubits,
                            std::span<const std::size_t> keep);
QuantumState partial_trace(const QuantumState &state, std::span<const std::size_t> keep);

/// Re tr(rho O).
double expectation(const QuantumState &state, const ComplexMatrix &op);
/// tr(rho O), complex.
Complex trace_with(const QuantumState &state, const ComplexMatrix &op);

/// Haar-random pure state from a normalized standard complex Gaussian vector
/// drawn with std::mt19937_64 seeded by `seed`.
QuantumState random_pure_state(std::size_t qubits, std::uint64_t seed);

/// States equal as rays (pure) or density matrices (mixed) within tolerance.
bool approx_equal(const QuantumState &a, const QuantumState &b, double tolerance);

/**
 * Parses a state literal: a bitstring such as "00", the token "bell", the
 * token "mixed:<n>" for I/2^n, or a path to a text file with one "re im"
 * amplitude pair per line (blank lines and '#' comments ignored).
 */
QuantumState parse_state_literal(std::string_view literal);

}  // namespace qscatter
