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

#include "qscatter/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

GateOp::GateOp(std::optional<std::size_t> control, ControlPolarity polarity, std::vector<std::size_t> targets,
               ComplexMatrix u, std::string label)
    : control_(control), polarity_(polarity), targets_(std::move(targets)), u_(std::move(u)),
      label_(std::move(label)) {
    require(!targets_.empty(), ErrorCode::kInvalidArgument, "GateOp: no targets");
    require(u_.is_square() && u_.rows() == (std::size_t{1} << targets_.size()), ErrorCode::kDimensionMismatch,
            "GateOp '" + label_ + "': unitary size does not match target count");
    require(is_unitary(u_, tol::kUnitary), ErrorCode::kInvalidArgument, "GateOp '" + label_ + "': not unitary");
    std::vector<std::size_t> sorted = targets_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::kInvalidArgument,
            "GateOp '" + label_ + "': duplicate target");
    if (control_) {
        require(!std::binary_search(sorted.begin(), sorted.end(), *control_), ErrorCode::kInvalidArgument,
                "GateOp '" + label_ + "': control is also a target");
    }
}

GateOp GateOp::single(std::size_t target, ComplexMatrix u, std::string label) {
    return GateOp(std::nullopt, ControlPolarity::kOnOne, {target}, std::move(u), std::move(label));
}

GateOp GateOp::controlled(std::size_t control, ControlPolarity polarity, std::vector<std::size_t> targets,
                          ComplexMatrix u, std::string label) {
    return GateOp(control, polarity, std::move(targets), std::move(u), std::move(label));
}

GateOp GateOp::global(std::size_t qubits, ComplexMatrix u, std::string label) {
    std::vector<std::size_t> all(qubits);
    for (std::size_t q = 0; q < qubits; ++q) {
        all[q] = q;
    }
    return GateOp(std::nullopt, ControlPolarity::kOnOne, std::move(all), std::move(u), std::move(label));
}

ComplexMatrix GateOp::full_matrix(std::size_t qubits) const {
    const ComplexMatrix body = embed(u_, targets_, qubits);
    if (!control_) {
        return body;
    }
    const std::size_t c[] = {*control_};
    const ComplexMatrix p0{{1, 0}, {0, 0}};
    const ComplexMatrix p1{{0, 0}, {0, 1}};
    const ComplexMatrix &active = polarity_ == ControlPolarity::kOnOne ? p1 : p0;
    const ComplexMatrix &idle = polarity_ == ControlPolarity::kOnOne ? p0 : p1;
    return add(embed(idle, c, qubits), matmul(embed(active, c, qubits), body));
}

GateOp GateOp::inverse() const {
    return GateOp(control_, polarity_, targets_, adjoint(u_), label_ + "^-1");
}

Circuit::Circuit(std::size_t qubits) : qubits_(qubits) {
    require(qubits >= 1 && qubits <= 4, ErrorCode::kInvalidArgument, "Circuit: qubit count must be in [1, 4]");
}

Circuit &Circuit::add(GateOp op) {
    for (auto t : op.targets()) {
        require(t < qubits_, ErrorCode::kInvalidArgument, "Circuit: target index out of range");
    }
    if (op.control()) {
        require(*op.control() < qubits_, ErrorCode::kInvalidArgument, "Circuit: control index out of range");
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(qubits_);
    for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
        out.add(it->inverse());
    }
    return out;
}

ComplexMatrix Circuit::unitary() const {
    ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << qubits_);
    for (const auto &op : ops_) {
        u = matmul(op.full_matrix(qubits_), u);
    }
    return u;
}

ComplexMatrix hadamard_matrix() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{h, h}, {h, -h}};
}

ComplexMatrix rx_matrix(double theta) {
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "rx: non-finite angle");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {{c, Complex(0, -s)}, {Complex(0, -s), c}};
}

ComplexMatrix ry_matrix(double theta) {
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "ry: non-finite angle");
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {{c, -s}, {s, c}};
}

ComplexMatrix rz_matrix(double theta) {
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "rz: non-finite angle");
    return {{std::polar(1.0, -theta / 2), 0}, {0, std::polar(1.0, theta / 2)}};
}

GateOp hadamard(std::size_t target) {
    return GateOp::single(target, hadamard_matrix(), "H");
}

GateOp pauli_x_gate(std::size_t target) {
    return GateOp::single(target, pauli_x(), "X");
}

GateOp pauli_y_gate(std::size_t target) {
    return GateOp::single(target, pauli_y(), "Y");
}

GateOp pauli_z_gate(std::size_t target) {
    return GateOp::single(target, pauli_z(), "Z");
}

GateOp rx(double theta, std::size_t target) {
    return GateOp::single(target, rx_matrix(theta), "Rx");
}

GateOp ry(double theta, std::size_t target) {
    return GateOp::single(target, ry_matrix(theta), "Ry");
}

GateOp rz(double theta, std::size_t target) {
    return GateOp::single(target, rz_matrix(theta), "Rz");
}

GateOp cnot(std::size_t control, std::size_t target) {
    return GateOp::controlled(control, ControlPolarity::kOnOne, {target}, pauli_x(), "CNOT");
}

ComplexMatrix embed(const ComplexMatrix &u, std::span<const std::size_t> targets, std::size_t qubits) {
    require(!targets.empty(), ErrorCode::kInvalidArgument, "embed: no targets");
    require(u.is_square() && u.rows() == (std::size_t{1} << targets.size()), ErrorCode::kDimensionMismatch,
            "embed: operator size does not match target count");
    std::size_t mask = 0;
    for (auto t : targets) {
        require(t < qubits, ErrorCode::kInvalidArgument, "embed: target index out of range");
        const std::size_t b = std::size_t{1} << (qubits - 1 - t);
        require((mask & b) == 0, ErrorCode::kInvalidArgument, "embed: duplicate target");
        mask |= b;
    }
    // Index of a full basis state inside the target subspace.
    auto sub_index = [&](std::size_t full) {
        std::size_t s = 0;
        for (auto t : targets) {
            s = (s << 1) | ((full >> (qubits - 1 - t)) & 1U);
        }
        return s;
    };
    const std::size_t dim = std::size_t{1} << qubits;
    ComplexMatrix out(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~mask) == (j & ~mask)) {
                out(i, j) = u(sub_index(i), sub_index(j));
            }
        }
    }
    return out;
}

QuantumState apply(const Circuit &circuit, const QuantumState &state) {
    require(circuit.qubits() == state.qubits(), ErrorCode::kDimensionMismatch,
            "apply: circuit and state qubit counts differ");
    if (circuit.ops().empty()) {
        return state;
    }
    const ComplexMatrix u = circuit.unitary();
    if (state.is_pure()) {
        std::vector<Complex> out = qscatter::apply(u, state.amplitudes());
        // Renormalize away accumulated rounding; the map is unitary.
        double norm = 0.0;
        for (const auto &a : out) {
            norm += std::norm(a);
        }
        for (auto &a : out) {
            a /= std::sqrt(norm);
        }
        return QuantumState::pure(std::move(out));
    }
    ComplexMatrix rho = matmul(matmul(u, state.density()), adjoint(u));
    return QuantumState::mixed(scale(add(rho, adjoint(rho)), 0.5));
}

ComplexMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto &col : cols) {
        for (auto &z : col) {
            const double re = gauss(rng);
            const double im = gauss(rng);
            z = Complex(re, im);
        }
    }
    // Modified Gram-Schmidt gives the Q of a QR decomposition with a
    // positive real diagonal R, which is Haar distributed.
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex dot{};
            for (std::size_t i = 0; i < dim; ++i) {
                dot += std::conj(cols[j][i]) * cols[k][i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                cols[k][i] -= dot * cols[j][i];
            }
        }
        double norm = 0.0;
        for (const auto &z : cols[k]) {
            norm += std::norm(z);
        }
        norm = std::sqrt(norm);
        for (auto &z : cols[k]) {
            z /= norm;
        }
    }
    ComplexMatrix u(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            u(i, j) = cols[j][i];
        }
    }
    return u;
}

Circuit named_circuit(std::string_view name) {
    if (name == "fig4b-prep" || name == "bell-prep") {
        Circuit c(3);
        c.add(hadamard(2));
        c.add(cnot(2, 1));
        return c;
    }
    fail(ErrorCode::kInvalidArgument, "unknown circuit '" + std::string(name) + "'");
}

}  // namespace qscatter
