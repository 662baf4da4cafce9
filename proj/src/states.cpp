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

#include "qscatter/states.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

namespace {

std::size_t qubits_for_dimension(std::size_t dim, const char *what) {
    require(dim >= 2 && std::has_single_bit(dim), ErrorCode::kDimensionMismatch,
            std::string(what) + ": dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    return static_cast<std::size_t>(std::countr_zero(dim));
}

}  // namespace

QuantumState QuantumState::pure(std::vector<Complex> amplitudes) {
    const std::size_t n = qubits_for_dimension(amplitudes.size(), "QuantumState::pure");
    double norm = 0.0;
    for (const auto &a : amplitudes) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), ErrorCode::kInvalidArgument,
                "QuantumState::pure: non-finite amplitude");
        norm += std::norm(a);
    }
    require(std::abs(norm - 1.0) <= tol::kNorm, ErrorCode::kInvalidArgument,
            "QuantumState::pure: squared norm " + std::to_string(norm) + " != 1");
    return QuantumState(n, std::move(amplitudes));
}

QuantumState QuantumState::mixed(ComplexMatrix rho) {
    require(rho.is_square(), ErrorCode::kDimensionMismatch, "QuantumState::mixed: non-square matrix");
    const std::size_t n = qubits_for_dimension(rho.rows(), "QuantumState::mixed");
    require(is_hermitian(rho, tol::kHermitian), ErrorCode::kNotHermitian,
            "QuantumState::mixed: density matrix is not Hermitian");
    const Complex t = trace(rho);
    require(std::abs(t - 1.0) <= tol::kTrace, ErrorCode::kInvalidArgument,
            "QuantumState::mixed: trace " + std::to_string(t.real()) + " != 1");
    const Spectrum s = hermitian_eigen(rho);
    require(s.eigenvalues.front() >= -tol::kPositivity, ErrorCode::kInvalidArgument,
            "QuantumState::mixed: negative eigenvalue " + std::to_string(s.eigenvalues.front()));
    return QuantumState(n, std::move(rho));
}

std::span<const Complex> QuantumState::amplitudes() const {
    const auto *v = std::get_if<std::vector<Complex>>(&form_);
    require(v != nullptr, ErrorCode::kInvalidArgument, "QuantumState: amplitudes of a mixed state");
    return *v;
}

ComplexMatrix QuantumState::density() const {
    if (const auto *v = std::get_if<std::vector<Complex>>(&form_)) {
        return ComplexMatrix::outer(*v);
    }
    return std::get<ComplexMatrix>(form_);
}

QuantumState basis_state(std::size_t qubits, std::string_view label) {
    require(qubits >= 1 && qubits <= 16, ErrorCode::kInvalidArgument, "basis_state: qubit count out of range");
    require(label.size() == qubits, ErrorCode::kInvalidArgument,
            "basis_state: label '" + std::string(label) + "' does not have " + std::to_string(qubits) +
                " characters");
    std::size_t index = 0;
    for (char c : label) {
        require(c == '0' || c == '1', ErrorCode::kInvalidArgument,
                "basis_state: bad label character in '" + std::string(label) + "'");
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    std::vector<Complex> amps(std::size_t{1} << qubits);
    amps[index] = 1.0;
    return QuantumState::pure(std::move(amps));
}

QuantumState bell_phi_plus() {
    const double h = 1.0 / std::sqrt(2.0);
    return QuantumState::pure({h, 0.0, 0.0, h});
}

QuantumState maximally_mixed(std::size_t qubits) {
    require(qubits >= 1 && qubits <= 16, ErrorCode::kInvalidArgument, "maximally_mixed: qubit count out of range");
    const std::size_t dim = std::size_t{1} << qubits;
    return QuantumState::mixed(scale(ComplexMatrix::identity(dim), 1.0 / static_cast<double>(dim)));
}

QuantumState pseudopure(const QuantumState &psi, double epsilon) {
    require(psi.is_pure(), ErrorCode::kInvalidArgument, "pseudopure: input must be a pure state");
    require(epsilon >= 0.0 && epsilon <= 1.0, ErrorCode::kInvalidArgument,
            "pseudopure: epsilon " + std::to_string(epsilon) + " outside [0, 1]");
    const std::size_t dim = psi.dimension();
    ComplexMatrix rho = scale(ComplexMatrix::outer(psi.amplitudes()), epsilon);
    for (std::size_t i = 0; i < dim; ++i) {
        rho(i, i) += (1.0 - epsilon) / static_cast<double>(dim);
    }
    return QuantumState::mixed(std::move(rho));
}

double fidelity(const QuantumState &a, const QuantumState &b) {
    require(a.qubits() == b.qubits(), ErrorCode::kDimensionMismatch, "fidelity: qubit counts differ");
    if (a.is_pure() && b.is_pure()) {
        Complex overlap{};
        const auto x = a.amplitudes();
        const auto y = b.amplitudes();
        for (std::size_t i = 0; i < x.size(); ++i) {
            overlap += std::conj(x[i]) * y[i];
        }
        return std::clamp(std::norm(overlap), 0.0, 1.0);
    }
    const ComplexMatrix root = matrix_sqrt_psd(a.density());
    const ComplexMatrix inner = matmul(matmul(root, b.density()), root);
    const double f = trace(matrix_sqrt_psd(scale(add(inner, adjoint(inner)), 0.5))).real();
    return std::clamp(f * f, 0.0, 1.0);
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, std::size_t qubits, std::span<const std::size_t> keep) {
    require(rho.is_square() && rho.rows() == (std::size_t{1} << qubits), ErrorCode::kDimensionMismatch,
            "partial_trace: matrix does not match qubit count");
    std::vector<std::size_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    require(std::adjacent_find(kept.begin(), kept.end()) == kept.end(), ErrorCode::kInvalidArgument,
            "partial_trace: duplicate qubit index");
    require(kept.empty() || kept.back() < qubits, ErrorCode::kInvalidArgument,
            "partial_trace: qubit index out of range");

    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < qubits; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    // Bit position of qubit q inside a full basis index.
    auto bit = [&](std::size_t q) { return qubits - 1 - q; };
    auto compose = [&](std::size_t kept_index, std::size_t traced_index) {
        std::size_t full = 0;
        for (std::size_t i = 0; i < kept.size(); ++i) {
            if ((kept_index >> (kept.size() - 1 - i)) & 1U) {
                full |= std::size_t{1} << bit(kept[i]);
            }
        }
        for (std::size_t i = 0; i < traced.size(); ++i) {
            if ((traced_index >> (traced.size() - 1 - i)) & 1U) {
                full |= std::size_t{1} << bit(traced[i]);
            }
        }
        return full;
    };

    const std::size_t kdim = std::size_t{1} << kept.size();
    const std::size_t tdim = std::size_t{1} << traced.size();
    ComplexMatrix out(kdim, kdim);
    for (std::size_t i = 0; i < kdim; ++i) {
        for (std::size_t j = 0; j < kdim; ++j) {
            Complex s{};
            for (std::size_t t = 0; t < tdim; ++t) {
                s += rho(compose(i, t), compose(j, t));
            }
            out(i, j) = s;
        }
    }
    return out;
}

QuantumState partial_trace(const QuantumState &state, std::span<const std::size_t> keep) {
    require(!keep.empty(), ErrorCode::kInvalidArgument, "partial_trace: keep set is empty");
    return QuantumState::mixed(partial_trace(state.density(), state.qubits(), keep));
}

Complex trace_with(const QuantumState &state, const ComplexMatrix &op) {
    require(op.is_square() && op.rows() == state.dimension(), ErrorCode::kDimensionMismatch,
            "expectation: operator does not match state dimension");
    if (state.is_pure()) {
        const auto psi = state.amplitudes();
        const auto phi = apply(op, psi);
        Complex s{};
        for (std::size_t i = 0; i < psi.size(); ++i) {
            s += std::conj(psi[i]) * phi[i];
        }
        return s;
    }
    return trace(matmul(state.density(), op));
}

double expectation(const QuantumState &state, const ComplexMatrix &op) {
    return trace_with(state, op).real();
}

QuantumState random_pure_state(std::size_t qubits, std::uint64_t seed) {
    require(qubits >= 1 && qubits <= 3, ErrorCode::kInvalidArgument,
            "random_pure_state: qubit count must be in [1, 3]");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = Complex(re, im);
        norm += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm);
    for (auto &a : amps) {
        a *= inv;
    }
    return QuantumState::pure(std::move(amps));
}

bool approx_equal(const QuantumState &a, const QuantumState &b, double tolerance) {
    if (a.qubits() != b.qubits()) {
        return false;
    }
    if (a.is_pure() && b.is_pure()) {
        std::vector<Complex> x(a.amplitudes().begin(), a.amplitudes().end());
        std::vector<Complex> y(b.amplitudes().begin(), b.amplitudes().end());
        fix_global_phase(x);
        fix_global_phase(y);
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (std::abs(x[i] - y[i]) > tolerance) {
                return false;
            }
        }
        return true;
    }
    return max_abs_diff(a.density(), b.density()) <= tolerance;
}

namespace {

QuantumState read_amplitude_file(const std::string &path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::kParse, "state literal '" + path + "' is not a bitstring, 'bell', or a readable file");
    std::vector<Complex> amps;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        fields.imbue(std::locale::classic());
        double re = 0.0;
        double im = 0.0;
        std::string extra;
        require(static_cast<bool>(fields >> re >> im) && !(fields >> extra), ErrorCode::kParse,
                path + ":" + std::to_string(line_no) + ": expected 're im'");
        amps.emplace_back(re, im);
    }
    require(!amps.empty(), ErrorCode::kParse, path + ": no amplitudes");
    return QuantumState::pure(std::move(amps));
}

}  // namespace

QuantumState parse_state_literal(std::string_view literal) {
    require(!literal.empty(), ErrorCode::kParse, "empty state literal");
    if (literal == "bell") {
        return bell_phi_plus();
    }
    if (literal.starts_with("mixed:")) {
        const auto digits = literal.substr(6);
        std::size_t n = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
        require(ec == std::errc() && ptr == digits.data() + digits.size() && n >= 1 && n <= 4, ErrorCode::kParse,
                "bad state literal '" + std::string(literal) + "'");
        return maximally_mixed(n);
    }
    if (std::all_of(literal.begin(), literal.end(), [](char c) { return c == '0' || c == '1'; })) {
        require(literal.size() <= 4, ErrorCode::kParse, "bitstring literal longer than 4 qubits");
        return basis_state(literal.size(), literal);
    }
    try {
        return read_amplitude_file(std::string(literal));
    } catch (const Error &e) {
        if (e.code() == ErrorCode::kParse) {
            throw;
        }
        fail(ErrorCode::kParse, "state file '" + std::string(literal) + "': " + e.what());
    }
}

}  // namespace qscatter
