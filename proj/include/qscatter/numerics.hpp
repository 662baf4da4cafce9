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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qscatter {

using Complex = std::complex<double>;

/**
 * Dense row-major complex matrix. Sized for Hilbert spaces of at most a few
 * qubits, so every operation is a straightforward loop.
 *
 * Entries are validated on construction: NaN or Inf is rejected.
 */
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. {{1, 0}, {0, -1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
    static ComplexMatrix column(std::span<const Complex> v);
    /// |v><v|.
    static ComplexMatrix outer(std::span<const Complex> v);
    static ComplexMatrix diagonal(std::span<const double> d);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    std::span<const Complex> entries() const noexcept {
        return entries_;
    }

    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * cols_ + c];
    }

    std::vector<Complex> column_vector(std::size_t c) const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Eigen-decomposition of a Hermitian matrix. Eigenvalues ascend; column k of
/// eigenvectors is the unit eigenvector of eigenvalues[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix scale(const ComplexMatrix &a, Complex factor);
Complex trace(const ComplexMatrix &a);
std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v);

/// a*b + b*a.
ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b);
/// a*b - b*a.
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs(const ComplexMatrix &a);
double frobenius_norm(const ComplexMatrix &a);

bool is_hermitian(const ComplexMatrix &a, double tolerance);
bool is_unitary(const ComplexMatrix &a, double tolerance);

/**
 * Cyclic Jacobi eigensolver for Hermitian matrices.
 *
 * Sweeps run in fixed (p, q) order until the off-diagonal Frobenius norm
 * drops below tol::kJacobiOffDiagonal. Each eigenvector is phase-fixed so its
 * first nonzero component is real positive; equal eigenvalues are ordered by
 * lexicographic comparison of the phase-fixed vectors.
 *
 * Throws ErrorCode::kNotHermitian if the input is not Hermitian.
 */
Spectrum hermitian_eigen(const ComplexMatrix &a);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-tol::kSqrtClamp, 0) are clamped to zero.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a);

/// Multiplies v by the phase that makes its first nonzero component real positive.
void fix_global_phase(std::span<Complex> v);

// Standard 2x2 operators.
ComplexMatrix pauli_i();
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace qscatter
