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

#include "qscatter/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

namespace {

void check_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        require(std::isfinite(z.real()) && std::isfinite(z.imag()), ErrorCode::kInvalidArgument,
                "ComplexMatrix: non-finite entry");
    }
}

std::string dims(const ComplexMatrix &m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::kDimensionMismatch,
            std::string(op) + ": shapes " + dims(a) + " and " + dims(b) + " differ");
}

// Lexicographic order on (re, im) pairs, used to break eigenvalue ties.
bool lex_less(std::span<const Complex> a, std::span<const Complex> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].real() - b[i].real()) > tol::kDefault) {
            return a[i].real() < b[i].real();
        }
        if (std::abs(a[i].imag() - b[i].imag()) > tol::kDefault) {
            return a[i].imag() < b[i].imag();
        }
    }
    return false;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
    require(rows > 0 && cols > 0, ErrorCode::kInvalidArgument, "ComplexMatrix: empty shape");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows > 0 && cols > 0, ErrorCode::kInvalidArgument, "ComplexMatrix: empty shape");
    require(entries_.size() == rows * cols, ErrorCode::kDimensionMismatch,
            "ComplexMatrix: entry count does not match shape");
    check_finite(entries_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    require(rows_ > 0 && cols_ > 0, ErrorCode::kInvalidArgument, "ComplexMatrix: empty shape");
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        require(row.size() == cols_, ErrorCode::kDimensionMismatch, "ComplexMatrix: ragged rows");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
    return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = v[i] * std::conj(v[j]);
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        m(i, i) = d[i];
    }
    return m;
}

std::vector<Complex> ComplexMatrix::column_vector(std::size_t c) const {
    std::vector<Complex> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.cols() == b.rows(), ErrorCode::kDimensionMismatch,
            "matmul: " + dims(a) + " times " + dims(b));
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix add(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "add");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] += b.entries()[i];
    }
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix subtract(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "subtract");
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] -= b.entries()[i];
    }
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

ComplexMatrix scale(const ComplexMatrix &a, Complex factor) {
    std::vector<Complex> e(a.entries().begin(), a.entries().end());
    for (auto &z : e) {
        z *= factor;
    }
    return ComplexMatrix(a.rows(), a.cols(), std::move(e));
}

Complex trace(const ComplexMatrix &a) {
    require(a.is_square(), ErrorCode::kDimensionMismatch, "trace: non-square " + dims(a));
    Complex t{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        t += a(i, i);
    }
    return t;
}

std::vector<Complex> apply(const ComplexMatrix &a, std::span<const Complex> v) {
    require(a.cols() == v.size(), ErrorCode::kDimensionMismatch,
            "apply: " + dims(a) + " on vector of length " + std::to_string(v.size()));
    std::vector<Complex> out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex s{};
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

ComplexMatrix anticommutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.is_square() && b.is_square(), ErrorCode::kDimensionMismatch,
            "anticommutator: operands must be square");
    require_same_shape(a, b, "anticommutator");
    return add(matmul(a, b), matmul(b, a));
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) {
    require(a.is_square() && b.is_square(), ErrorCode::kDimensionMismatch,
            "commutator: operands must be square");
    require_same_shape(a, b, "commutator");
    return subtract(matmul(a, b), matmul(b, a));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
    }
    return m;
}

double max_abs(const ComplexMatrix &a) {
    double m = 0.0;
    for (const auto &z : a.entries()) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double frobenius_norm(const ComplexMatrix &a) {
    double s = 0.0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

bool is_hermitian(const ComplexMatrix &a, double tolerance) {
    return a.is_square() && max_abs_diff(a, adjoint(a)) <= tolerance;
}

bool is_unitary(const ComplexMatrix &a, double tolerance) {
    return a.is_square() &&
           max_abs_diff(matmul(adjoint(a), a), ComplexMatrix::identity(a.rows())) <= tolerance;
}

void fix_global_phase(std::span<Complex> v) {
    for (const auto &z : v) {
        if (std::abs(z) > tol::kPhaseFix) {
            const Complex phase = std::conj(z) / std::abs(z);
            for (auto &w : v) {
                w *= phase;
            }
            return;
        }
    }
}

Spectrum hermitian_eigen(const ComplexMatrix &input) {
    require(is_hermitian(input, tol::kHermitian), ErrorCode::kNotHermitian,
            "hermitian_eigen: input is not Hermitian");
    const std::size_t n = input.rows();

    // Work on the exactly Hermitian part so rounding in the input cannot bias
    // the rotations.
    ComplexMatrix a = scale(add(input, adjoint(input)), 0.5);
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i != j) {
                    s += std::norm(a(i, j));
                }
            }
        }
        return std::sqrt(s);
    };

    int sweep = 0;
    while (off_norm() >= tol::kJacobiOffDiagonal) {
        require(sweep++ < tol::kJacobiMaxSweeps, ErrorCode::kNotConverged,
                "hermitian_eigen: Jacobi sweeps exhausted");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) {
                    continue;
                }
                // J = D R with D = diag(1, e^{-i phi}) making the (p, q) entry
                // real, and R the real symmetric Jacobi rotation.
                const Complex e = std::conj(apq) / r;  // e^{-i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const Complex jpp = c;
                const Complex jpq = s;
                const Complex jqp = -s * e;
                const Complex jqq = c * e;

                // a <- a J (columns p, q), then a <- J^dagger a (rows p, q).
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * jpp + vkq * jqp;
                    v(k, q) = vkp * jpq + vkq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    struct Pair {
        double value;
        std::vector<Complex> vector;
    };
    std::vector<Pair> pairs(n);
    for (std::size_t k = 0; k < n; ++k) {
        pairs[k].value = a(k, k).real();
        pairs[k].vector = v.column_vector(k);
        fix_global_phase(pairs[k].vector);
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const Pair &x, const Pair &y) {
        if (std::abs(x.value - y.value) > tol::kDefault) {
            return x.value < y.value;
        }
        return lex_less(x.vector, y.vector);
    });

    Spectrum out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = pairs[k].value;
        for (std::size_t r = 0; r < n; ++r) {
            out.eigenvectors(r, k) = pairs[k].vector[r];
        }
    }
    return out;
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &a) {
    const Spectrum s = hermitian_eigen(a);
    const std::size_t n = a.rows();
    std::vector<double> roots(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = s.eigenvalues[k];
        require(lambda >= -tol::kSqrtClamp, ErrorCode::kInvalidArgument,
                "matrix_sqrt_psd: negative eigenvalue " + std::to_string(lambda));
        roots[k] = std::sqrt(std::max(lambda, 0.0));
    }
    const ComplexMatrix root = matmul(matmul(s.eigenvectors, ComplexMatrix::diagonal(roots)),
                                      adjoint(s.eigenvectors));
    // Symmetrize away rounding so the result is Hermitian to machine precision.
    return scale(add(root, adjoint(root)), 0.5);
}

ComplexMatrix pauli_i() {
    return ComplexMatrix::identity(2);
}

ComplexMatrix pauli_x() {
    return {{0, 1}, {1, 0}};
}

ComplexMatrix pauli_y() {
    return {{0, Complex(0, -1)}, {Complex(0, 1), 0}};
}

ComplexMatrix pauli_z() {
    return {{1, 0}, {0, -1}};
}

}  // namespace qscatter
