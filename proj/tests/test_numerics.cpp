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

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qscatter/error.hpp"
#include "qscatter/numerics.hpp"
#include "qscatter/observable.hpp"
#include "test_support.hpp"

using namespace qscatter;
using qscatter::testing::check_close;
using qscatter::testing::naive_product;

namespace {

ComplexMatrix random_hermitian(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = g(rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = Complex(g(rng), g(rng));
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("construction rejects bad shapes and non-finite entries") {
    CHECK_THROWS_AS(ComplexMatrix(0, 2), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), Error);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(nan, 0)}), Error);
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(0, std::numeric_limits<double>::infinity())}), Error);
}

TEST_CASE("kron") {
    check_close(kron(pauli_i(), pauli_i()), ComplexMatrix::identity(4), 0.0);
    const ComplexMatrix zz = kron(pauli_z(), pauli_z());
    const std::vector<double> diag{1, -1, -1, 1};
    check_close(zz, ComplexMatrix::diagonal(diag), 0.0);
    check_close(naive_product(kron(pauli_x(), pauli_i()), kron(pauli_i(), pauli_x())), kron(pauli_x(), pauli_x()),
                0.0);

    std::mt19937_64 rng(5);
    const ComplexMatrix a = random_hermitian(2, rng);
    const ComplexMatrix b = random_hermitian(2, rng);
    const ComplexMatrix c = random_hermitian(2, rng);
    check_close(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-14);
    CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-10);
}

TEST_CASE("basic arithmetic") {
    CHECK(trace(ComplexMatrix::identity(4)) == Complex(4, 0));
    CHECK(std::abs(trace(matmul(pauli_z(), pauli_x()))) == 0.0);
    std::mt19937_64 rng(9);
    const ComplexMatrix a = random_hermitian(4, rng);
    const ComplexMatrix b = scale(random_hermitian(4, rng), Complex(0, 1));
    check_close(adjoint(adjoint(b)), b, 0.0);
    check_close(matmul(a, b), naive_product(a, b), 1e-13);
    CHECK_THROWS_AS(matmul(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), Error);
    CHECK_THROWS_AS(add(ComplexMatrix(2, 2), ComplexMatrix(4, 4)), Error);
    CHECK_THROWS_AS(trace(ComplexMatrix(2, 3)), Error);
}

TEST_CASE("anticommutator") {
    check_close(anticommutator(pauli_z(), pauli_z()), scale(pauli_i(), 2.0));
    check_close(anticommutator(pauli_z(), pauli_x()), ComplexMatrix::zeros(2, 2));
    for (double theta : {0.0, 0.3, 1.7, std::acos(-0.75), 4.0}) {
        check_close(anticommutator(pauli_z(), sigma_theta(theta).matrix()), scale(pauli_i(), 2 * std::cos(theta)));
    }
    CHECK_THROWS_AS(anticommutator(pauli_z(), ComplexMatrix::identity(4)), Error);
}

TEST_CASE("hermitian_eigen on small cases") {
    const Spectrum z = hermitian_eigen(pauli_z());
    CHECK(z.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(z.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    for (double theta : {0.1, 1.2, 2.5, std::acos(-0.75)}) {
        const Spectrum s = hermitian_eigen(sigma_theta(theta).matrix());
        CHECK(std::abs(s.eigenvalues[0] + 1) < 1e-12);
        CHECK(std::abs(s.eigenvalues[1] - 1) < 1e-12);
    }
    ComplexMatrix not_hermitian{{1, 2}, {0, 1}};
    CHECK_THROWS_AS(hermitian_eigen(not_hermitian), Error);
}

TEST_CASE("hermitian_eigen reconstructs random Hermitian matrices") {
    std::mt19937_64 rng(1234);
    for (std::size_t n : {1u, 2u, 3u, 4u, 8u, 16u}) {
        for (int rep = 0; rep < 5; ++rep) {
            const ComplexMatrix a = random_hermitian(n, rng);
            const Spectrum s = hermitian_eigen(a);
            ComplexMatrix rebuilt(n, n);
            for (std::size_t k = 0; k < n; ++k) {
                const auto v = s.eigenvectors.column_vector(k);
                rebuilt = add(rebuilt, scale(ComplexMatrix::outer(v), s.eigenvalues[k]));
                // A v = lambda v
                const auto av = apply(a, v);
                for (std::size_t i = 0; i < n; ++i) {
                    CHECK(std::abs(av[i] - s.eigenvalues[k] * v[i]) < 1e-10);
                }
                if (k > 0) {
                    CHECK(s.eigenvalues[k - 1] <= s.eigenvalues[k]);
                }
            }
            CHECK(max_abs_diff(rebuilt, a) < 1e-9);
            const ComplexMatrix gram = matmul(adjoint(s.eigenvectors), s.eigenvectors);
            CHECK(max_abs_diff(gram, ComplexMatrix::identity(n)) < 1e-10);
        }
    }
}

TEST_CASE("hermitian_eigen is deterministic and phase fixed") {
    const ComplexMatrix zz = kron(pauli_z(), pauli_z());
    const Spectrum a = hermitian_eigen(zz);
    const Spectrum b = hermitian_eigen(zz);
    CHECK(a.eigenvalues == b.eigenvalues);
    CHECK(a.eigenvectors == b.eigenvectors);
    for (std::size_t k = 0; k < 4; ++k) {
        const auto v = a.eigenvectors.column_vector(k);
        for (const auto &x : v) {
            if (std::abs(x) > 1e-12) {
                CHECK(x.imag() == doctest::Approx(0.0));
                CHECK(x.real() > 0.0);
                break;
            }
        }
    }
}

TEST_CASE("matrix_sqrt_psd") {
    check_close(matrix_sqrt_psd(ComplexMatrix::identity(4)), ComplexMatrix::identity(4), 1e-12);
    check_close(matrix_sqrt_psd(scale(pauli_i(), 4.0)), scale(pauli_i(), 2.0), 1e-12);
    const ComplexMatrix p0{{1, 0}, {0, 0}};
    check_close(matrix_sqrt_psd(p0), p0, 1e-12);

    std::mt19937_64 rng(42);
    const ComplexMatrix g = random_hermitian(4, rng);
    const ComplexMatrix psd = matmul(g, adjoint(g));
    const ComplexMatrix s = matrix_sqrt_psd(psd);
    CHECK(is_hermitian(s, 1e-10));
    CHECK(max_abs_diff(matmul(s, s), psd) < 1e-9);
    CHECK(hermitian_eigen(s).eigenvalues.front() >= -1e-12);

    CHECK_THROWS_AS(matrix_sqrt_psd(scale(pauli_i(), -1.0)), Error);
}
