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

#include "qscatter/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>

#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/optimize.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInfeasible = std::numeric_limits<double>::infinity();

using Angles = std::array<double, 5>;
using Vec3 = std::array<double, 3>;

double dot(const Vec3 &a, const Vec3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 combine(double ca, const Vec3 &a, double cb, const Vec3 &b) {
    return {ca * a[0] + cb * b[0], ca * a[1] + cb * b[1], ca * a[2] + cb * b[2]};
}

struct DescentOutcome {
    Angles point;
    double value;
    int sweeps;
    bool converged;
    double last_improvement;
};

// Golden-section coordinate descent. Each coordinate is searched on
// [x - half_width, x + half_width]; a move is kept only if it improves.
DescentOutcome coordinate_descent(const std::function<double(const Angles &)> &f, Angles x, double half_width,
                                  std::size_t first_free, int max_sweeps, double tolerance) {
    double value = f(x);
    int sweeps = 0;
    double improvement = kInfeasible;
    bool converged = false;
    while (sweeps < max_sweeps) {
        const double before = value;
        for (std::size_t k = first_free; k < x.size(); ++k) {
            const double centre = x[k];
            auto along = [&](double t) {
                Angles y = x;
                y[k] = t;
                return f(y);
            };
            const ScalarMinimum m = golden_section_minimize(along, centre - half_width, centre + half_width, 1e-10);
            if (m.value < value) {
                x[k] = m.argument;
                value = m.value;
            }
        }
        ++sweeps;
        improvement = before - value;
        if (sweeps >= 3 && improvement < tolerance) {
            converged = true;
            break;
        }
    }
    return {x, value, sweeps, converged, improvement};
}

// Exhaustive grid over angles 1..4 (angle 0 pinned at 0), resolution^4 points.
std::pair<Angles, double> grid_minimum(const std::function<double(const Angles &)> &f, int resolution) {
    Angles best{};
    double best_value = f(best);
    const double step = 2 * kPi / resolution;
    Angles x{};
    for (int i1 = 0; i1 < resolution; ++i1) {
        x[1] = i1 * step;
        for (int i2 = 0; i2 < resolution; ++i2) {
            x[2] = i2 * step;
            for (int i3 = 0; i3 < resolution; ++i3) {
                x[3] = i3 * step;
                for (int i4 = 0; i4 < resolution; ++i4) {
                    x[4] = i4 * step;
                    const double v = f(x);
                    if (v < best_value) {
                        best_value = v;
                        best = x;
                    }
                }
            }
        }
    }
    return {best, best_value};
}

BoundResult angle_search(BoundTarget target, const std::function<double(const Angles &)> &f,
                         const GridSearchOptions &options) {
    require(options.resolution >= 1, ErrorCode::kInvalidArgument, "bound search: grid resolution must be >= 1");
    require(options.max_sweeps >= 1 && options.tolerance > 0, ErrorCode::kInvalidArgument,
            "bound search: bad refinement settings");
    const auto [start, start_value] = grid_minimum(f, options.resolution);
    const double half_width = std::min(kPi, 2 * kPi / options.resolution);
    const DescentOutcome d = coordinate_descent(f, start, half_width, 1, options.max_sweeps, options.tolerance);
    BoundResult r;
    r.target = target;
    r.optimum = d.value;
    r.argument.angles.assign(d.point.begin(), d.point.end());
    r.iterations = d.sweeps;
    // Below eight points per angle the grid cannot resolve the five-cycle
    // geometry, so the result is never reported as converged.
    r.converged = d.converged && options.resolution >= 8;
    r.tolerance = options.tolerance;
    r.last_improvement = d.last_improvement;
    return r;
}

// Chain parametrization of five unit vectors with u_i orthogonal to u_{i+1}
// (cyclically). Returns false when u_3 and u_0 are parallel, which leaves u_4
// undetermined.
bool chain_vectors(const Angles &p, std::array<Vec3, 5> &u) {
    const double sa = std::sin(p[0]);
    const double ca = std::cos(p[0]);
    const double sb = std::sin(p[1]);
    const double cb = std::cos(p[1]);
    u[0] = {sa * cb, sa * sb, ca};
    const Vec3 e1{ca * cb, ca * sb, -sa};
    const Vec3 e2{-sb, cb, 0.0};
    u[1] = combine(std::cos(p[2]), e1, std::sin(p[2]), e2);
    u[2] = combine(std::cos(p[3]), u[0], std::sin(p[3]), cross(u[0], u[1]));
    u[3] = combine(std::cos(p[4]), u[1], std::sin(p[4]), cross(u[1], u[2]));
    const Vec3 w = cross(u[3], u[0]);
    const double n = std::sqrt(dot(w, w));
    if (n < 1e-9) {
        return false;
    }
    u[4] = {w[0] / n, w[1] / n, w[2] / n};
    return true;
}

double projector_weight(const std::array<Vec3, 5> &u, const Vec3 &psi) {
    double s = 0.0;
    for (const auto &v : u) {
        const double d = dot(v, psi);
        s += d * d;
    }
    return s;
}

// Top eigenvector of sum_i u_i u_i^T.
Vec3 best_state(const std::array<Vec3, 5> &u) {
    ComplexMatrix m(3, 3);
    for (const auto &v : u) {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m(i, j) += v[i] * v[j];
            }
        }
    }
    const Spectrum s = hermitian_eigen(m);
    Vec3 psi{s.eigenvectors(0, 2).real(), s.eigenvectors(1, 2).real(), s.eigenvectors(2, 2).real()};
    const double n = std::sqrt(dot(psi, psi));
    return {psi[0] / n, psi[1] / n, psi[2] / n};
}

struct SeesawRun {
    std::array<Vec3, 5> vectors;
    Vec3 state;
    double value;  // 5 - 4 * projector weight
    int iterations;
    bool converged;
    double last_improvement;
};

SeesawRun seesaw_restart(std::uint64_t seed, const SeesawOptions &options) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
    Angles params{};
    std::array<Vec3, 5> u{};
    do {
        for (auto &p : params) {
            p = angle(rng);
        }
    } while (!chain_vectors(params, u));

    Vec3 psi = best_state(u);
    double weight = projector_weight(u, psi);
    SeesawRun run{u, psi, 5.0 - 4.0 * weight, 0, false, kInfeasible};
    for (int it = 0; it < options.iterations; ++it) {
        const double before = weight;
        // Vector step: one golden-section sweep over the chain parameters
        // with the state held fixed.
        auto negative_weight = [&](const Angles &p) {
            std::array<Vec3, 5> v{};
            return chain_vectors(p, v) ? -projector_weight(v, psi) : kInfeasible;
        };
        const DescentOutcome d = coordinate_descent(negative_weight, params, kPi / 4, 0, 1, options.tolerance);
        params = d.point;
        chain_vectors(params, u);
        // State step: extremal eigenvector.
        psi = best_state(u);
        weight = projector_weight(u, psi);
        ++run.iterations;
        run.last_improvement = weight - before;
        if (it >= 2 && 4.0 * run.last_improvement < options.tolerance) {
            run.converged = true;
            break;
        }
    }
    run.vectors = u;
    run.state = psi;
    run.value = kcbs_contextual_value(u, psi);
    return run;
}

}  // namespace

std::string_view target_name(BoundTarget t) {
    switch (t) {
        case BoundTarget::kBellKcbs:
            return "bell-kcbs";
        case BoundTarget::kTemporalKcbs:
            return "temporal-kcbs";
        case BoundTarget::kContextualKcbs:
            return "contextual-kcbs";
        case BoundTarget::kPentagonLg:
            return "pentagon-lg";
    }
    return "bell-kcbs";
}

BoundTarget parse_target(std::string_view name) {
    for (auto t : {BoundTarget::kBellKcbs, BoundTarget::kTemporalKcbs, BoundTarget::kContextualKcbs,
                   BoundTarget::kPentagonLg}) {
        if (target_name(t) == name) {
            return t;
        }
    }
    fail(ErrorCode::kInvalidArgument, "unknown bound target '" + std::string(name) + "'");
}

ComplexMatrix planar_sigma(double angle) {
    return add(scale(pauli_z(), std::cos(angle)), scale(pauli_x(), std::sin(angle)));
}

ComplexMatrix bell_operator(std::span<const double, 5> angles) {
    ComplexMatrix b(4, 4);
    for (std::size_t r = 0; r < 5; ++r) {
        b = add(b, kron(planar_sigma(angles[r]), planar_sigma(angles[(r + 1) % 5])));
    }
    return b;
}

double bell_min_eigenvalue(std::span<const double, 5> angles) {
    return hermitian_eigen(bell_operator(angles)).eigenvalues.front();
}

double bell_constrained_minimum(std::span<const double, 5> angles) {
    // A vector lies in every +1 eigenspace iff it is annihilated by the PSD
    // sum of the complementary projectors (I - C_j) / 2.
    ComplexMatrix penalty(4, 4);
    for (double a : angles) {
        const ComplexMatrix c = kron(planar_sigma(a), planar_sigma(a));
        penalty = add(penalty, scale(subtract(ComplexMatrix::identity(4), c), 0.5));
    }
    const Spectrum s = hermitian_eigen(penalty);
    std::size_t k = 0;
    while (k < 4 && s.eigenvalues[k] < 1e-9) {
        ++k;
    }
    require(k > 0, ErrorCode::kInternal, "bell_constrained_minimum: empty constraint space");
    ComplexMatrix basis(4, k);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            basis(i, j) = s.eigenvectors(i, j);
        }
    }
    const ComplexMatrix reduced = matmul(matmul(adjoint(basis), bell_operator(angles)), basis);
    const ComplexMatrix hermitian = scale(add(reduced, adjoint(reduced)), 0.5);
    return hermitian_eigen(hermitian).eigenvalues.front();
}

double temporal_cycle_sum(std::span<const double, 5> angles) {
    double s = 0.0;
    for (std::size_t i = 0; i < 5; ++i) {
        s += std::cos(angles[i] - angles[(i + 1) % 5]);
    }
    return s;
}

double kcbs_contextual_value(std::span<const std::array<double, 3>, 5> vectors, std::span<const double, 3> state) {
    std::vector<Complex> psi(state.begin(), state.end());
    double norm = 0.0;
    for (const auto &z : psi) {
        norm += std::norm(z);
    }
    require(std::abs(norm - 1.0) < 1e-9, ErrorCode::kInvalidArgument, "kcbs_contextual_value: state not normalized");
    std::array<ComplexMatrix, 5> x{ComplexMatrix(3, 3), ComplexMatrix(3, 3), ComplexMatrix(3, 3), ComplexMatrix(3, 3),
                                   ComplexMatrix(3, 3)};
    for (std::size_t k = 0; k < 5; ++k) {
        const auto &v = vectors[k];
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                x[k](i, j) = 2 * v[i] * v[j] - (i == j ? 1.0 : 0.0);
            }
        }
    }
    // Qutrit, so QuantumState (qubit registers only) does not apply.
    double s = 0.0;
    for (std::size_t k = 0; k < 5; ++k) {
        const ComplexMatrix prod = matmul(x[k], x[(k + 1) % 5]);
        const std::vector<Complex> phi = qscatter::apply(prod, psi);
        Complex e{};
        for (std::size_t i = 0; i < 3; ++i) {
            e += std::conj(psi[i]) * phi[i];
        }
        s += e.real();
    }
    return s;
}

std::array<std::array<double, 3>, 5> pentagram_vectors() {
    const double cos2 = 1.0 / std::sqrt(5.0);
    const double c = std::sqrt(cos2);
    const double s = std::sqrt(1.0 - cos2);
    std::array<std::array<double, 3>, 5> u{};
    for (int i = 0; i < 5; ++i) {
        const double phi = 4.0 * kPi * i / 5.0;
        u[i] = {s * std::cos(phi), s * std::sin(phi), c};
    }
    return u;
}

BoundResult tsirelson_search_bell(const GridSearchOptions &options) {
    return angle_search(BoundTarget::kBellKcbs, [](const Angles &a) { return bell_constrained_minimum(a); },
                        options);
}

BoundResult temporal_bound_kcbs(const GridSearchOptions &options) {
    return angle_search(BoundTarget::kTemporalKcbs, [](const Angles &a) { return temporal_cycle_sum(a); }, options);
}

BoundResult contextual_bound_kcbs(const SeesawOptions &options) {
    require(options.restarts >= 1 && options.iterations >= 1 && options.tolerance > 0, ErrorCode::kInvalidArgument,
            "contextual_bound_kcbs: bad options");
    std::optional<SeesawRun> best;
    std::uint64_t best_seed = 0;
    int total_iterations = 0;
    for (int seed = 0; seed < options.restarts; ++seed) {
        SeesawRun run = seesaw_restart(static_cast<std::uint64_t>(seed), options);
        total_iterations += run.iterations;
        if (!best || run.value < best->value) {
            best = run;
            best_seed = static_cast<std::uint64_t>(seed);
        }
    }
    BoundResult r;
    r.target = BoundTarget::kContextualKcbs;
    r.optimum = best->value;
    r.argument.vectors.assign(best->vectors.begin(), best->vectors.end());
    r.argument.state.assign(best->state.begin(), best->state.end());
    r.iterations = total_iterations;
    r.converged = best->converged;
    r.tolerance = options.tolerance;
    r.last_improvement = best->last_improvement;
    r.seed = best_seed;
    return r;
}

std::vector<double> default_theta_grid() {
    std::vector<double> grid;
    for (int k = 0; k <= 360; ++k) {
        grid.push_back(k * kPi / 180.0);
    }
    grid.push_back(std::acos(-0.75));
    return grid;
}

PentagonScan pentagon_scan(std::span<const double> theta_grid) {
    require(!theta_grid.empty(), ErrorCode::kInvalidArgument, "pentagon_scan: empty theta grid");
    const QuantumState rho = maximally_mixed(1);
    PentagonScan scan;
    auto start = [](const char *variant) {
        BoundResult r;
        r.target = BoundTarget::kPentagonLg;
        r.variant = variant;
        r.optimum = kInfeasible;
        r.converged = true;
        return r;
    };
    scan.pairwise = start("pairwise");
    scan.invasive = start("invasive");
    for (double theta : theta_grid) {
        const double pairwise = eval_pentagon_lg(rho, theta, Method::kSequential).sum;
        const double invasive = eval_pentagon_lg_invasive(rho, theta).sum;
        ++scan.pairwise.iterations;
        ++scan.invasive.iterations;
        if (pairwise < scan.pairwise.optimum) {
            scan.pairwise.optimum = pairwise;
            scan.pairwise.argument.angles = {theta};
        }
        if (invasive < scan.invasive.optimum) {
            scan.invasive.optimum = invasive;
            scan.invasive.argument.angles = {theta};
        }
        if (std::abs(std::cos(theta) - scan.reference_cos) < 1e-12) {
            scan.pairwise_at_reference = pairwise;
            scan.invasive_at_reference = invasive;
        }
    }
    auto near_reference = [&](const std::optional<double> &v) {
        return v && std::abs(*v - scan.reference_value) < 1e-6;
    };
    scan.reference_reproduced = near_reference(scan.pairwise_at_reference) ||
                                near_reference(scan.invasive_at_reference);
    scan.note = scan.reference_reproduced
                    ? "reference value -9/4 at cos(theta) = -3/4 reproduced"
                    : "reference value -9/4 at cos(theta) = -3/4 is NOT reproduced: pairwise reading gives "
                      "4 + 6c, invasive reading gives 4c + 3c^2 + 2c^3 + c^4";
    return scan;
}

double evaluate_bound_objective(const BoundResult &result) {
    switch (result.target) {
        case BoundTarget::kBellKcbs:
        case BoundTarget::kTemporalKcbs: {
            require(result.argument.angles.size() == 5, ErrorCode::kInvalidArgument,
                    "evaluate_bound_objective: expected five angles");
            Angles a{};
            std::copy(result.argument.angles.begin(), result.argument.angles.end(), a.begin());
            return result.target == BoundTarget::kBellKcbs ? bell_constrained_minimum(a) : temporal_cycle_sum(a);
        }
        case BoundTarget::kContextualKcbs: {
            require(result.argument.vectors.size() == 5 && result.argument.state.size() == 3,
                    ErrorCode::kInvalidArgument, "evaluate_bound_objective: expected five vectors and a 3-state");
            std::array<Vec3, 5> u{};
            std::copy(result.argument.vectors.begin(), result.argument.vectors.end(), u.begin());
            Vec3 psi{};
            std::copy(result.argument.state.begin(), result.argument.state.end(), psi.begin());
            return kcbs_contextual_value(u, psi);
        }
        case BoundTarget::kPentagonLg: {
            require(result.argument.angles.size() == 1, ErrorCode::kInvalidArgument,
                    "evaluate_bound_objective: expected one angle");
            const QuantumState rho = maximally_mixed(1);
            const double theta = result.argument.angles.front();
            return result.variant == "invasive" ? eval_pentagon_lg_invasive(rho, theta).sum
                                                : eval_pentagon_lg(rho, theta, Method::kSequential).sum;
        }
    }
    fail(ErrorCode::kInternal, "evaluate_bound_objective: unknown target");
}

}  // namespace qscatter
