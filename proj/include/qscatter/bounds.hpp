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

// Numerical extremization of the KCBS five-cycle in its Bell (two-party),
// temporal (two-time) and contextual (single-system exclusivity) forms, and
// a scan of the pentagon Leggett-Garg sum.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qscatter/numerics.hpp"

namespace qscatter {

enum class BoundTarget { kBellKcbs, kTemporalKcbs, kContextualKcbs, kPentagonLg };

std::string_view target_name(BoundTarget t);
/// Accepts "bell-kcbs", "temporal-kcbs", "contextual-kcbs", "pentagon-lg".
BoundTarget parse_target(std::string_view name);

/// Optimizer argument. Angles in radians; vectors are real unit 3-vectors.
struct BoundArgument {
    std::vector<double> angles;
    std::vector<std::array<double, 3>> vectors;
    std::vector<double> state;

    friend bool operator==(const BoundArgument &, const BoundArgument &) = default;
};

struct BoundResult {
    BoundTarget target = BoundTarget::kBellKcbs;
    std::string variant;  // e.g. "pairwise" / "invasive" for the pentagon scan
    double optimum = 0.0;
    BoundArgument argument;
    int iterations = 0;
    bool converged = false;
    double tolerance = 0.0;
    double last_improvement = 0.0;
    std::optional<std::uint64_t> seed;  // winning restart, when restarts are used

    friend bool operator==(const BoundResult &, const BoundResult &) = default;
};

/// sigma(a) = cos(a) sigma_z + sin(a) sigma_x.
ComplexMatrix planar_sigma(double angle);

/// Sum over (r, q) in {(0,1),(1,2),(2,3),(3,4),(4,0)} of sigma(a_r) (x) sigma(a_q).
ComplexMatrix bell_operator(std::span<const double, 5> angles);

/// Smallest eigenvalue of bell_operator over all two-qubit states. Choosing
/// all A = B = sigma_z already gives -5, so this alone is not the bound.
double bell_min_eigenvalue(std::span<const double, 5> angles);

/// Smallest expectation of bell_operator over states with <A_j B_j> = 1 for
/// all j, i.e. over the common +1 eigenspace of sigma(a_j) (x) sigma(a_j).
/// Phi+ always lies in it; for angles not all equal mod pi it is the only
/// such state.
double bell_constrained_minimum(std::span<const double, 5> angles);

/// Sum over the cycle of cos(a_i - a_{i+1}).
double temporal_cycle_sum(std::span<const double, 5> angles);

/// Sum over the cycle of <psi| X_i X_{i+1} |psi> with X_i = 2 u_i u_i^T - I.
double kcbs_contextual_value(std::span<const std::array<double, 3>, 5> vectors, std::span<const double, 3> state);

/// Symmetric pentagram: five unit vectors around the z axis at polar angle
/// cos^2 = 1/sqrt(5), azimuths 4 pi i / 5, adjacent ones orthogonal.
std::array<std::array<double, 3>, 5> pentagram_vectors();

struct GridSearchOptions {
    int resolution = 12;  // grid points per angle
    int max_sweeps = 200;
    double tolerance = 1e-12;
};

/// Minimizes bell_constrained_minimum: coarse grid over the five measurement
/// angles (the first fixed at 0, since a common rotation leaves the value
/// invariant) followed by golden-section coordinate descent on each angle.
BoundResult tsirelson_search_bell(const GridSearchOptions &options = {});

/// Same search over the state-independent temporal sum of five two-time
/// correlators.
BoundResult temporal_bound_kcbs(const GridSearchOptions &options = {});

struct SeesawOptions {
    int iterations = 300;
    int restarts = 8;
    double tolerance = 1e-12;
};

/// Alternating optimization over a unit state and five real unit vectors
/// with adjacent orthogonality. Restart seeds are 0 .. restarts-1; the best
/// restart wins, ties going to the lowest seed.
BoundResult contextual_bound_kcbs(const SeesawOptions &options = {});

struct PentagonScan {
    BoundResult pairwise;  // 4 + 6 cos(theta)
    BoundResult invasive;  // 4c + 3c^2 + 2c^3 + c^4
    std::optional<double> pairwise_at_reference;
    std::optional<double> invasive_at_reference;
    double reference_cos = -0.75;
    double reference_value = -2.25;
    bool reference_reproduced = false;
    std::string note;
};

/// Default grid: k pi / 180 for k = 0..360 plus acos(-3/4).
std::vector<double> default_theta_grid();

/// Evaluates both pentagon readings over the grid on a maximally mixed
/// qubit (both are state independent) and reports each minimum.
PentagonScan pentagon_scan(std::span<const double> theta_grid);

/// Re-evaluates the objective at result.argument.
double evaluate_bound_objective(const BoundResult &result);

}  // namespace qscatter
