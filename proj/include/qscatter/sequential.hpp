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

// Ground truth for sequential projective measurements under the Lueders rule.
// Independent of the scattering circuit: it never builds a probe qubit.

#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qscatter/observable.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

struct MeasurementBranch {
    int outcome;  // +1 or -1
    double probability;
    std::optional<QuantumState> post_state;  // absent for pruned branches
};

/// Both branches of a projective measurement of a dichotomic observable,
/// +1 first. Post-state P rho P / tr(P rho P) for probabilities above
/// tol::kBranchPrune.
std::vector<MeasurementBranch> luders_measure(const QuantumState &rho, const Observable &obs);

/// Joint outcome law of measuring `observables` in order.
struct OutcomeDistribution {
    std::vector<Observable> observables;
    /// Every one of the 2^n outcome tuples is present (zeros allowed).
    std::map<std::vector<int>, double> table;

    /// Marginal law of the first `length` measurements.
    std::map<std::vector<int>, double> prefix_marginal(std::size_t length) const;
    /// Sum over tuples of x_i x_j p(x).
    double pair_correlation(std::size_t i, std::size_t j) const;
};

OutcomeDistribution joint_distribution(const QuantumState &rho, std::span<const Observable> observables);

/// Sum over outcome tuples of (product of outcomes) times probability.
double correlator_sequential(const QuantumState &rho, std::span<const Observable> observables);

/// (1/2) Re tr(rho {X_i, X_j}).
double two_time_formula(const QuantumState &rho, const Observable &xi, const Observable &xj);

}  // namespace qscatter
