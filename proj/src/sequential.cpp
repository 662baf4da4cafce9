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

#include "qscatter/sequential.hpp"

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

namespace {

void require_match(const QuantumState &rho, const Observable &obs) {
    require(obs.dichotomic(), ErrorCode::kInvalidArgument, "'" + obs.label() + "' is not dichotomic");
    require(obs.dimension() == rho.dimension(), ErrorCode::kDimensionMismatch,
            "'" + obs.label() + "' does not match the state dimension");
}

// Appends every outcome tuple of the remaining observables with its
// probability; pruned branches contribute explicit zeros.
void expand(const QuantumState &rho, double weight, std::span<const Observable> rest, std::vector<int> &prefix,
            std::map<std::vector<int>, double> &table) {
    if (rest.empty()) {
        table[prefix] += weight;
        return;
    }
    for (const auto &branch : luders_measure(rho, rest.front())) {
        prefix.push_back(branch.outcome);
        if (branch.post_state) {
            expand(*branch.post_state, weight * branch.probability, rest.subspan(1), prefix, table);
        } else {
            expand(rho, 0.0, rest.subspan(1), prefix, table);
        }
        prefix.pop_back();
    }
}

}  // namespace

std::vector<MeasurementBranch> luders_measure(const QuantumState &rho, const Observable &obs) {
    require_match(rho, obs);
    const ComplexMatrix density = rho.density();
    std::vector<MeasurementBranch> out;
    for (int outcome : {1, -1}) {
        const ComplexMatrix p = obs.projector(outcome);
        const ComplexMatrix projected = matmul(matmul(p, density), p);
        const double prob = trace(projected).real();
        MeasurementBranch b{outcome, std::max(prob, 0.0), std::nullopt};
        if (prob > tol::kBranchPrune) {
            ComplexMatrix post = scale(projected, 1.0 / prob);
            b.post_state = QuantumState::mixed(scale(add(post, adjoint(post)), 0.5));
        }
        out.push_back(std::move(b));
    }
    return out;
}

OutcomeDistribution joint_distribution(const QuantumState &rho, std::span<const Observable> observables) {
    for (const auto &o : observables) {
        require_match(rho, o);
    }
    OutcomeDistribution d{std::vector<Observable>(observables.begin(), observables.end()), {}};
    std::vector<int> prefix;
    expand(rho, 1.0, observables, prefix, d.table);
    return d;
}

std::map<std::vector<int>, double> OutcomeDistribution::prefix_marginal(std::size_t length) const {
    require(length <= observables.size(), ErrorCode::kInvalidArgument, "prefix_marginal: length too large");
    std::map<std::vector<int>, double> m;
    for (const auto &[tuple, p] : table) {
        m[std::vector<int>(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(length))] += p;
    }
    return m;
}

double OutcomeDistribution::pair_correlation(std::size_t i, std::size_t j) const {
    require(i < observables.size() && j < observables.size(), ErrorCode::kInvalidArgument,
            "pair_correlation: index out of range");
    double s = 0.0;
    for (const auto &[tuple, p] : table) {
        s += tuple[i] * tuple[j] * p;
    }
    return s;
}

double correlator_sequential(const QuantumState &rho, std::span<const Observable> observables) {
    const OutcomeDistribution d = joint_distribution(rho, observables);
    double s = 0.0;
    for (const auto &[tuple, p] : d.table) {
        int product = 1;
        for (int x : tuple) {
            product *= x;
        }
        s += product * p;
    }
    return s;
}

double two_time_formula(const QuantumState &rho, const Observable &xi, const Observable &xj) {
    require_match(rho, xi);
    require_match(rho, xj);
    return 0.5 * expectation(rho, anticommutator(xi.matrix(), xj.matrix()));
}

}  // namespace qscatter
