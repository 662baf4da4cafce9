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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qscatter/noise.hpp"
#include "qscatter/observable.hpp"
#include "qscatter/scattering.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

enum class Method { kScattering, kDirect, kSequential };

std::string_view method_name(Method m);
/// Accepts "scattering", "direct" and "sequential".
Method parse_method(std::string_view name);

enum class BoundDirection { kAtLeast, kAtMost };

struct ReportTerm {
    std::string label;
    double value = 0.0;        // as evaluated, including noise when set
    double ideal = 0.0;        // noiseless direct evaluation on the input state
    double coefficient = 1.0;  // weight in the sum

    friend bool operator==(const ReportTerm &, const ReportTerm &) = default;
};

struct InequalityReport {
    std::string name;
    std::vector<ReportTerm> terms;
    double sum = 0.0;
    double ideal_sum = 0.0;
    double classical_bound = 0.0;
    BoundDirection direction = BoundDirection::kAtLeast;
    std::optional<double> quantum_prediction;
    bool violated = false;
    Method method = Method::kDirect;
    // Side conditions such as <A_j B_j> = 1; empty when not applicable.
    std::vector<ReportTerm> constraints;
    std::optional<bool> constraints_satisfied;
    std::optional<NoiseModel> noise;
    std::vector<std::string> notes;

    friend bool operator==(const InequalityReport &, const InequalityReport &) = default;
};

/// True when `sum` lies beyond `bound` in the forbidden direction by more
/// than tol::kVerdict.
bool violates(double sum, double bound, BoundDirection direction);

// Controlled-observable blocks per correlator, used by the visibility model.
inline constexpr int kPmBlocks = 3;
inline constexpr int kBellBlocks = 1;
inline constexpr int kTwoTimeBlocks = 2;

/// Correlator of `spec` on `rho` by the chosen method. The sequential method
/// measures the Heisenberg observables of the slots in order.
double evaluate_correlator(const QuantumState &rho, const TemporalCorrelationSpec &spec, Method method);

/// Unitary U with U^dagger sigma_z U equal to the Pauli named by `axis`
/// ('x', 'y', 'z' or 'i'; identity for the latter two).
ComplexMatrix rotation_to_pauli(char axis);

/**
 * The Peres-Mermin square, row-major:
 *
 *     A = Z I    B = I Z    C = Z Z
 *     a = I X    b = X I    c = X X
 *     alpha = Z X  beta = X Z  gamma = Y Y
 */
std::array<std::array<Observable, 3>, 3> pm_square();
/// Square entry by label ("A", ..., "gamma").
Observable pm_observable(std::string_view label);
/// Pauli letters of a square entry, e.g. "ZX" for alpha.
std::string pm_pauli_string(std::string_view label);

/// The six sequential triples of the PM sum in order; the last one enters
/// with coefficient -1.
const std::array<std::array<std::string_view, 3>, 6> &pm_terms();

/// Three-slot spec measuring a PM triple with sigma_z on every non-identity
/// qubit and per-qubit rotations as the preceding evolution.
TemporalCorrelationSpec pm_term_spec(std::span<const std::string_view, 3> labels);

InequalityReport eval_pm(const QuantumState &rho, Method method, const std::optional<NoiseModel> &noise = {});

/// Two-time temporal KCBS sum over the cycle (Z, S, Z, S, Z) with
/// S = sigma_theta, including the wrap pair.
InequalityReport eval_kcbs_temporal(const QuantumState &rho, double theta, Method method,
                                    const std::optional<NoiseModel> &noise = {});

/// Pentagon Leggett-Garg sum over all ten pairs i < j of the same five
/// observables, each pair measured in its own two-time experiment.
InequalityReport eval_pentagon_lg(const QuantumState &rho, double theta, Method method,
                                  const std::optional<NoiseModel> &noise = {});

/// Same ten pairs read off a single invasive run measuring all five
/// observables in sequence.
InequalityReport eval_pentagon_lg_invasive(const QuantumState &rho, double theta);

/// e^{i 2 pi j / 5 sigma_y} sigma_z e^{-i 2 pi j / 5 sigma_y}, j in 0..4.
Observable pentagram_observable(int j);

/// Two-slot spec for <A_r B_q> with A = sigma_r (x) I and B = I (x) sigma_q.
TemporalCorrelationSpec bell_term_spec(int r, int q);

/// Five-term transformed Bell sum <A0B1> + <A1B2> + <A2B3> + <A3B4> + <A4B0>
/// with bound -3, plus the five constraint correlators <A_j B_j>.
InequalityReport eval_transformed_bell(const QuantumState &rho_ab, Method method,
                                       const std::optional<NoiseModel> &noise = {});

}  // namespace qscatter
