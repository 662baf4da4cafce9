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

// Minimal error model: global depolarization of the input state plus a
// multiplicative visibility per controlled-observable block. This is a
// phenomenological explanation of reduced experimental contrast, not a
// physical noise model.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "qscatter/states.hpp"

namespace qscatter {

struct NoiseModel {
    double state_depolarizing_p = 0.0;
    double block_visibility_v = 1.0;

    /// Throws unless both parameters lie in [0, 1].
    void validate() const;
    friend bool operator==(const NoiseModel &, const NoiseModel &) = default;
};

/// (1 - p) rho + p I / 2^n.
QuantumState depolarize(const QuantumState &rho, double p);

/// v^n_blocks * ideal.
double apply_visibility(double ideal, int n_blocks, double v);

struct VisibilitySample {
    double ideal;
    int n_blocks;
    double measured;
};

/// Sum of squared residuals (v^n ideal - measured)^2.
double visibility_objective(std::span<const VisibilitySample> samples, double v);

/// Least-squares v in [0, 1] by golden-section search (tolerance 1e-6).
double fit_visibility(std::span<const VisibilitySample> samples);

/// One row of a shipped experimental table.
struct ExperimentalRow {
    std::string label;
    double theory;
    double experimental;
    double uncertainty;
    double coefficient = 1.0;  // weight of the row in the inequality sum
};

/**
 * Reads a whitespace-separated table with columns
 * `label theory experimental uncertainty [coefficient]`. Lines starting with
 * '#' and blank lines are skipped.
 */
std::vector<ExperimentalRow> read_experimental_table(const std::string &path);
std::vector<ExperimentalRow> parse_experimental_table(const std::string &text, const std::string &origin = "table");

std::vector<VisibilitySample> samples_from_table(std::span<const ExperimentalRow> rows, int n_blocks);

}  // namespace qscatter
