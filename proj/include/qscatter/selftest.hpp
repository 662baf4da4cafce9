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

// Acceptance suite, shared by the `selftest` command and the ctest binary.

#pragma once

#include <random>
#include <string>
#include <vector>

#include "qscatter/observable.hpp"
#include "qscatter/scattering.hpp"
#include "qscatter/states.hpp"

namespace qscatter {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    /// One line per criterion: `PASS  [n] title: detail` (or FAIL).
    std::string text() const;
};

/// Runs every acceptance criterion. `data_dir` holds the shipped
/// experimental tables.
SelftestReport run_selftest(const std::string &data_dir);

/// V diag(+-1) V^dagger with Haar V and a uniformly drawn number of -1s.
ComplexMatrix random_dichotomic(std::size_t dim, std::mt19937_64 &rng);

/// Random spec with 1..max_qubits system qubits and 1..max_slots slots,
/// each slot a random dichotomic observable and a Haar-random evolution.
TemporalCorrelationSpec random_spec(std::mt19937_64 &rng, std::size_t max_qubits, std::size_t max_slots);

/// Pure Haar state for even `seed`, a random mixture for odd `seed`.
QuantumState random_test_state(std::size_t qubits, std::uint64_t seed);

}  // namespace qscatter
