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

// Every numerical tolerance used by the library lives here.
namespace qscatter::tol {

inline constexpr double kDefault = 1e-10;           // generic absolute comparison
inline constexpr double kHermitian = 1e-10;         // ||A - A^dagger||_max
inline constexpr double kUnitary = 1e-10;           // ||U^dagger U - I||_max
inline constexpr double kDichotomic = 1e-9;         // ||O^2 - I||_max
inline constexpr double kNorm = 1e-10;              // pure-state normalization
inline constexpr double kTrace = 1e-10;             // density-matrix trace
inline constexpr double kPositivity = 1e-9;         // smallest admissible eigenvalue is -kPositivity
inline constexpr double kSqrtClamp = 1e-10;         // eigenvalues in [-kSqrtClamp, 0) are clamped
inline constexpr double kJacobiOffDiagonal = 1e-12; // Frobenius norm of the off-diagonal part
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kBranchPrune = 1e-12;       // Lueders branches below this are dropped
inline constexpr double kVerdict = 1e-9;            // margin for declaring a violation
inline constexpr double kPhaseFix = 1e-12;          // "first nonzero component" threshold

}  // namespace qscatter::tol
