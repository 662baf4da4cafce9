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

#include "qscatter/observable.hpp"

#include <cmath>

#include "qscatter/error.hpp"
#include "qscatter/tolerances.hpp"

namespace qscatter {

Observable::Observable(ComplexMatrix matrix, std::string label, bool dichotomic)
    : matrix_(std::move(matrix)), label_(std::move(label)), dichotomic_(dichotomic) {
    require(is_hermitian(matrix_, tol::kHermitian), ErrorCode::kNotHermitian,
            "Observable '" + label_ + "' is not Hermitian");
    if (dichotomic_) {
        require(max_abs_diff(matmul(matrix_, matrix_), ComplexMatrix::identity(matrix_.rows())) <= tol::kDichotomic,
                ErrorCode::kInvalidArgument, "Observable '" + label_ + "' does not square to identity");
    }
}

ComplexMatrix Observable::projector(int outcome) const {
    require(dichotomic_, ErrorCode::kInvalidArgument, "projector: '" + label_ + "' is not dichotomic");
    require(outcome == 1 || outcome == -1, ErrorCode::kInvalidArgument, "projector: outcome must be +1 or -1");
    return scale(add(ComplexMatrix::identity(dimension()), scale(matrix_, static_cast<double>(outcome))), 0.5);
}

Observable sigma_theta(double theta) {
    require(std::isfinite(theta), ErrorCode::kInvalidArgument, "sigma_theta: non-finite angle");
    return Observable(add(scale(pauli_z(), std::cos(theta)), scale(pauli_x(), std::sin(theta))),
                      "sigma_theta");
}

}  // namespace qscatter
