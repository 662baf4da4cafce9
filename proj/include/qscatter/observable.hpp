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

#include <string>

#include "qscatter/numerics.hpp"

namespace qscatter {

/// Hermitian operator with a label; dichotomic observables satisfy O^2 = I.
class Observable {
public:
    /// Validates Hermiticity, and O^2 = I when `dichotomic` is set.
    Observable(ComplexMatrix matrix, std::string label, bool dichotomic = true);

    const ComplexMatrix &matrix() const noexcept {
        return matrix_;
    }
    const std::string &label() const noexcept {
        return label_;
    }
    bool dichotomic() const noexcept {
        return dichotomic_;
    }
    std::size_t dimension() const noexcept {
        return matrix_.rows();
    }

    /// Spectral projector onto the +1 or -1 eigenspace, (I +- O) / 2.
    ComplexMatrix projector(int outcome) const;

private:
    ComplexMatrix matrix_;
    std::string label_;
    bool dichotomic_;
};

/// cos(theta) sigma_z + sin(theta) sigma_x.
Observable sigma_theta(double theta);

}  // namespace qscatter
