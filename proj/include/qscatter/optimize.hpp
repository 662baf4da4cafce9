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

#include <functional>

namespace qscatter {

struct ScalarMinimum {
    double argument;
    double value;
    int evaluations;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops when the
/// bracket is narrower than `tolerance`. The returned point is the best one
/// evaluated, including the bracket ends.
ScalarMinimum golden_section_minimize(const std::function<double(double)> &f, double lo, double hi,
                                      double tolerance);

}  // namespace qscatter
