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

#include "qscatter/optimize.hpp"

#include <cmath>

#include "qscatter/error.hpp"

namespace qscatter {

ScalarMinimum golden_section_minimize(const std::function<double(double)> &f, double lo, double hi,
                                      double tolerance) {
    require(lo <= hi && tolerance > 0.0, ErrorCode::kInvalidArgument, "golden_section_minimize: bad bracket");
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int evals = 2;
    while (b - a > tolerance) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++evals;
    }
    ScalarMinimum best{c, fc, evals};
    if (fd < best.value) {
        best = {d, fd, evals};
    }
    for (double end : {lo, hi}) {
        const double fe = f(end);
        ++best.evaluations;
        if (fe < best.value) {
            best.argument = end;
            best.value = fe;
        }
    }
    return best;
}

}  // namespace qscatter
