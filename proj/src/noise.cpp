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

#include "qscatter/noise.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qscatter/error.hpp"
#include "qscatter/optimize.hpp"

namespace qscatter {

void NoiseModel::validate() const {
    require(state_depolarizing_p >= 0.0 && state_depolarizing_p <= 1.0, ErrorCode::kInvalidArgument,
            "noise: depolarizing probability outside [0, 1]");
    require(block_visibility_v >= 0.0 && block_visibility_v <= 1.0, ErrorCode::kInvalidArgument,
            "noise: visibility outside [0, 1]");
}

QuantumState depolarize(const QuantumState &rho, double p) {
    require(p >= 0.0 && p <= 1.0, ErrorCode::kInvalidArgument, "depolarize: p outside [0, 1]");
    if (p == 0.0) {
        return rho;
    }
    const std::size_t dim = rho.dimension();
    ComplexMatrix out = scale(rho.density(), 1.0 - p);
    for (std::size_t i = 0; i < dim; ++i) {
        out(i, i) += p / static_cast<double>(dim);
    }
    return QuantumState::mixed(std::move(out));
}

double apply_visibility(double ideal, int n_blocks, double v) {
    require(v >= 0.0 && v <= 1.0, ErrorCode::kInvalidArgument, "apply_visibility: v outside [0, 1]");
    require(n_blocks >= 0, ErrorCode::kInvalidArgument, "apply_visibility: negative block count");
    return std::pow(v, n_blocks) * ideal;
}

double visibility_objective(std::span<const VisibilitySample> samples, double v) {
    double s = 0.0;
    for (const auto &x : samples) {
        const double r = std::pow(v, x.n_blocks) * x.ideal - x.measured;
        s += r * r;
    }
    return s;
}

double fit_visibility(std::span<const VisibilitySample> samples) {
    require(!samples.empty(), ErrorCode::kInvalidArgument, "fit_visibility: no samples");
    for (const auto &x : samples) {
        require(x.ideal != 0.0, ErrorCode::kInvalidArgument, "fit_visibility: ideal value is zero");
        require(x.n_blocks >= 0, ErrorCode::kInvalidArgument, "fit_visibility: negative block count");
    }
    return golden_section_minimize([&](double v) { return visibility_objective(samples, v); }, 0.0, 1.0, 1e-6)
        .argument;
}

std::vector<ExperimentalRow> parse_experimental_table(const std::string &text, const std::string &origin) {
    std::istringstream in(text);
    std::vector<ExperimentalRow> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        fields.imbue(std::locale::classic());
        ExperimentalRow r;
        const std::string where = origin + ":" + std::to_string(line_no);
        require(static_cast<bool>(fields >> r.label >> r.theory >> r.experimental >> r.uncertainty), ErrorCode::kParse,
                where + ": expected 'label theory experimental uncertainty [coefficient]'");
        std::string extra;
        if (fields >> extra) {
            std::istringstream coef(extra);
            coef.imbue(std::locale::classic());
            require(static_cast<bool>(coef >> r.coefficient) && coef.peek() == EOF, ErrorCode::kParse,
                    where + ": bad coefficient '" + extra + "'");
            require(!(fields >> extra), ErrorCode::kParse, where + ": too many columns");
        }
        rows.push_back(std::move(r));
    }
    require(!rows.empty(), ErrorCode::kParse, origin + ": no rows");
    return rows;
}

std::vector<ExperimentalRow> read_experimental_table(const std::string &path) {
    std::ifstream in(path);
    require(in.good(), ErrorCode::kIo, "cannot read experimental table '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experimental_table(buf.str(), path);
}

std::vector<VisibilitySample> samples_from_table(std::span<const ExperimentalRow> rows, int n_blocks) {
    std::vector<VisibilitySample> out;
    out.reserve(rows.size());
    for (const auto &r : rows) {
        out.push_back({r.theory, n_blocks, r.experimental});
    }
    return out;
}

}  // namespace qscatter
