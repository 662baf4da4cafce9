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

#include "qscatter/spec_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include <json.hpp>

#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/observable.hpp"

namespace qscatter {

namespace {

using nlohmann::json;

class AngleParser {
public:
    explicit AngleParser(std::string_view text) : text_(text) {}

    double parse() {
        const double v = expr();
        skip_space();
        if (pos_ != text_.size()) {
            error("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        if (!std::isfinite(v)) {
            error("value is not finite");
        }
        return v;
    }

private:
    [[noreturn]] void error(const std::string &why) const {
        fail(ErrorCode::kParse, "bad angle '" + std::string(text_) + "': " + why);
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        for (;;) {
            if (accept('+')) {
                v += term();
            } else if (accept('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    double term() {
        double v = factor();
        for (;;) {
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                v /= factor();
            } else {
                return v;
            }
        }
    }

    double factor() {
        if (accept('-')) {
            return -factor();
        }
        if (accept('+')) {
            return factor();
        }
        if (accept('(')) {
            const double v = expr();
            if (!accept(')')) {
                error("missing ')'");
            }
            return v;
        }
        skip_space();
        if (pos_ >= text_.size()) {
            error("unexpected end");
        }
        if (std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "pi") {
                return std::numbers::pi;
            }
            if (!accept('(')) {
                error("unknown name '" + std::string(name) + "'");
            }
            const double arg = expr();
            if (!accept(')')) {
                error("missing ')'");
            }
            if (name == "acos" || name == "asin") {
                if (arg < -1.0 || arg > 1.0) {
                    error(std::string(name) + " argument outside [-1, 1]");
                }
                return name == "acos" ? std::acos(arg) : std::asin(arg);
            }
            if (name == "cos") {
                return std::cos(arg);
            }
            if (name == "sin") {
                return std::sin(arg);
            }
            if (name == "sqrt") {
                if (arg < 0.0) {
                    error("sqrt of a negative number");
                }
                return std::sqrt(arg);
            }
            error("unknown function '" + std::string(name) + "'");
        }
        double v = 0.0;
        const char *first = text_.data() + pos_;
        const char *last = text_.data() + text_.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{}) {
            error("expected a number");
        }
        pos_ += static_cast<std::size_t>(res.ptr - first);
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

double angle_value(const json &j) {
    if (j.is_number()) {
        return j.get<double>();
    }
    if (j.is_string()) {
        return parse_angle(j.get<std::string>());
    }
    fail(ErrorCode::kParse, "spec: angle must be a number or an expression string");
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.substr(0, prefix.size()) == prefix;
}

ComplexMatrix qubit_factor(const std::string &token) {
    if (token == "I") {
        return pauli_i();
    }
    if (token == "X") {
        return pauli_x();
    }
    if (token == "Y") {
        return pauli_y();
    }
    if (token == "Z") {
        return pauli_z();
    }
    if (starts_with(token, "sigma_theta(") && token.back() == ')') {
        const std::string inner = token.substr(12, token.size() - 13);
        return sigma_theta(parse_angle(inner)).matrix();
    }
    if (starts_with(token, "pentagram:")) {
        const std::string idx = token.substr(10);
        int j = -1;
        const auto res = std::from_chars(idx.data(), idx.data() + idx.size(), j);
        if (res.ec != std::errc{} || res.ptr != idx.data() + idx.size() || j < 0 || j > 4) {
            fail(ErrorCode::kParse, "spec: bad pentagram index in '" + token + "'");
        }
        return pentagram_observable(j).matrix();
    }
    fail(ErrorCode::kParse, "spec: unknown observable token '" + token + "'");
}

ComplexMatrix evolution_unitary(const json &gates, std::size_t qubits) {
    Circuit c(qubits);
    if (gates.is_null()) {
        return c.unitary();
    }
    if (!gates.is_array()) {
        fail(ErrorCode::kParse, "spec: evolution must be a list of gates");
    }
    for (const auto &g : gates) {
        const std::string name = g.at("gate").get<std::string>();
        const auto q = g.at("qubit").get<std::size_t>();
        require(q < qubits, ErrorCode::kInvalidArgument, "spec: gate qubit out of range");
        if (name == "h") {
            c.add(hadamard(q));
        } else if (name == "rx") {
            c.add(rx(angle_value(g.at("angle")), q));
        } else if (name == "ry") {
            c.add(ry(angle_value(g.at("angle")), q));
        } else if (name == "rz") {
            c.add(rz(angle_value(g.at("angle")), q));
        } else {
            fail(ErrorCode::kParse, "spec: unknown gate '" + name + "'");
        }
    }
    return c.unitary();
}

}  // namespace

double parse_angle(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) {
        body.remove_prefix(1);
    }
    if (starts_with(body, "theta=")) {
        body.remove_prefix(6);
    }
    if (body.empty()) {
        fail(ErrorCode::kParse, "bad angle '" + std::string(text) + "': empty");
    }
    return AngleParser(body).parse();
}

TemporalCorrelationSpec parse_spec_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        const auto n = j.at("system_qubits").get<std::size_t>();
        require(n >= 1 && n <= 3, ErrorCode::kInvalidArgument, "spec: system_qubits must be 1..3");
        std::vector<TimeSlot> slots;
        for (const auto &s : j.at("slots")) {
            const json &obs = s.at("observable");
            const ComplexMatrix u = evolution_unitary(s.value("evolution", json()), n);
            std::string label = s.value("label", std::string());
            if (obs.is_string()) {
                const std::string token = obs.get<std::string>();
                if (!starts_with(token, "pm:")) {
                    fail(ErrorCode::kParse, "spec: joint observable must be pm:<label>, got '" + token + "'");
                }
                require(n == 2, ErrorCode::kDimensionMismatch, "spec: pm observables need two system qubits");
                const Observable o = pm_observable(token.substr(3));
                slots.push_back(TimeSlot::joint(o.matrix(), u, label.empty() ? o.label() : label));
            } else {
                std::vector<ComplexMatrix> factors;
                std::string joined;
                for (const auto &t : obs) {
                    const std::string token = t.get<std::string>();
                    factors.push_back(qubit_factor(token));
                    joined += joined.empty() ? token : " " + token;
                }
                require(factors.size() == n, ErrorCode::kDimensionMismatch,
                        "spec: observable needs one token per system qubit");
                slots.push_back(TimeSlot::per_qubit(std::move(factors), u, label.empty() ? joined : label));
            }
        }
        return TemporalCorrelationSpec(n, std::move(slots));
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::kParse, std::string("spec: ") + e.what());
    }
}

}  // namespace qscatter
