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

#include "qscatter/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "qscatter/error.hpp"

namespace qscatter {

using nlohmann::json;

namespace {

std::string_view direction_token(BoundDirection d) {
    return d == BoundDirection::kAtLeast ? "at_least" : "at_most";
}

BoundDirection parse_direction(const std::string &s) {
    if (s == "at_least") {
        return BoundDirection::kAtLeast;
    }
    if (s == "at_most") {
        return BoundDirection::kAtMost;
    }
    fail(ErrorCode::kParse, "report: unknown bound direction '" + s + "'");
}

json term_to_json(const ReportTerm &t) {
    return {{"label", t.label}, {"value", t.value}, {"ideal", t.ideal}, {"coefficient", t.coefficient}};
}

ReportTerm term_from_json(const json &j) {
    ReportTerm t;
    t.label = j.at("label").get<std::string>();
    t.value = j.at("value").get<double>();
    t.ideal = j.at("ideal").get<double>();
    t.coefficient = j.at("coefficient").get<double>();
    return t;
}

json result_to_json(const BoundResult &r) {
    json arg = json::object();
    arg["angles"] = r.argument.angles;
    arg["vectors"] = r.argument.vectors;
    arg["state"] = r.argument.state;
    json j = {{"target", target_name(r.target)},
              {"variant", r.variant},
              {"optimum", r.optimum},
              {"argument", arg},
              {"iterations", r.iterations},
              {"converged", r.converged},
              {"tolerance", r.tolerance},
              {"last_improvement", r.last_improvement}};
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    return j;
}

BoundResult result_from_json(const json &j) {
    BoundResult r;
    r.target = parse_target(j.at("target").get<std::string>());
    r.variant = j.at("variant").get<std::string>();
    r.optimum = j.at("optimum").get<double>();
    const json &arg = j.at("argument");
    r.argument.angles = arg.at("angles").get<std::vector<double>>();
    r.argument.vectors = arg.at("vectors").get<std::vector<std::array<double, 3>>>();
    r.argument.state = arg.at("state").get<std::vector<double>>();
    r.iterations = j.at("iterations").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.tolerance = j.at("tolerance").get<double>();
    r.last_improvement = j.at("last_improvement").get<double>();
    if (!j.at("seed").is_null()) {
        r.seed = j.at("seed").get<std::uint64_t>();
    }
    return r;
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) {
        s.append(width - s.size(), ' ');
    }
    return s;
}

std::string lpad(const std::string &s, std::size_t width) {
    return s.size() < width ? std::string(width - s.size(), ' ') + s : s;
}

template <typename Fn>
auto parse_guarded(std::string_view text, const char *what, Fn fn) {
    try {
        return fn(json::parse(text));
    } catch (const json::exception &e) {
        fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
    }
}

}  // namespace

std::string_view format_name(Format f) {
    switch (f) {
        case Format::kJson:
            return "json";
        case Format::kCsv:
            return "csv";
        case Format::kTable:
            return "table";
    }
    return "json";
}

Format parse_format(std::string_view name) {
    for (auto f : {Format::kJson, Format::kCsv, Format::kTable}) {
        if (format_name(f) == name) {
            return f;
        }
    }
    fail(ErrorCode::kInvalidArgument, "unknown output format '" + std::string(name) + "'");
}

std::string format_fixed(double value, int decimals) {
    require(std::isfinite(value), ErrorCode::kInvalidArgument, "format_fixed: non-finite value");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, decimals);
    require(res.ec == std::errc{}, ErrorCode::kInternal, "format_fixed: buffer too small");
    std::string s(buf, res.ptr);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

std::string emit_csv(const InequalityReport &report) {
    require(!report.terms.empty(), ErrorCode::kInvalidArgument, "emit: report '" + report.name + "' has no terms");
    const std::string method(method_name(report.method));
    std::string out = "inequality,term,theory,value,method\n";
    for (const auto &t : report.terms) {
        out += report.name + "," + t.label + "," + format_fixed(t.ideal) + "," + format_fixed(t.value) + "," +
               method + "\n";
    }
    out += report.name + ",SUM," + format_fixed(report.classical_bound) + "," + format_fixed(report.sum) + "," +
           method + "\n";
    return out;
}

std::string emit_json(const InequalityReport &report) {
    require(!report.terms.empty(), ErrorCode::kInvalidArgument, "emit: report '" + report.name + "' has no terms");
    json j;
    j["inequality"] = report.name;
    j["method"] = method_name(report.method);
    j["terms"] = json::array();
    for (const auto &t : report.terms) {
        j["terms"].push_back(term_to_json(t));
    }
    j["sum"] = report.sum;
    j["ideal_sum"] = report.ideal_sum;
    j["classical_bound"] = report.classical_bound;
    j["direction"] = direction_token(report.direction);
    j["quantum_prediction"] = report.quantum_prediction ? json(*report.quantum_prediction) : json(nullptr);
    j["violated"] = report.violated;
    j["verdict"] = report.violated ? "violated" : "not violated";
    j["constraints"] = json::array();
    for (const auto &t : report.constraints) {
        j["constraints"].push_back(term_to_json(t));
    }
    j["constraints_satisfied"] =
        report.constraints_satisfied ? json(*report.constraints_satisfied) : json(nullptr);
    if (report.noise) {
        j["noise"] = {{"state_depolarizing_p", report.noise->state_depolarizing_p},
                      {"block_visibility_v", report.noise->block_visibility_v}};
    } else {
        j["noise"] = nullptr;
    }
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

InequalityReport parse_report_json(std::string_view text) {
    return parse_guarded(text, "report", [](const json &j) {
        InequalityReport r;
        r.name = j.at("inequality").get<std::string>();
        r.method = parse_method(j.at("method").get<std::string>());
        for (const auto &t : j.at("terms")) {
            r.terms.push_back(term_from_json(t));
        }
        r.sum = j.at("sum").get<double>();
        r.ideal_sum = j.at("ideal_sum").get<double>();
        r.classical_bound = j.at("classical_bound").get<double>();
        r.direction = parse_direction(j.at("direction").get<std::string>());
        if (!j.at("quantum_prediction").is_null()) {
            r.quantum_prediction = j.at("quantum_prediction").get<double>();
        }
        r.violated = j.at("violated").get<bool>();
        for (const auto &t : j.at("constraints")) {
            r.constraints.push_back(term_from_json(t));
        }
        if (!j.at("constraints_satisfied").is_null()) {
            r.constraints_satisfied = j.at("constraints_satisfied").get<bool>();
        }
        if (!j.at("noise").is_null()) {
            NoiseModel n;
            n.state_depolarizing_p = j.at("noise").at("state_depolarizing_p").get<double>();
            n.block_visibility_v = j.at("noise").at("block_visibility_v").get<double>();
            r.noise = n;
        }
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    });
}

std::string emit_table(const InequalityReport &report) {
    require(!report.terms.empty(), ErrorCode::kInvalidArgument, "emit: report '" + report.name + "' has no terms");
    std::size_t w = 8;
    for (const auto &t : report.terms) {
        w = std::max(w, t.label.size() + 2);
    }
    for (const auto &t : report.constraints) {
        w = std::max(w, t.label.size() + 2);
    }
    const bool noisy = report.noise.has_value();
    std::ostringstream os;
    os << report.name << " (method: " << method_name(report.method) << ")\n\n";
    os << pad("term", w) << lpad("theory", 12) << lpad(noisy ? "noisy" : "value", 12) << "\n";
    for (const auto &t : report.terms) {
        os << pad(t.label, w) << lpad(format_fixed(t.ideal), 12) << lpad(format_fixed(t.value), 12);
        if (t.coefficient != 1.0) {
            os << "   (weight " << format_fixed(t.coefficient, 1) << ")";
        }
        os << "\n";
    }
    os << pad("SUM", w) << lpad(format_fixed(report.ideal_sum), 12) << lpad(format_fixed(report.sum), 12) << "\n\n";
    os << "classical bound:    " << (report.direction == BoundDirection::kAtLeast ? ">= " : "<= ")
       << format_fixed(report.classical_bound) << "\n";
    if (report.quantum_prediction) {
        os << "quantum prediction: " << format_fixed(*report.quantum_prediction) << "\n";
    }
    os << "verdict:            " << (report.violated ? "violated" : "not violated") << "\n";
    if (noisy) {
        os << "noise:              p = " << format_fixed(report.noise->state_depolarizing_p)
           << ", v = " << format_fixed(report.noise->block_visibility_v) << "\n";
    }
    if (!report.constraints.empty()) {
        os << "\nconstraints";
        if (report.constraints_satisfied) {
            os << " (" << (*report.constraints_satisfied ? "satisfied" : "NOT satisfied") << ")";
        }
        os << ":\n";
        for (const auto &t : report.constraints) {
            os << pad(t.label, w) << lpad(format_fixed(t.value), 12) << "\n";
        }
    }
    for (const auto &n : report.notes) {
        os << "note: " << n << "\n";
    }
    return os.str();
}

std::string emit(const InequalityReport &report, Format format) {
    switch (format) {
        case Format::kJson:
            return emit_json(report);
        case Format::kCsv:
            return emit_csv(report);
        case Format::kTable:
            return emit_table(report);
    }
    fail(ErrorCode::kInternal, "emit: unknown format");
}

SummaryReport make_summary(std::string title, std::vector<BoundResult> results) {
    SummaryReport s;
    s.title = std::move(title);
    s.converged = std::all_of(results.begin(), results.end(), [](const BoundResult &r) { return r.converged; });
    s.results = std::move(results);
    return s;
}

std::string emit_json(const SummaryReport &report) {
    json j;
    j["title"] = report.title;
    j["converged"] = report.converged;
    j["results"] = json::array();
    for (const auto &r : report.results) {
        j["results"].push_back(result_to_json(r));
    }
    j["values"] = json::array();
    for (const auto &[k, v] : report.values) {
        j["values"].push_back({{"name", k}, {"value", v}});
    }
    j["notes"] = report.notes;
    return j.dump(2) + "\n";
}

SummaryReport parse_summary_json(std::string_view text) {
    return parse_guarded(text, "summary", [](const json &j) {
        SummaryReport s;
        s.title = j.at("title").get<std::string>();
        s.converged = j.at("converged").get<bool>();
        for (const auto &r : j.at("results")) {
            s.results.push_back(result_from_json(r));
        }
        for (const auto &v : j.at("values")) {
            s.values.emplace_back(v.at("name").get<std::string>(), v.at("value").get<double>());
        }
        s.notes = j.at("notes").get<std::vector<std::string>>();
        return s;
    });
}

std::string emit_csv(const SummaryReport &report) {
    std::string out = "item,variant,quantity,value\n";
    for (const auto &r : report.results) {
        const std::string head = std::string(target_name(r.target)) + "," + r.variant + ",";
        out += head + "optimum," + format_fixed(r.optimum) + "\n";
        out += head + "converged," + (r.converged ? "1" : "0") + "\n";
        out += head + "iterations," + std::to_string(r.iterations) + "\n";
        for (std::size_t i = 0; i < r.argument.angles.size(); ++i) {
            out += head + "angle_" + std::to_string(i) + "," + format_fixed(r.argument.angles[i]) + "\n";
        }
    }
    for (const auto &[k, v] : report.values) {
        out += report.title + ",," + k + "," + format_fixed(v) + "\n";
    }
    return out;
}

std::string emit_table(const SummaryReport &report) {
    std::ostringstream os;
    os << report.title << "\n\n";
    for (const auto &r : report.results) {
        std::string name(target_name(r.target));
        if (!r.variant.empty()) {
            name += " (" + r.variant + ")";
        }
        os << pad(name, 28) << lpad(format_fixed(r.optimum), 12) << "   " << (r.converged ? "converged" : "NOT converged")
           << ", " << r.iterations << " iterations";
        if (r.seed) {
            os << ", seed " << *r.seed;
        }
        os << "\n";
        if (!r.argument.angles.empty()) {
            os << "    angles:";
            for (double a : r.argument.angles) {
                os << " " << format_fixed(a);
            }
            os << "\n";
        }
        for (const auto &v : r.argument.vectors) {
            os << "    vector: " << format_fixed(v[0]) << " " << format_fixed(v[1]) << " " << format_fixed(v[2]) << "\n";
        }
        if (!r.argument.state.empty()) {
            os << "    state: ";
            for (double a : r.argument.state) {
                os << " " << format_fixed(a);
            }
            os << "\n";
        }
    }
    std::size_t w = 8;
    for (const auto &kv : report.values) {
        w = std::max(w, kv.first.size() + 2);
    }
    for (const auto &[k, v] : report.values) {
        os << pad(k, w) << lpad(format_fixed(v), 12) << "\n";
    }
    for (const auto &n : report.notes) {
        os << "note: " << n << "\n";
    }
    return os.str();
}

std::string emit(const SummaryReport &report, Format format) {
    switch (format) {
        case Format::kJson:
            return emit_json(report);
        case Format::kCsv:
            return emit_csv(report);
        case Format::kTable:
            return emit_table(report);
    }
    fail(ErrorCode::kInternal, "emit: unknown format");
}

}  // namespace qscatter
