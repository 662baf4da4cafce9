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

// qscatter command-line tool. Talks to the library only through its C API.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qscatter/qscatter.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitNotConverged = 3;
constexpr int kExitIo = 4;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(qs_status s) {
    switch (s) {
        case QS_OK:
            return kExitOk;
        case QS_ERR_IO:
            return kExitIo;
        case QS_ERR_NOT_CONVERGED:
            return kExitNotConverged;
        case QS_ERR_INTERNAL:
            return kExitFailed;
        default:
            return kExitInvalid;
    }
}

void check(qs_status s) {
    if (s != QS_OK) {
        throw CliError{exit_code_for(s), std::string(qs_status_name(s)) + ": " + qs_last_error()};
    }
}

struct StringDeleter {
    void operator()(char *p) const {
        qs_string_free(p);
    }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct StateDeleter {
    void operator()(qs_state *p) const {
        qs_state_free(p);
    }
};
struct ReportDeleter {
    void operator()(qs_report *p) const {
        qs_report_free(p);
    }
};
struct SummaryDeleter {
    void operator()(qs_summary *p) const {
        qs_summary_free(p);
    }
};

// Option values as given on the command line or in a --config file. Every
// field is optional so the two sources can be merged.
struct Settings {
    std::map<std::string, std::string> values;

    std::optional<std::string> get(const std::string &key) const {
        auto it = values.find(key);
        if (it == values.end()) {
            return std::nullopt;
        }
        return it->second;
    }
    std::string get_or(const std::string &key, std::string fallback) const {
        return get(key).value_or(std::move(fallback));
    }
};

const char *const kKeys[] = {"state",     "method",     "theta",      "depolarize", "visibility", "seed",
                             "output",    "format",     "data-dir",   "target",     "resolution", "restarts",
                             "iterations", "tolerance", "table",      "blocks",     "spec"};

std::string read_file(const std::string &path, const char *what) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kExitIo, std::string("cannot read ") + what + " '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Loads a JSON config. Keys match the long option names; "command" names
// the subcommand when none is given on the command line.
Settings load_config(const std::string &path, std::string &command) {
    const std::string text = read_file(path, "config");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw CliError{kExitInvalid, "config '" + path + "': " + e.what()};
    }
    if (!j.is_object()) {
        throw CliError{kExitInvalid, "config '" + path + "': expected an object"};
    }
    Settings s;
    for (const auto &[key, value] : j.items()) {
        std::string text_value;
        if (value.is_string()) {
            text_value = value.get<std::string>();
        } else if (value.is_number() || value.is_boolean()) {
            text_value = value.dump();
        } else {
            throw CliError{kExitInvalid, "config '" + path + "': value of '" + key + "' must be a scalar"};
        }
        if (key == "command") {
            command = text_value;
            continue;
        }
        bool known = false;
        for (const char *k : kKeys) {
            known = known || key == k;
        }
        if (!known) {
            throw CliError{kExitInvalid, "config '" + path + "': unknown key '" + key + "'"};
        }
        s.values[key] = text_value;
    }
    return s;
}

double to_double(const std::string &key, const std::string &text) {
    double v = 0.0;
    const qs_status s = qs_parse_angle(text.c_str(), &v);
    if (s != QS_OK) {
        throw CliError{kExitInvalid, "--" + key + ": " + qs_last_error()};
    }
    return v;
}

long long to_integer(const std::string &key, const std::string &text) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(text, &used);
        if (used == text.size()) {
            return v;
        }
    } catch (const std::exception &) {
    }
    throw CliError{kExitInvalid, "--" + key + ": expected an integer, got '" + text + "'"};
}

std::unique_ptr<qs_state, StateDeleter> make_state(const Settings &s, const std::string &fallback) {
    const std::string literal = s.get_or("state", fallback);
    qs_state *raw = nullptr;
    const std::string random_prefix = "random:";
    if (literal.rfind(random_prefix, 0) == 0) {
        const long long n = to_integer("state", literal.substr(random_prefix.size()));
        const long long seed = to_integer("seed", s.get_or("seed", "0"));
        if (n < 1 || seed < 0) {
            throw CliError{kExitInvalid, "bad random state literal '" + literal + "'"};
        }
        check(qs_state_random(static_cast<size_t>(n), static_cast<uint64_t>(seed), &raw));
    } else {
        check(qs_state_from_literal(literal.c_str(), &raw));
    }
    return std::unique_ptr<qs_state, StateDeleter>(raw);
}

qs_method method_of(const Settings &s) {
    qs_method m = QS_METHOD_SCATTERING;
    check(qs_parse_method(s.get_or("method", "scattering").c_str(), &m));
    return m;
}

qs_format format_of(const Settings &s) {
    qs_format f = QS_FORMAT_TABLE;
    check(qs_parse_format(s.get_or("format", "table").c_str(), &f));
    return f;
}

std::string extension(qs_format f) {
    switch (f) {
        case QS_FORMAT_JSON:
            return ".json";
        case QS_FORMAT_CSV:
            return ".csv";
        case QS_FORMAT_TABLE:
            return ".txt";
    }
    return ".txt";
}

void write_output(const Settings &s, const std::string &command, qs_format format, const std::string &text) {
    std::optional<std::string> path = s.get("output");
    if (!path) {
        if (const char *dir = std::getenv("QSCATTER_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            path = std::string(dir) + "/" + command + extension(format);
        }
    }
    if (!path || *path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    out << text;
    out.close();
    if (!out) {
        throw CliError{kExitIo, "cannot write output file '" + *path + "'"};
    }
}

int run_inequality(const Settings &s, const std::string &command) {
    qs_inequality which = QS_INEQ_PM;
    std::string default_state = "00";
    if (command == "kcbs") {
        which = QS_INEQ_KCBS;
        default_state = "0";
    } else if (command == "pentagon") {
        which = s.get_or("method", "") == "invasive" ? QS_INEQ_PENTAGON_INVASIVE : QS_INEQ_PENTAGON;
        default_state = "0";
    } else if (command == "bell") {
        which = QS_INEQ_BELL;
        default_state = "bell";
    }
    const qs_format format = format_of(s);
    auto state = make_state(s, default_state);
    const double theta = to_double("theta", s.get_or("theta", "acos(-0.75)"));
    const qs_method method = which == QS_INEQ_PENTAGON_INVASIVE ? QS_METHOD_SEQUENTIAL : method_of(s);

    std::optional<qs_noise> noise;
    if (s.get("depolarize") || s.get("visibility")) {
        noise = qs_noise{to_double("depolarize", s.get_or("depolarize", "0")),
                         to_double("visibility", s.get_or("visibility", "1"))};
    }
    qs_report *raw = nullptr;
    check(qs_evaluate(which, state.get(), method, theta, noise ? &*noise : nullptr, &raw));
    std::unique_ptr<qs_report, ReportDeleter> report(raw);
    char *text = nullptr;
    check(qs_report_render(report.get(), format, &text));
    OwnedString owned(text);
    write_output(s, command, format, owned.get());
    return kExitOk;
}

int emit_summary(const Settings &s, const std::string &command, qs_summary *raw, bool convergence_matters) {
    std::unique_ptr<qs_summary, SummaryDeleter> summary(raw);
    const qs_format format = format_of(s);
    char *text = nullptr;
    check(qs_summary_render(summary.get(), format, &text));
    OwnedString owned(text);
    write_output(s, command, format, owned.get());
    int converged = 1;
    check(qs_summary_converged(summary.get(), &converged));
    if (convergence_matters && converged == 0) {
        std::cerr << "qscatter: optimizer did not converge\n";
        return kExitNotConverged;
    }
    return kExitOk;
}

int run_bounds(const Settings &s) {
    format_of(s);
    qs_bounds_options o;
    qs_bounds_options_default(&o);
    if (auto v = s.get("resolution")) {
        o.grid_resolution = static_cast<int>(to_integer("resolution", *v));
    }
    if (auto v = s.get("restarts")) {
        o.seesaw_restarts = static_cast<int>(to_integer("restarts", *v));
    }
    if (auto v = s.get("iterations")) {
        o.seesaw_iterations = static_cast<int>(to_integer("iterations", *v));
        o.max_sweeps = o.seesaw_iterations;
    }
    if (auto v = s.get("tolerance")) {
        o.tolerance = to_double("tolerance", *v);
    }
    qs_summary *raw = nullptr;
    check(qs_bounds(s.get_or("target", "all").c_str(), &o, &raw));
    return emit_summary(s, "bounds", raw, true);
}

int run_fit(const Settings &s) {
    format_of(s);
    const std::string data_dir = s.get_or("data-dir", qs_default_data_dir());
    std::string table = s.get_or("table", "pm");
    long long blocks = -1;
    if (table == "pm") {
        table = data_dir + "/table1_pm.txt";
        blocks = 3;
    } else if (table == "bell") {
        table = data_dir + "/table2_bell.txt";
        blocks = 1;
    }
    if (auto v = s.get("blocks")) {
        blocks = to_integer("blocks", *v);
    }
    if (blocks < 0) {
        throw CliError{kExitInvalid, "fit: --blocks is required for a custom table"};
    }
    qs_summary *raw = nullptr;
    check(qs_fit_visibility(table.c_str(), static_cast<int>(blocks), &raw));
    return emit_summary(s, "fit", raw, false);
}

int run_correlate(const Settings &s) {
    format_of(s);
    const auto spec_path = s.get("spec");
    if (!spec_path) {
        throw CliError{kExitInvalid, "correlate: --spec is required"};
    }
    const std::string spec = read_file(*spec_path, "spec");
    auto state = make_state(s, "0");
    qs_summary *raw = nullptr;
    check(qs_correlate(spec.c_str(), state.get(), &raw));
    return emit_summary(s, "correlate", raw, false);
}

int run_selftest(const Settings &s) {
    const std::string data_dir = s.get_or("data-dir", qs_default_data_dir());
    char *text = nullptr;
    int passed = 0;
    check(qs_selftest(data_dir.c_str(), &text, &passed));
    OwnedString owned(text);
    write_output(s, "selftest", QS_FORMAT_TABLE, owned.get());
    return passed != 0 ? kExitOk : kExitFailed;
}

int dispatch(const std::string &command, const Settings &s) {
    if (command == "pm" || command == "kcbs" || command == "pentagon" || command == "bell") {
        return run_inequality(s, command);
    }
    if (command == "bounds") {
        return run_bounds(s);
    }
    if (command == "fit") {
        return run_fit(s);
    }
    if (command == "correlate") {
        return run_correlate(s);
    }
    if (command == "selftest") {
        return run_selftest(s);
    }
    throw CliError{kExitInvalid, "unknown command '" + command + "'"};
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Temporal and spatial correlation inequalities through scattering circuits"};
    app.fallthrough();
    app.require_subcommand(0, 1);
    app.set_version_flag("--version", std::string(qs_version()));

    std::map<std::string, std::string> given;
    std::string config_path;
    app.add_option("--config", config_path, "JSON file with option values (keys as long option names)");
    auto opt = [&](const char *name, const char *help) {
        app.add_option(std::string("--") + name, given[name], help);
    };
    opt("state", "state literal: bitstring, bell, mixed:<n>, random:<n> or an amplitude file");
    opt("method", "scattering, direct or sequential (pentagon also: invasive)");
    opt("theta", "angle in radians; expressions such as acos(-0.75) or pi/2 accepted");
    opt("depolarize", "state depolarization probability p");
    opt("visibility", "per-block visibility v");
    opt("seed", "seed for random:<n> states");
    opt("output", "output file (default stdout or $QSCATTER_OUTPUT_DIR/<command>.<ext>)");
    opt("format", "json, csv or table");
    opt("data-dir", "directory with the experimental tables");
    opt("target", "bounds: bell-kcbs, temporal-kcbs, contextual-kcbs, pentagon-lg or all");
    opt("resolution", "bounds: grid points per angle");
    opt("restarts", "bounds: seesaw restarts");
    opt("iterations", "bounds: seesaw iterations and maximum descent sweeps");
    opt("tolerance", "bounds: convergence tolerance");
    opt("table", "fit: pm, bell or a table file");
    opt("blocks", "fit: controlled blocks per correlator");
    opt("spec", "correlate: JSON correlator spec file");

    const std::pair<const char *, const char *> commands[] = {
        {"pm", "Peres-Mermin square sum"},
        {"kcbs", "temporal KCBS five-cycle"},
        {"pentagon", "pentagon Leggett-Garg sum"},
        {"bell", "transformed Bell five-cycle on two qubits"},
        {"bounds", "numerical quantum bounds of the five-cycle"},
        {"selftest", "run the acceptance suite"},
        {"correlate", "evaluate a single correlator spec"},
        {"fit", "fit a per-block visibility to an experimental table"},
    };
    for (const auto &[name, help] : commands) {
        app.add_subcommand(name, help);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInvalid;
    }

    try {
        std::string command;
        Settings settings;
        if (!config_path.empty()) {
            settings = load_config(config_path, command);
        }
        for (const char *k : kKeys) {
            if (app.get_option(std::string("--") + k)->count() > 0) {
                settings.values[k] = given[k];
            }
        }
        const auto chosen = app.get_subcommands();
        if (!chosen.empty()) {
            command = chosen.front()->get_name();
        }
        if (command.empty()) {
            throw CliError{kExitInvalid, "no command given (try --help)"};
        }
        return dispatch(command, settings);
    } catch (const CliError &e) {
        std::cerr << "qscatter: " << e.message << "\n";
        return e.exit_code;
    }
}
