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

#include "qscatter/qscatter.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <numbers>
#include <string>

#include "qscatter/bounds.hpp"
#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/noise.hpp"
#include "qscatter/report.hpp"
#include "qscatter/selftest.hpp"
#include "qscatter/spec_io.hpp"
#include "qscatter/states.hpp"

struct qs_state {
    qscatter::QuantumState value;
};

struct qs_report {
    qscatter::InequalityReport value;
};

struct qs_summary {
    qscatter::SummaryReport value;
};

namespace {

using namespace qscatter;

thread_local std::string g_last_error;

qs_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::kInvalidArgument:
            return QS_ERR_INVALID_ARGUMENT;
        case ErrorCode::kDimensionMismatch:
            return QS_ERR_DIMENSION_MISMATCH;
        case ErrorCode::kNotHermitian:
            return QS_ERR_NOT_HERMITIAN;
        case ErrorCode::kParse:
            return QS_ERR_PARSE;
        case ErrorCode::kIo:
            return QS_ERR_IO;
        case ErrorCode::kNotConverged:
            return QS_ERR_NOT_CONVERGED;
        case ErrorCode::kInternal:
            return QS_ERR_INTERNAL;
    }
    return QS_ERR_INTERNAL;
}

template <typename Fn>
qs_status guarded(Fn &&fn) {
    g_last_error.clear();
    try {
        fn();
        return QS_OK;
    } catch (const Error &e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return QS_ERR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return QS_ERR_INTERNAL;
    }
}

void need(const void *p, const char *what) {
    require(p != nullptr, ErrorCode::kInvalidArgument, std::string(what) + " must not be NULL");
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

Method to_method(qs_method m) {
    switch (m) {
        case QS_METHOD_SCATTERING:
            return Method::kScattering;
        case QS_METHOD_DIRECT:
            return Method::kDirect;
        case QS_METHOD_SEQUENTIAL:
            return Method::kSequential;
    }
    fail(ErrorCode::kInvalidArgument, "unknown method value");
}

Format to_format(qs_format f) {
    switch (f) {
        case QS_FORMAT_JSON:
            return Format::kJson;
        case QS_FORMAT_CSV:
            return Format::kCsv;
        case QS_FORMAT_TABLE:
            return Format::kTable;
    }
    fail(ErrorCode::kInvalidArgument, "unknown format value");
}

const qs_bounds_options kDefaultBounds{12, 200, 300, 8, 1e-12};

void add_target(SummaryReport &s, BoundTarget target, const qs_bounds_options &o) {
    const double tsirelson = -5 * std::cos(std::numbers::pi / 5);
    const GridSearchOptions grid{o.grid_resolution, o.max_sweeps, o.tolerance};
    switch (target) {
        case BoundTarget::kBellKcbs:
            s.results.push_back(tsirelson_search_bell(grid));
            s.values.emplace_back("bell-kcbs closed form", tsirelson);
            break;
        case BoundTarget::kTemporalKcbs:
            s.results.push_back(temporal_bound_kcbs(grid));
            s.values.emplace_back("temporal-kcbs closed form", tsirelson);
            break;
        case BoundTarget::kContextualKcbs:
            s.results.push_back(contextual_bound_kcbs({o.seesaw_iterations, o.seesaw_restarts, o.tolerance}));
            s.values.emplace_back("contextual-kcbs closed form", 5 - 4 * std::sqrt(5.0));
            break;
        case BoundTarget::kPentagonLg: {
            const std::vector<double> grid_theta = default_theta_grid();
            const PentagonScan scan = pentagon_scan(grid_theta);
            s.results.push_back(scan.pairwise);
            s.results.push_back(scan.invasive);
            if (scan.pairwise_at_reference) {
                s.values.emplace_back("pairwise at cos(theta) = -3/4", *scan.pairwise_at_reference);
            }
            if (scan.invasive_at_reference) {
                s.values.emplace_back("invasive at cos(theta) = -3/4", *scan.invasive_at_reference);
            }
            s.values.emplace_back("reference value", scan.reference_value);
            s.notes.push_back(scan.note);
            break;
        }
    }
}

}  // namespace

extern "C" {

const char *qs_version(void) {
    return "0.1.0";
}

const char *qs_last_error(void) {
    return g_last_error.c_str();
}

const char *qs_status_name(qs_status status) {
    switch (status) {
        case QS_OK:
            return "ok";
        case QS_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QS_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case QS_ERR_NOT_HERMITIAN:
            return "not hermitian";
        case QS_ERR_PARSE:
            return "parse error";
        case QS_ERR_IO:
            return "i/o error";
        case QS_ERR_NOT_CONVERGED:
            return "not converged";
        case QS_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void qs_string_free(char *s) {
    std::free(s);
}

qs_status qs_parse_method(const char *name, qs_method *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = static_cast<qs_method>(static_cast<int>(parse_method(name)));
    });
}

qs_status qs_parse_format(const char *name, qs_format *out) {
    return guarded([&] {
        need(name, "name");
        need(out, "out");
        *out = static_cast<qs_format>(static_cast<int>(parse_format(name)));
    });
}

qs_status qs_parse_angle(const char *text, double *out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = parse_angle(text);
    });
}

qs_status qs_state_from_literal(const char *literal, qs_state **out) {
    return guarded([&] {
        need(literal, "literal");
        need(out, "out");
        *out = new qs_state{parse_state_literal(literal)};
    });
}

qs_status qs_state_random(size_t qubits, uint64_t seed, qs_state **out) {
    return guarded([&] {
        need(out, "out");
        *out = new qs_state{random_pure_state(qubits, seed)};
    });
}

qs_status qs_state_qubits(const qs_state *state, size_t *out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        *out = state->value.qubits();
    });
}

void qs_state_free(qs_state *state) {
    delete state;
}

qs_status qs_evaluate(qs_inequality which, const qs_state *state, qs_method method, double theta,
                      const qs_noise *noise, qs_report **out) {
    return guarded([&] {
        need(state, "state");
        need(out, "out");
        std::optional<NoiseModel> model;
        if (noise != nullptr) {
            model = NoiseModel{noise->state_depolarizing_p, noise->block_visibility_v};
        }
        const Method m = to_method(method);
        const QuantumState &rho = state->value;
        InequalityReport r;
        switch (which) {
            case QS_INEQ_PM:
                r = eval_pm(rho, m, model);
                break;
            case QS_INEQ_KCBS:
                r = eval_kcbs_temporal(rho, theta, m, model);
                break;
            case QS_INEQ_PENTAGON:
                r = eval_pentagon_lg(rho, theta, m, model);
                break;
            case QS_INEQ_PENTAGON_INVASIVE:
                r = eval_pentagon_lg_invasive(rho, theta);
                break;
            case QS_INEQ_BELL:
                r = eval_transformed_bell(rho, m, model);
                break;
            default:
                fail(ErrorCode::kInvalidArgument, "unknown inequality value");
        }
        *out = new qs_report{std::move(r)};
    });
}

qs_status qs_report_sum(const qs_report *report, double *out) {
    return guarded([&] {
        need(report, "report");
        need(out, "out");
        *out = report->value.sum;
    });
}

qs_status qs_report_violated(const qs_report *report, int *out) {
    return guarded([&] {
        need(report, "report");
        need(out, "out");
        *out = report->value.violated ? 1 : 0;
    });
}

qs_status qs_report_term_count(const qs_report *report, size_t *out) {
    return guarded([&] {
        need(report, "report");
        need(out, "out");
        *out = report->value.terms.size();
    });
}

qs_status qs_report_term_value(const qs_report *report, size_t index, double *out) {
    return guarded([&] {
        need(report, "report");
        need(out, "out");
        require(index < report->value.terms.size(), ErrorCode::kInvalidArgument, "term index out of range");
        *out = report->value.terms[index].value;
    });
}

qs_status qs_report_render(const qs_report *report, qs_format format, char **out) {
    return guarded([&] {
        need(report, "report");
        need(out, "out");
        *out = dup_string(emit(report->value, to_format(format)));
    });
}

qs_status qs_report_from_json(const char *text, qs_report **out) {
    return guarded([&] {
        need(text, "text");
        need(out, "out");
        *out = new qs_report{parse_report_json(text)};
    });
}

void qs_report_free(qs_report *report) {
    delete report;
}

void qs_bounds_options_default(qs_bounds_options *options) {
    if (options != nullptr) {
        *options = kDefaultBounds;
    }
}

qs_status qs_bounds(const char *target, const qs_bounds_options *options, qs_summary **out) {
    return guarded([&] {
        need(target, "target");
        need(out, "out");
        const qs_bounds_options &o = options != nullptr ? *options : kDefaultBounds;
        SummaryReport s;
        s.title = "bounds";
        const std::string name(target);
        if (name == "all") {
            for (auto t : {BoundTarget::kBellKcbs, BoundTarget::kTemporalKcbs, BoundTarget::kContextualKcbs,
                           BoundTarget::kPentagonLg}) {
                add_target(s, t, o);
            }
        } else {
            add_target(s, parse_target(name), o);
        }
        SummaryReport full = make_summary(s.title, std::move(s.results));
        full.values = std::move(s.values);
        full.notes = std::move(s.notes);
        *out = new qs_summary{std::move(full)};
    });
}

qs_status qs_fit_visibility(const char *table_path, int n_blocks, qs_summary **out) {
    return guarded([&] {
        need(table_path, "table_path");
        need(out, "out");
        require(n_blocks >= 0, ErrorCode::kInvalidArgument, "n_blocks must be >= 0");
        const auto rows = read_experimental_table(table_path);
        const auto samples = samples_from_table(rows, n_blocks);
        const double v = fit_visibility(samples);
        double theory_sum = 0.0;
        double measured_sum = 0.0;
        for (const auto &r : rows) {
            theory_sum += r.coefficient * r.theory;
            measured_sum += r.coefficient * r.experimental;
        }
        SummaryReport s;
        s.title = "fit";
        s.values = {{"visibility", v},
                    {"blocks", static_cast<double>(n_blocks)},
                    {"residual", visibility_objective(samples, v)},
                    {"theory sum", theory_sum},
                    {"model sum", apply_visibility(theory_sum, n_blocks, v)},
                    {"measured sum", measured_sum}};
        s.notes.push_back("per-block visibility is a phenomenological model of contrast loss, not a physical "
                          "noise model");
        *out = new qs_summary{std::move(s)};
    });
}

qs_status qs_correlate(const char *spec_json, const qs_state *state, qs_summary **out) {
    return guarded([&] {
        need(spec_json, "spec_json");
        need(state, "state");
        need(out, "out");
        const TemporalCorrelationSpec spec = parse_spec_json(spec_json);
        const QuantumState &rho = state->value;
        SummaryReport s;
        s.title = "correlator";
        for (Method m : {Method::kScattering, Method::kDirect, Method::kSequential}) {
            s.values.emplace_back(std::string(method_name(m)), evaluate_correlator(rho, spec, m));
        }
        s.values.emplace_back("probe sigma_y", probe_sigma_y(scattering_output(rho, spec)));
        *out = new qs_summary{std::move(s)};
    });
}

qs_status qs_summary_converged(const qs_summary *summary, int *out) {
    return guarded([&] {
        need(summary, "summary");
        need(out, "out");
        *out = summary->value.converged ? 1 : 0;
    });
}

qs_status qs_summary_render(const qs_summary *summary, qs_format format, char **out) {
    return guarded([&] {
        need(summary, "summary");
        need(out, "out");
        *out = dup_string(emit(summary->value, to_format(format)));
    });
}

void qs_summary_free(qs_summary *summary) {
    delete summary;
}

qs_status qs_selftest(const char *data_dir, char **text, int *all_passed) {
    return guarded([&] {
        need(text, "text");
        need(all_passed, "all_passed");
        const SelftestReport r = run_selftest(data_dir != nullptr ? data_dir : QSCATTER_DEFAULT_DATA_DIR);
        *text = dup_string(r.text());
        *all_passed = r.all_passed() ? 1 : 0;
    });
}

const char *qs_default_data_dir(void) {
    return QSCATTER_DEFAULT_DATA_DIR;
}

}  // extern "C"
