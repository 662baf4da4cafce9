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

// Links only the shared library.

#include <cmath>
#include <numbers>
#include <string>

#include <doctest.h>

#include "qscatter/qscatter.h"

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    qs_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("status names and version") {
    CHECK(std::string(qs_version()) == "0.1.0");
    CHECK(std::string(qs_status_name(QS_OK)) == "ok");
    CHECK(std::string(qs_status_name(QS_ERR_PARSE)) == "parse error");
    qs_method m{};
    CHECK(qs_parse_method("direct", &m) == QS_OK);
    CHECK(m == QS_METHOD_DIRECT);
    CHECK(qs_parse_method("nope", &m) == QS_ERR_INVALID_ARGUMENT);
    CHECK(std::string(qs_last_error()).find("nope") != std::string::npos);
    CHECK(qs_parse_method(nullptr, &m) == QS_ERR_INVALID_ARGUMENT);
    qs_format f{};
    CHECK(qs_parse_format("json", &f) == QS_OK);
    CHECK(f == QS_FORMAT_JSON);
    double theta = 0;
    CHECK(qs_parse_angle("theta=acos(-0.75)", &theta) == QS_OK);
    CHECK(theta == doctest::Approx(std::acos(-0.75)));
    CHECK(qs_parse_angle("acos(", &theta) == QS_ERR_PARSE);
}

TEST_CASE("states and evaluation") {
    qs_state *s = nullptr;
    CHECK(qs_state_from_literal("bogus", &s) == QS_ERR_PARSE);
    CHECK(s == nullptr);
    REQUIRE(qs_state_from_literal("00", &s) == QS_OK);
    size_t q = 0;
    CHECK(qs_state_qubits(s, &q) == QS_OK);
    CHECK(q == 2);

    qs_report *r = nullptr;
    REQUIRE(qs_evaluate(QS_INEQ_PM, s, QS_METHOD_SCATTERING, 0.0, nullptr, &r) == QS_OK);
    double sum = 0;
    CHECK(qs_report_sum(r, &sum) == QS_OK);
    CHECK(sum == doctest::Approx(6.0));
    int violated = 0;
    CHECK(qs_report_violated(r, &violated) == QS_OK);
    CHECK(violated == 1);
    size_t n = 0;
    CHECK(qs_report_term_count(r, &n) == QS_OK);
    CHECK(n == 6);
    double v = 0;
    CHECK(qs_report_term_value(r, 5, &v) == QS_OK);
    CHECK(v == doctest::Approx(-1.0));
    CHECK(qs_report_term_value(r, 6, &v) == QS_ERR_INVALID_ARGUMENT);

    char *csv = nullptr;
    REQUIRE(qs_report_render(r, QS_FORMAT_CSV, &csv) == QS_OK);
    CHECK(take(csv).find("pm,SUM,4.000000,6.000000,scattering") != std::string::npos);

    char *json = nullptr;
    REQUIRE(qs_report_render(r, QS_FORMAT_JSON, &json) == QS_OK);
    const std::string text = take(json);
    qs_report *back = nullptr;
    REQUIRE(qs_report_from_json(text.c_str(), &back) == QS_OK);
    char *again = nullptr;
    REQUIRE(qs_report_render(back, QS_FORMAT_JSON, &again) == QS_OK);
    CHECK(take(again) == text);
    CHECK(qs_report_from_json("{", &back) == QS_ERR_PARSE);
    qs_report_free(back);
    qs_report_free(r);

    // wrong dimension for KCBS
    qs_report *bad = nullptr;
    CHECK(qs_evaluate(QS_INEQ_KCBS, s, QS_METHOD_DIRECT, 1.0, nullptr, &bad) == QS_ERR_DIMENSION_MISMATCH);
    CHECK(bad == nullptr);
    const qs_noise invalid{2.0, 1.0};
    CHECK(qs_evaluate(QS_INEQ_PM, s, QS_METHOD_DIRECT, 0.0, &invalid, &bad) == QS_ERR_INVALID_ARGUMENT);
    CHECK(qs_evaluate(QS_INEQ_PM, nullptr, QS_METHOD_DIRECT, 0.0, nullptr, &bad) == QS_ERR_INVALID_ARGUMENT);
    qs_state_free(s);

    qs_state *bell = nullptr;
    REQUIRE(qs_state_from_literal("bell", &bell) == QS_OK);
    const qs_noise noise{0.0, 0.9};
    REQUIRE(qs_evaluate(QS_INEQ_BELL, bell, QS_METHOD_DIRECT, 0.0, &noise, &r) == QS_OK);
    CHECK(qs_report_sum(r, &sum) == QS_OK);
    CHECK(sum == doctest::Approx(-0.9 * 5 * std::cos(std::numbers::pi / 5)));
    qs_report_free(r);
    qs_state_free(bell);

    qs_state *rnd = nullptr;
    REQUIRE(qs_state_random(1, 3, &rnd) == QS_OK);
    REQUIRE(qs_evaluate(QS_INEQ_PENTAGON_INVASIVE, rnd, QS_METHOD_SEQUENTIAL, std::numbers::pi, nullptr, &r) == QS_OK);
    CHECK(qs_report_sum(r, &sum) == QS_OK);
    CHECK(sum == doctest::Approx(-2.0));
    qs_report_free(r);
    qs_state_free(rnd);

    // freeing null is harmless
    qs_state_free(nullptr);
    qs_report_free(nullptr);
    qs_summary_free(nullptr);
    qs_string_free(nullptr);
}

TEST_CASE("bounds, fit and correlate") {
    qs_bounds_options o;
    qs_bounds_options_default(&o);
    CHECK(o.grid_resolution == 12);
    qs_summary *s = nullptr;
    REQUIRE(qs_bounds("bell-kcbs", &o, &s) == QS_OK);
    int converged = 0;
    CHECK(qs_summary_converged(s, &converged) == QS_OK);
    CHECK(converged == 1);
    char *csv = nullptr;
    REQUIRE(qs_summary_render(s, QS_FORMAT_CSV, &csv) == QS_OK);
    CHECK(take(csv).find("bell-kcbs,,optimum,-4.045085") != std::string::npos);
    qs_summary_free(s);
    CHECK(qs_bounds("nothing", &o, &s) == QS_ERR_INVALID_ARGUMENT);

    const std::string table = std::string(qs_default_data_dir()) + "/table2_bell.txt";
    REQUIRE(qs_fit_visibility(table.c_str(), 1, &s) == QS_OK);
    char *t = nullptr;
    REQUIRE(qs_summary_render(s, QS_FORMAT_JSON, &t) == QS_OK);
    CHECK(take(t).find("visibility") != std::string::npos);
    qs_summary_free(s);
    CHECK(qs_fit_visibility("/nonexistent/table.txt", 1, &s) == QS_ERR_IO);

    qs_state *zero = nullptr;
    REQUIRE(qs_state_from_literal("0", &zero) == QS_OK);
    const char *spec = R"({"system_qubits": 1, "slots": [{"observable": ["Z"]}, {"observable": ["X"]}]})";
    REQUIRE(qs_correlate(spec, zero, &s) == QS_OK);
    REQUIRE(qs_summary_render(s, QS_FORMAT_CSV, &t) == QS_OK);
    const std::string out = take(t);
    CHECK(out.find("scattering,0.000000") != std::string::npos);
    qs_summary_free(s);
    CHECK(qs_correlate("{}", zero, &s) == QS_ERR_PARSE);
    qs_state_free(zero);
}
