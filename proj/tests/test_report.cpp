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

#include <clocale>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include "qscatter/error.hpp"
#include "qscatter/report.hpp"

using namespace qscatter;

namespace {

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

}  // namespace

TEST_CASE("format_fixed") {
    CHECK(format_fixed(1.0) == "1.000000");
    CHECK(format_fixed(-4.0450849718747) == "-4.045085");
    CHECK(format_fixed(-0.0) == "0.000000");
    CHECK(format_fixed(-1e-9) == "0.000000");
    CHECK(format_fixed(2.5, 2) == "2.50");
    CHECK(format_fixed(1234567.125, 1) == "1234567.1");
    // a comma-decimal locale, if installed, changes nothing
    const char *old = std::setlocale(LC_NUMERIC, nullptr);
    const std::string saved = old ? old : "C";
    if (std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr) {
        CHECK(format_fixed(0.5) == "0.500000");
    }
    std::setlocale(LC_NUMERIC, saved.c_str());
}

TEST_CASE("formats") {
    CHECK(parse_format("csv") == Format::kCsv);
    CHECK(format_name(Format::kTable) == "table");
    CHECK_THROWS_AS(parse_format("xml"), Error);
}

TEST_CASE("PM csv") {
    const InequalityReport r = eval_pm(basis_state(2, "00"), Method::kDirect);
    const auto lines = lines_of(emit_csv(r));
    REQUIRE(lines.size() == 7 + 1);
    CHECK(lines[0] == "inequality,term,theory,value,method");
    CHECK(lines[1] == "pm,A*B*C,1.000000,1.000000,direct");
    CHECK(lines[6] == "pm,gamma*c*C,-1.000000,-1.000000,direct");
    CHECK(lines[7] == "pm,SUM,4.000000,6.000000,direct");
    CHECK(emit(r, Format::kCsv) == emit_csv(r));

    InequalityReport empty = r;
    empty.terms.clear();
    for (Format f : {Format::kCsv, Format::kJson, Format::kTable}) {
        try {
            emit(empty, f);
            FAIL("an empty report must be refused");
        } catch (const Error &e) {
            CHECK(e.code() == ErrorCode::kInvalidArgument);
        }
    }
}

TEST_CASE("inequality JSON") {
    const InequalityReport bell = eval_transformed_bell(bell_phi_plus(), Method::kScattering, NoiseModel{0.1, 0.95});
    const std::string text = emit_json(bell);
    CHECK(parse_report_json(text) == bell);
    const auto j = nlohmann::json::parse(text);
    CHECK(j.at("inequality") == "bell");
    CHECK(j.at("direction") == "at_least");
    CHECK(j.at("terms").size() == 5);
    CHECK(j.at("constraints").size() == 5);
    CHECK(j.at("noise").at("block_visibility_v") == 0.95);

    const InequalityReport pm = eval_pm(basis_state(2, "00"), Method::kSequential);
    const auto jp = nlohmann::json::parse(emit_json(pm));
    CHECK(jp.at("noise").is_null());
    CHECK(jp.at("constraints_satisfied").is_null());
    CHECK(jp.at("violated") == true);
    CHECK(parse_report_json(emit_json(pm)) == pm);

    const InequalityReport pent = eval_pentagon_lg(maximally_mixed(1), std::acos(-0.75), Method::kDirect);
    CHECK(parse_report_json(emit_json(pent)) == pent);

    CHECK_THROWS_AS(parse_report_json("not json"), Error);
    CHECK_THROWS_AS(parse_report_json("{}"), Error);
}

TEST_CASE("tables") {
    const std::string t = emit_table(eval_kcbs_temporal(basis_state(1, "0"), std::acos(-0.75), Method::kDirect));
    CHECK(t.find("SUM") != std::string::npos);
    CHECK(t.find("-2.000000") != std::string::npos);
    CHECK(t.find("not violated") != std::string::npos);
}

TEST_CASE("summary reports") {
    GridSearchOptions o;
    o.resolution = 8;
    SummaryReport s = make_summary("bounds", {temporal_bound_kcbs(o)});
    s.values.emplace_back("closed form", -4.045084971874737);
    s.notes.emplace_back("a note");
    CHECK(s.converged);
    CHECK(parse_summary_json(emit_json(s)) == s);

    const auto lines = lines_of(emit_csv(s));
    CHECK(lines[0] == "item,variant,quantity,value");
    CHECK(lines[1] == "temporal-kcbs,,optimum,-4.045085");
    CHECK(lines.back() == "bounds,,closed form,-4.045085");
    CHECK(emit_table(s).find("temporal-kcbs") != std::string::npos);

    GridSearchOptions coarse;
    coarse.resolution = 1;
    CHECK_FALSE(make_summary("x", {temporal_bound_kcbs(coarse), temporal_bound_kcbs(o)}).converged);
    CHECK_THROWS_AS(parse_summary_json("[1, 2]"), Error);
}
