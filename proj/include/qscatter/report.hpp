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

// Report emission. All number formatting here is locale independent.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qscatter/bounds.hpp"
#include "qscatter/inequalities.hpp"

namespace qscatter {

enum class Format { kJson, kCsv, kTable };

std::string_view format_name(Format f);
/// Accepts "json", "csv" and "table".
Format parse_format(std::string_view name);

/// Fixed-point with `decimals` places, '.' separator, no negative zero.
std::string format_fixed(double value, int decimals = 6);

/**
 * CSV: header `inequality,term,theory,value,method`, one row per term
 * (theory = noiseless value), then `inequality,SUM,<bound>,<sum>,<method>`.
 * Throws kInvalidArgument for a report without terms.
 */
std::string emit_csv(const InequalityReport &report);
std::string emit_json(const InequalityReport &report);
std::string emit_table(const InequalityReport &report);
std::string emit(const InequalityReport &report, Format format);

/// Inverse of emit_json; parse_report_json(emit_json(r)) == r.
InequalityReport parse_report_json(std::string_view text);

/// Output of the commands that do not evaluate an inequality: optimizer
/// results, visibility fits, single correlators.
struct SummaryReport {
    std::string title;
    std::vector<BoundResult> results;
    std::vector<std::pair<std::string, double>> values;
    std::vector<std::string> notes;
    bool converged = true;

    friend bool operator==(const SummaryReport &, const SummaryReport &) = default;
};

/// Every result's `converged` flag, and-ed.
SummaryReport make_summary(std::string title, std::vector<BoundResult> results);

std::string emit_json(const SummaryReport &report);
/// CSV: header `item,variant,quantity,value`.
std::string emit_csv(const SummaryReport &report);
std::string emit_table(const SummaryReport &report);
std::string emit(const SummaryReport &report, Format format);

SummaryReport parse_summary_json(std::string_view text);

}  // namespace qscatter
