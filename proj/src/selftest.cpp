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

#include "qscatter/selftest.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <functional>
#include <numbers>

#include "qscatter/bounds.hpp"
#include "qscatter/error.hpp"
#include "qscatter/inequalities.hpp"
#include "qscatter/noise.hpp"
#include "qscatter/report.hpp"
#include "qscatter/sequential.hpp"

namespace qscatter {

namespace {

constexpr double kPi = std::numbers::pi;

std::string sci(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 2);
    return std::string(buf, res.ptr);
}

const std::array<Method, 3> kMethods{Method::kScattering, Method::kDirect, Method::kSequential};

CriterionResult pm_state_independence() {
    CriterionResult c{1, "PM sum is 6 for every state", true, {}};
    const std::array<double, 6> expected{1, 1, 1, 1, 1, -1};
    double worst_sum = 0.0;
    double worst_term = 0.0;
    int states = 0;
    auto check = [&](const QuantumState &rho) {
        ++states;
        for (Method m : kMethods) {
            const InequalityReport r = eval_pm(rho, m);
            worst_sum = std::max(worst_sum, std::abs(r.sum - 6.0));
            for (std::size_t k = 0; k < r.terms.size(); ++k) {
                worst_term = std::max(worst_term, std::abs(r.terms[k].value - expected[k]));
            }
            if (!r.violated) {
                c.passed = false;
            }
        }
    };
    for (std::uint64_t s = 0; s < 100; ++s) {
        check(random_pure_state(2, 1000 + s));
    }
    check(maximally_mixed(2));
    c.passed = c.passed && worst_sum <= 1e-9 && worst_term <= 1e-9;
    c.detail = std::to_string(states) + " states x 3 methods, max |sum - 6| = " + sci(worst_sum) +
               ", max term error vs (1,1,1,1,1,-1) = " + sci(worst_term);
    return c;
}

CriterionResult scattering_equivalence() {
    CriterionResult c{2, "scattering circuit equals direct trace", false, {}};
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const TemporalCorrelationSpec spec = random_spec(rng, 2, 3);
        const QuantumState rho = random_test_state(spec.system_qubits(), 5000 + static_cast<std::uint64_t>(i));
        worst = std::max(worst, std::abs(correlator_scattering(rho, spec) - correlator_direct(rho, spec)));
    }
    c.passed = worst < 1e-10;
    c.detail = "200 random specs (N <= 2, n <= 3), max difference " + sci(worst);
    return c;
}

CriterionResult sequential_theorem() {
    CriterionResult c{3, "sequential correlator equals symmetrized two-time formula", false, {}};
    std::mt19937_64 rng(77);
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const QuantumState rho = random_test_state(1, 9000 + i);
        const Observable x(random_dichotomic(2, rng), "X");
        const Observable y(random_dichotomic(2, rng), "Y");
        const std::array<Observable, 2> pair{x, y};
        worst = std::max(worst, std::abs(correlator_sequential(rho, pair) - two_time_formula(rho, x, y)));
    }
    c.passed = worst <= 1e-10;
    c.detail = "100 states and observable pairs, max difference " + sci(worst);
    return c;
}

CriterionResult transformed_bell() {
    CriterionResult c{4, "transformed Bell violation on Phi+", true, {}};
    const double term = std::cos(4 * kPi / 5);
    double worst_term = 0.0;
    double worst_sum = 0.0;
    double worst_constraint = 0.0;
    for (Method m : kMethods) {
        const InequalityReport r = eval_transformed_bell(bell_phi_plus(), m);
        for (const auto &t : r.terms) {
            worst_term = std::max(worst_term, std::abs(t.value - term));
        }
        for (const auto &t : r.constraints) {
            worst_constraint = std::max(worst_constraint, std::abs(t.value - 1.0));
        }
        worst_sum = std::max(worst_sum, std::abs(r.sum - 5 * term));
        c.passed = c.passed && r.violated && r.classical_bound == -3.0 && r.constraints.size() == 5 &&
                   r.constraints_satisfied.value_or(false);
    }
    c.passed = c.passed && worst_term <= 1e-9 && worst_sum <= 1e-8 && worst_constraint <= 1e-9;
    c.detail = "3 methods, terms " + format_fixed(term) + " (max error " + sci(worst_term) + "), sum " +
               format_fixed(5 * term) + " (max error " + sci(worst_sum) + "), max |<AjBj> - 1| = " +
               sci(worst_constraint) + ", violated vs -3";
    return c;
}

CriterionResult bound_recovery(std::string &log) {
    CriterionResult c{5, "Bell, temporal and contextual bounds", false, {}};
    const double tsirelson = -5 * std::cos(kPi / 5);
    const double contextual = 5 - 4 * std::sqrt(5.0);
    const BoundResult bell = tsirelson_search_bell();
    const BoundResult temporal = temporal_bound_kcbs();
    const BoundResult ctx = contextual_bound_kcbs();
    const double gap = ctx.optimum - temporal.optimum;
    c.passed = std::abs(bell.optimum - tsirelson) <= 1e-5 && std::abs(temporal.optimum - bell.optimum) <= 1e-4 &&
               std::abs(ctx.optimum - contextual) <= 1e-4 && gap > 0.05 && bell.converged && temporal.converged &&
               ctx.converged;
    c.detail = "bell " + format_fixed(bell.optimum) + ", temporal " + format_fixed(temporal.optimum) +
               ", contextual " + format_fixed(ctx.optimum) + ", gap " + format_fixed(gap);
    log += emit_json(make_summary("bounds", {bell, temporal, ctx}));
    return c;
}

CriterionResult temporal_closed_form(std::string &log) {
    CriterionResult c{6, "temporal KCBS sum is 1 + 4 cos(theta)", false, {}};
    double worst = 0.0;
    double lowest = 1e300;
    const std::array<QuantumState, 2> states{maximally_mixed(1), random_pure_state(1, 31)};
    for (int k = 0; k < 50; ++k) {
        const double theta = 2 * kPi * k / 49;
        for (const auto &rho : states) {
            const InequalityReport r = eval_kcbs_temporal(rho, theta, Method::kSequential);
            worst = std::max(worst, std::abs(r.sum - (1 + 4 * std::cos(theta))));
            lowest = std::min(lowest, r.sum);
        }
    }
    c.passed = worst <= 1e-9 && lowest >= -3.0 - 1e-9;
    const std::vector<double> grid = default_theta_grid();
    const PentagonScan scan = pentagon_scan(grid);
    c.detail = "50 angles, max error " + sci(worst) + ", minimum " + format_fixed(lowest) +
               " (bound -3 attained, not violated); pentagon: " + scan.note;
    log += emit_table(eval_kcbs_temporal(maximally_mixed(1), kPi, Method::kSequential));
    return c;
}

CriterionResult pentagon_readings(std::string &log) {
    CriterionResult c{7, "pentagon scan minima and reference point", false, {}};
    const std::vector<double> grid = default_theta_grid();
    const PentagonScan scan = pentagon_scan(grid);
    const double invasive_ref = 4 * -0.75 + 3 * 0.5625 + 2 * -0.421875 + 0.31640625;
    const bool minima = std::abs(scan.pairwise.optimum + 2) <= 1e-6 && std::abs(scan.invasive.optimum + 2) <= 1e-6 &&
                        std::abs(scan.pairwise.argument.angles.at(0) - kPi) <= 1e-6 &&
                        std::abs(std::cos(scan.invasive.argument.angles.at(0)) + 1) <= 1e-6;
    const bool reference = scan.pairwise_at_reference && scan.invasive_at_reference &&
                           std::abs(*scan.pairwise_at_reference + 0.5) <= 1e-6 &&
                           std::abs(*scan.invasive_at_reference - invasive_ref) <= 1e-6;
    const bool flagged = !scan.reference_reproduced && scan.note.find("NOT reproduced") != std::string::npos;
    c.passed = minima && reference && flagged;
    c.detail = "minima " + format_fixed(scan.pairwise.optimum) + " / " + format_fixed(scan.invasive.optimum) +
               ", at cos(theta) = -3/4: " + (scan.pairwise_at_reference ? format_fixed(*scan.pairwise_at_reference) : "n/a") +
               " / " + (scan.invasive_at_reference ? format_fixed(*scan.invasive_at_reference) : "n/a") +
               ", -9/4 flagged as not reproduced: " + (flagged ? "yes" : "no");
    log += emit_json(make_summary("pentagon", {scan.pairwise, scan.invasive}));
    return c;
}

CriterionResult visibility_fit(const std::string &data_dir) {
    CriterionResult c{8, "visibility fit to the shipped tables", false, {}};
    const auto table1 = read_experimental_table(data_dir + "/table1_pm.txt");
    const auto samples1 = samples_from_table(table1, kPmBlocks);
    const double v1 = fit_visibility(samples1);
    const double model_pm = 6 * std::pow(v1, 3);

    const auto table2 = read_experimental_table(data_dir + "/table2_bell.txt");
    const double v2 = fit_visibility(samples_from_table(table2, kBellBlocks));
    const double model_bell = 5 * -0.809 * v2;

    std::vector<VisibilitySample> synthetic;
    for (int n = 1; n <= 3; ++n) {
        for (double ideal : {1.0, -1.0, -0.809017, 0.5}) {
            synthetic.push_back({ideal, n, apply_visibility(ideal, n, 0.9)});
        }
    }
    const double v0 = fit_visibility(synthetic);
    c.passed = std::abs(model_pm - 4.667) <= 0.15 && std::abs(v0 - 0.9) <= 1e-5;
    c.detail = "table I v = " + format_fixed(v1) + ", 6v^3 = " + format_fixed(model_pm, 3) +
               " vs 4.667; table II v = " + format_fixed(v2) + ", model sum " + format_fixed(model_bell, 3) +
               " vs -3.755 (informational); synthetic v = 0.9 recovered as " + format_fixed(v0);
    return c;
}

std::vector<CriterionResult> run_criteria(const std::string &data_dir, std::string &log) {
    std::vector<std::function<CriterionResult()>> checks{
        pm_state_independence,
        scattering_equivalence,
        sequential_theorem,
        transformed_bell,
        [&] { return bound_recovery(log); },
        [&] { return temporal_closed_form(log); },
        [&] { return pentagon_readings(log); },
        [&] { return visibility_fit(data_dir); },
    };
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        try {
            out.push_back(checks[i]());
        } catch (const Error &e) {
            out.push_back({static_cast<int>(i + 1), "criterion " + std::to_string(i + 1), false,
                           std::string("error: ") + e.what()});
        }
    }
    log += emit_csv(eval_pm(maximally_mixed(2), Method::kDirect));
    log += emit_csv(eval_transformed_bell(bell_phi_plus(), Method::kScattering));
    return out;
}

}  // namespace

bool SelftestReport::all_passed() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult &c) { return c.passed; });
}

std::string SelftestReport::text() const {
    std::string out;
    for (const auto &c : criteria) {
        out += std::string(c.passed ? "PASS" : "FAIL") + "  [" + std::to_string(c.id) + "] " + c.title + ": " +
               c.detail + "\n";
    }
    out += all_passed() ? "all criteria passed\n" : "SOME CRITERIA FAILED\n";
    return out;
}

SelftestReport run_selftest(const std::string &data_dir) {
    std::string first_log;
    std::string second_log;
    SelftestReport report;
    report.criteria = run_criteria(data_dir, first_log);
    const std::vector<CriterionResult> again = run_criteria(data_dir, second_log);

    std::string first_text;
    std::string second_text;
    for (std::size_t i = 0; i < report.criteria.size(); ++i) {
        first_text += report.criteria[i].detail + "\n";
        second_text += again[i].detail + "\n";
    }
    CriterionResult det{9, "repeated runs are byte-identical", false, {}};
    det.passed = first_text == second_text && first_log == second_log;
    det.detail = "two full runs, " + std::to_string(first_text.size() + first_log.size()) + " bytes compared, " +
                 (det.passed ? "identical" : "DIFFERENT");
    report.criteria.push_back(det);
    return report;
}

ComplexMatrix random_dichotomic(std::size_t dim, std::mt19937_64 &rng) {
    const ComplexMatrix v = random_unitary(dim, rng);
    std::vector<double> signs(dim);
    // Signatures include +-I, which are dichotomic too.
    const std::size_t negatives = std::uniform_int_distribution<std::size_t>(0, dim)(rng);
    for (std::size_t i = 0; i < dim; ++i) {
        signs[i] = i < dim - negatives ? 1.0 : -1.0;
    }
    const ComplexMatrix o = matmul(matmul(v, ComplexMatrix::diagonal(signs)), adjoint(v));
    return scale(add(o, adjoint(o)), 0.5);
}

TemporalCorrelationSpec random_spec(std::mt19937_64 &rng, std::size_t max_qubits, std::size_t max_slots) {
    std::uniform_int_distribution<std::size_t> qubits(1, max_qubits);
    std::uniform_int_distribution<std::size_t> count(1, max_slots);
    const std::size_t n = qubits(rng);
    const std::size_t slots = count(rng);
    const std::size_t dim = std::size_t{1} << n;
    std::vector<TimeSlot> out;
    for (std::size_t k = 0; k < slots; ++k) {
        const ComplexMatrix o = random_dichotomic(dim, rng);
        const ComplexMatrix u = random_unitary(dim, rng);
        out.push_back(TimeSlot::joint(o, u, "O" + std::to_string(k + 1)));
    }
    return TemporalCorrelationSpec(n, std::move(out));
}

QuantumState random_test_state(std::size_t qubits, std::uint64_t seed) {
    if (seed % 2 == 0) {
        return random_pure_state(qubits, seed);
    }
    std::mt19937_64 rng(seed);
    const double w = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    const ComplexMatrix a = random_pure_state(qubits, seed).density();
    const ComplexMatrix b = random_pure_state(qubits, seed + 7919).density();
    return QuantumState::mixed(add(scale(a, w), scale(b, 1.0 - w)));
}

}  // namespace qscatter
