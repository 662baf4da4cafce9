/*
 * Copyright 2026 The qscatter Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libqscatter. Every call returns a qs_status; on failure
 * qs_last_error() describes the problem (per thread, valid until the next
 * call on that thread). Objects are opaque and released by their *_free
 * function; strings returned through char** are released by qs_string_free.
 */

#ifndef QSCATTER_QSCATTER_H_
#define QSCATTER_QSCATTER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(QSCATTER_BUILDING_LIBRARY)
#define QS_API __attribute__((visibility("default")))
#else
#define QS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qs_status {
    QS_OK = 0,
    QS_ERR_INVALID_ARGUMENT = 1,
    QS_ERR_DIMENSION_MISMATCH = 2,
    QS_ERR_NOT_HERMITIAN = 3,
    QS_ERR_PARSE = 4,
    QS_ERR_IO = 5,
    QS_ERR_NOT_CONVERGED = 6,
    QS_ERR_INTERNAL = 7
} qs_status;

typedef enum qs_method { QS_METHOD_SCATTERING = 0, QS_METHOD_DIRECT = 1, QS_METHOD_SEQUENTIAL = 2 } qs_method;

typedef enum qs_format { QS_FORMAT_JSON = 0, QS_FORMAT_CSV = 1, QS_FORMAT_TABLE = 2 } qs_format;

typedef enum qs_inequality {
    QS_INEQ_PM = 0,
    QS_INEQ_KCBS = 1,
    QS_INEQ_PENTAGON = 2,
    QS_INEQ_PENTAGON_INVASIVE = 3,
    QS_INEQ_BELL = 4
} qs_inequality;

typedef struct qs_noise {
    double state_depolarizing_p;
    double block_visibility_v;
} qs_noise;

typedef struct qs_bounds_options {
    int grid_resolution;    /* Bell and temporal searches */
    int max_sweeps;
    int seesaw_iterations;  /* contextual search */
    int seesaw_restarts;
    double tolerance;
} qs_bounds_options;

typedef struct qs_state qs_state;
typedef struct qs_report qs_report;
typedef struct qs_summary qs_summary;

QS_API const char *qs_version(void);
QS_API const char *qs_last_error(void);
QS_API const char *qs_status_name(qs_status status);
QS_API void qs_string_free(char *s);

QS_API qs_status qs_parse_method(const char *name, qs_method *out);
QS_API qs_status qs_parse_format(const char *name, qs_format *out);
/* Radians; accepts expressions such as "pi/3" and "theta=acos(-0.75)". */
QS_API qs_status qs_parse_angle(const char *text, double *out);

/* "0", "01", "bell", "mixed:<n>", or a path to an amplitude file. */
QS_API qs_status qs_state_from_literal(const char *literal, qs_state **out);
QS_API qs_status qs_state_random(size_t qubits, uint64_t seed, qs_state **out);
QS_API qs_status qs_state_qubits(const qs_state *state, size_t *out);
QS_API void qs_state_free(qs_state *state);

/* theta is ignored by PM and Bell. noise may be NULL. The invasive pentagon
 * reading has no scattering variant and ignores method and noise. */
QS_API qs_status qs_evaluate(qs_inequality which, const qs_state *state, qs_method method, double theta,
                             const qs_noise *noise, qs_report **out);
QS_API qs_status qs_report_sum(const qs_report *report, double *out);
QS_API qs_status qs_report_violated(const qs_report *report, int *out);
QS_API qs_status qs_report_term_count(const qs_report *report, size_t *out);
QS_API qs_status qs_report_term_value(const qs_report *report, size_t index, double *out);
QS_API qs_status qs_report_render(const qs_report *report, qs_format format, char **out);
QS_API qs_status qs_report_from_json(const char *text, qs_report **out);
QS_API void qs_report_free(qs_report *report);

/* Fills the library defaults. */
QS_API void qs_bounds_options_default(qs_bounds_options *options);
/* target: "bell-kcbs", "temporal-kcbs", "contextual-kcbs", "pentagon-lg" or
 * "all". options may be NULL. */
QS_API qs_status qs_bounds(const char *target, const qs_bounds_options *options, qs_summary **out);
/* Fits a per-block visibility to an experimental table file. */
QS_API qs_status qs_fit_visibility(const char *table_path, int n_blocks, qs_summary **out);
/* Evaluates a JSON correlator spec on state by all three methods. */
QS_API qs_status qs_correlate(const char *spec_json, const qs_state *state, qs_summary **out);
QS_API qs_status qs_summary_converged(const qs_summary *summary, int *out);
QS_API qs_status qs_summary_render(const qs_summary *summary, qs_format format, char **out);
QS_API void qs_summary_free(qs_summary *summary);

/* Runs the acceptance suite. data_dir may be NULL for the built-in default. */
QS_API qs_status qs_selftest(const char *data_dir, char **text, int *all_passed);
QS_API const char *qs_default_data_dir(void);

#ifdef __cplusplus
}
#endif

#endif /* QSCATTER_QSCATTER_H_ */
