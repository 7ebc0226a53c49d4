/* Copyright 2026 The qse-toolkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the quantum-steering-ellipsoid toolkit.
 *
 * Conventions:
 *  - Two-qubit matrices are passed as 16 doubles, row-major, basis
 *    |00>, |01>, |10>, |11>; complex data travels as separate re/im arrays.
 *  - Sides are 0 (qubit A) and 1 (qubit B).
 *  - Every fallible call returns qse_status; on failure the out-parameters are
 *    untouched and qse_last_error() describes the problem (thread-local).
 *  - Objects created through qse_*_new/load/... must be released with the
 *    matching qse_*_free; strings returned through char** with qse_string_free.
 */

#ifndef QSE_QSE_H
#define QSE_QSE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qse_status {
  QSE_OK = 0,
  QSE_ERR_INVALID_STATE = 1,
  QSE_ERR_NOT_A_STATE = 2,
  QSE_ERR_NOT_TRACE_PRESERVING = 3,
  QSE_ERR_NOT_COMPLETELY_POSITIVE = 4,
  QSE_ERR_DOMAIN = 5,
  QSE_ERR_ZERO_PROBABILITY = 6,
  QSE_ERR_PRODUCT_DEGENERATE = 7,
  QSE_ERR_NOT_A_NEEDLE = 8,
  QSE_ERR_NOT_A_NEEDLE_STATE = 9,
  QSE_ERR_DECOMPOSITION_INFEASIBLE = 10,
  QSE_ERR_NOT_X_STATE = 11,
  QSE_ERR_PARSE = 12,
  QSE_ERR_IO = 13,
  QSE_ERR_NULL_ARGUMENT = 14,
  QSE_ERR_UNKNOWN = 15
} qse_status;

/* Channel taxonomy (see qse_channel_classify). */
typedef enum qse_channel_class {
  QSE_CHANNEL_UNITAL = 0,
  QSE_CHANNEL_COMPLETELY_DECOHERING = 1,
  QSE_CHANNEL_DISCORD_CREATING = 2
} qse_channel_class;

typedef struct qse_state qse_state;     /* two-qubit state */
typedef struct qse_channel qse_channel; /* CPTP qubit channel */

typedef struct qse_validation {
  double hermiticity_defect;
  double trace_defect;
  double min_eigenvalue;
  int passed;
} qse_validation;

/* axes[3*k + i] is component i of axis direction k; semiaxes are sorted
 * descending and dim counts the non-degenerate ones. */
typedef struct qse_ellipsoid {
  double center[3];
  double semiaxes[3];
  double axes[9];
  int dim;
} qse_ellipsoid;

typedef struct qse_steered {
  double probability;
  double bloch[3];
} qse_steered;

typedef struct qse_size {
  double length;
  double area;
  double volume;
} qse_size;

typedef struct qse_discord {
  double discord;              /* bits */
  double direction[3];         /* optimal measurement direction on B */
  double conditional_entropy;  /* bits */
  int analytic;                /* 1 when the X-state path was used */
} qse_discord;

typedef struct qse_needle_parts {
  double p[2];
  double a_bloch[2][3];
  double b_bloch[2][3];
  double residual;
} qse_needle_parts;

typedef struct qse_theorem {
  int eb_dim;
  int radial;
  double discord;
  int applicable;
  int decomposed;
  double decomposition_residual;
  double preparation_residual;
  int consistent;
} qse_theorem;

/* --- lifecycle / diagnostics ------------------------------------------- */

const char* qse_version(void);
const char* qse_status_name(qse_status s);
const char* qse_last_error(void); /* detail of the last failure on this thread */
void qse_string_free(char* s);
void qse_state_free(qse_state* s);
void qse_channel_free(qse_channel* c);

/* --- states -------------------------------------------------------------- */

qse_status qse_state_from_density(const double re[16], const double im[16],
                                  qse_state** out);
qse_status qse_state_from_theta(const double theta[16], qse_state** out);
qse_status qse_state_bell_diagonal(double c1, double c2, double c3,
                                   qse_state** out);
qse_status qse_state_from_json(const char* json_text, qse_state** out);
qse_status qse_state_load(const char* path, qse_state** out);

qse_status qse_state_density(const qse_state* s, double re[16], double im[16]);
qse_status qse_state_theta(const qse_state* s, double theta[16]);
qse_status qse_state_reduced_bloch(const qse_state* s, int side, double bloch[3]);
qse_status qse_validate_density(const double re[16], const double im[16],
                                qse_validation* out);

/* --- channels ------------------------------------------------------------ */

qse_status qse_channel_identity(qse_channel** out);
qse_status qse_channel_amplitude_damping(double p, qse_channel** out);
/* `count` operators, each 2x2 row-major (4 doubles per op in re / im). */
qse_status qse_channel_from_kraus(const double* re, const double* im,
                                  size_t count, qse_channel** out);
qse_status qse_channel_from_affine(const double m[9], const double t[3],
                                   qse_channel** out);
qse_status qse_channel_from_json(const char* json_text, qse_channel** out);
qse_status qse_channel_load(const char* path, qse_channel** out);

qse_status qse_channel_affine(const qse_channel* c, double m[9], double t[3]);
qse_status qse_channel_kraus_count(const qse_channel* c, size_t* count);
qse_status qse_channel_kraus(const qse_channel* c, size_t index, double re[4],
                             double im[4]);
qse_status qse_channel_compose(const qse_channel* first, const qse_channel* then,
                               qse_channel** out);
qse_status qse_channel_classify(const qse_channel* c, qse_channel_class* out);
const char* qse_channel_class_name(qse_channel_class c);
qse_status qse_apply_local_b(const qse_state* s, const qse_channel* c,
                             qse_state** out);

/* --- steering geometry ----------------------------------------------------- */

qse_status qse_steered_state(const qse_state* s, const double x[3],
                             int steered_side, qse_steered* out);
qse_status qse_slocc_normalize(const qse_state* s, int side, qse_state** out);
qse_status qse_steering_ellipsoid(const qse_state* s, int side,
                                  qse_ellipsoid* out);
qse_status qse_is_radial_segment(const qse_ellipsoid* e, double tol, int* out);
qse_status qse_needle_length(const qse_ellipsoid* e, double* out);
qse_status qse_contains_origin(const qse_ellipsoid* e, double tol, int* out);
qse_status qse_ellipsoid_size(const qse_ellipsoid* e, qse_size* out);
qse_status qse_ellipsoid_to_json(const qse_ellipsoid* e, char** json_out);

/* --- correlation measures -------------------------------------------------- */

qse_status qse_entropy(const qse_state* s, double* bits);
qse_status qse_mutual_information(const qse_state* s, double* bits);
qse_status qse_trace_distance(const qse_state* a, const qse_state* b,
                              double* out);
qse_status qse_concurrence(const qse_state* s, double* out);
qse_status qse_is_x_state(const qse_state* s, double tol, int* out);
qse_status qse_discord_b(const qse_state* s, qse_discord* out);
qse_status qse_discord_b_numeric(const qse_state* s, qse_discord* out);

/* --- needle decomposition --------------------------------------------------- */

qse_status qse_needle_decompose(const qse_state* s, qse_needle_parts* out);
qse_status qse_build_preparation(const qse_state* s, qse_state** classical_out,
                                 qse_channel** channel_out);
qse_status qse_theorem_report(const qse_state* s, qse_theorem* out);
qse_status qse_theorem_report_json(const qse_state* s, char** json_out);

/* --- sweep drivers (JSON config in, CSV/JSON text out) ---------------------- */

qse_status qse_run_p_scan(const char* config_json, char** csv_out);
qse_status qse_run_c3_scan(const char* config_json, char** csv_out);
qse_status qse_needle_demo(double delta, char** json_out);

/* Randomized self-check; *all_passed is 1 when every suite passed. */
qse_status qse_run_verify(int trials, unsigned long long seed,
                          char** report_out, int* all_passed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QSE_QSE_H */
