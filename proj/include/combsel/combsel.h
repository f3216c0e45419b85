// Copyright 2026 The combsel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to combsel: submodular subset selection, the unknown-discovery
 * pipeline and the combinatorial representation losses.
 *
 * Conventions
 *   - Every fallible call returns a combsel_status; on failure a message is
 *     available from combsel_last_error() on the calling thread.
 *   - Objects are opaque handles released with the matching *_free call.
 *     Free functions accept NULL.
 *   - Strings returned through char** are heap allocated; release them with
 *     combsel_string_free.
 *   - Index sets are arrays of size_t. Collections of sets are flattened:
 *     set c occupies items[offsets[c] .. offsets[c + 1]), so offsets has
 *     n_sets + 1 entries.
 */
#ifndef COMBSEL_COMBSEL_H_
#define COMBSEL_COMBSEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(COMBSEL_BUILDING_LIBRARY)
#define COMBSEL_API __attribute__((visibility("default")))
#else
#define COMBSEL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum combsel_status {
  COMBSEL_OK = 0,
  COMBSEL_ERR_INVALID_ARGUMENT = 1,
  COMBSEL_ERR_IO = 2,
  COMBSEL_ERR_NUMERIC = 3,
  COMBSEL_ERR_STAGE = 4,
  COMBSEL_ERR_INTERNAL = 5
} combsel_status;

typedef enum combsel_family {
  COMBSEL_FAMILY_FL = 0,
  COMBSEL_FAMILY_GC = 1,
  COMBSEL_FAMILY_LOGDET = 2
} combsel_family;

typedef enum combsel_method {
  COMBSEL_METHOD_NAIVE = 0,
  COMBSEL_METHOD_LAZY = 1,
  COMBSEL_METHOD_BRUTE = 2
} combsel_method;

typedef enum combsel_loss_mode {
  COMBSEL_LOSS_OWOD = 0,
  COMBSEL_LOSS_IOD = 1
} combsel_loss_mode;

typedef enum combsel_set_kind {
  COMBSEL_SET_KEPT = 0,
  COMBSEL_SET_KNOWN = 1,
  COMBSEL_SET_BACKGROUND = 2,
  COMBSEL_SET_UNKNOWN = 3,
  COMBSEL_SET_UNKNOWN_POOL = 4
} combsel_set_kind;

typedef struct combsel_embeddings combsel_embeddings;
typedef struct combsel_kernel combsel_kernel;
typedef struct combsel_selection combsel_selection;
typedef struct combsel_discovery combsel_discovery;
typedef struct combsel_loss_report combsel_loss_report;

COMBSEL_API const char* combsel_version(void);
COMBSEL_API const char* combsel_last_error(void);
COMBSEL_API const char* combsel_status_name(combsel_status status);
COMBSEL_API void combsel_string_free(char* str);

/* Name lookups. Accepted family names: fl, gc, logdet and the aliases
 * flcg, gccg, logdetcg. */
COMBSEL_API combsel_status combsel_parse_family(const char* name,
                                                combsel_family* out);
COMBSEL_API const char* combsel_family_name(combsel_family family);

/* ---- Embeddings ---------------------------------------------------------- */

/* labels and objectness may be NULL. Data is copied. */
COMBSEL_API combsel_status combsel_embeddings_create(
    size_t rows, size_t cols, const double* data, const int* labels,
    const double* objectness, combsel_embeddings** out);
COMBSEL_API combsel_status combsel_embeddings_load_csv(
    const char* path, combsel_embeddings** out);
/* comment may be NULL; otherwise written as a leading "# <comment>" line. */
COMBSEL_API combsel_status combsel_embeddings_save_csv(
    const combsel_embeddings* embeddings, const char* path,
    const char* comment);
COMBSEL_API void combsel_embeddings_free(combsel_embeddings* embeddings);

COMBSEL_API size_t combsel_embeddings_rows(const combsel_embeddings* e);
COMBSEL_API size_t combsel_embeddings_cols(const combsel_embeddings* e);
COMBSEL_API const double* combsel_embeddings_data(const combsel_embeddings* e);
/* NULL when the column is absent. */
COMBSEL_API const int* combsel_embeddings_labels(const combsel_embeddings* e);
COMBSEL_API const double* combsel_embeddings_objectness(
    const combsel_embeddings* e);

/* ---- Synthetic data ------------------------------------------------------ */

/* spec_json may be NULL for the default scene. resolved_json (optional)
 * receives the fully resolved spec. */
COMBSEL_API combsel_status combsel_scene_generate(
    const char* spec_json, combsel_embeddings** items,
    combsel_embeddings** prototypes, char** resolved_json);

/* rows x cols standard normal entries drawn from the library generator. */
COMBSEL_API combsel_status combsel_random_embeddings(size_t rows, size_t cols,
                                                     uint64_t seed,
                                                     combsel_embeddings** out);

/* Number of separation cases described by options_json (NULL = defaults). */
COMBSEL_API combsel_status combsel_separation_count(const char* options_json,
                                                    size_t* out);
/* Case `index` (0-based). Knowns carry label 1, unknowns label 0. */
COMBSEL_API combsel_status combsel_separation_case(const char* options_json,
                                                   size_t index,
                                                   combsel_embeddings** out,
                                                   double* center_distance);

/* ---- Kernels and objectives ---------------------------------------------- */

/* transform: "raw-cosine", "clip-at-zero" or "affine-shift". */
COMBSEL_API combsel_status combsel_kernel_cosine(
    const combsel_embeddings* embeddings, const char* transform,
    double epsilon, combsel_kernel** out);
COMBSEL_API combsel_status combsel_kernel_create(size_t n,
                                                 const double* matrix,
                                                 double epsilon,
                                                 combsel_kernel** out);
COMBSEL_API void combsel_kernel_free(combsel_kernel* kernel);
COMBSEL_API size_t combsel_kernel_size(const combsel_kernel* kernel);
COMBSEL_API double combsel_kernel_at(const combsel_kernel* kernel, size_t i,
                                     size_t j);

typedef struct combsel_objective_params {
  combsel_family family;
  double lambda;  /* GC redundancy weight */
  double nu;      /* conditional-gain query weight */
  double epsilon; /* LogDet diagonal regularizer */
} combsel_objective_params;

COMBSEL_API void combsel_objective_params_default(
    combsel_objective_params* params);

COMBSEL_API combsel_status combsel_objective_evaluate(
    const combsel_kernel* kernel, const combsel_objective_params* params,
    const size_t* ground, size_t n_ground, const size_t* set, size_t n_set,
    double* out);

/* H_f(A | Q). closed_form != 0 uses the nu-weighted closed form, otherwise
 * f(A u Q) - f(Q). */
COMBSEL_API combsel_status combsel_conditional_gain(
    const combsel_kernel* kernel, const combsel_objective_params* params,
    const size_t* ground, size_t n_ground, const size_t* a, size_t n_a,
    const size_t* q, size_t n_q, int closed_form, double* out);

COMBSEL_API combsel_status combsel_maximize(
    const combsel_kernel* kernel, const combsel_objective_params* params,
    const size_t* ground, size_t n_ground, const size_t* candidates,
    size_t n_candidates, const size_t* conditioning, size_t n_conditioning,
    size_t k, combsel_method method, combsel_selection** out);
COMBSEL_API void combsel_selection_free(combsel_selection* selection);
COMBSEL_API size_t combsel_selection_size(const combsel_selection* s);
COMBSEL_API const size_t* combsel_selection_items(const combsel_selection* s);
COMBSEL_API const double* combsel_selection_gains(const combsel_selection* s);
COMBSEL_API double combsel_selection_value(const combsel_selection* s);
COMBSEL_API uint64_t combsel_selection_evaluations(
    const combsel_selection* s);

/* ---- Assignment ---------------------------------------------------------- */

/* Minimum-cost assignment on a row-major rows x cols cost matrix. The output
 * buffers must hold min(rows, cols) entries; pairs are sorted by row. */
COMBSEL_API combsel_status combsel_hungarian(const double* cost, size_t rows,
                                             size_t cols, size_t* out_rows,
                                             size_t* out_cols,
                                             double* out_cost);

/* ---- Discovery pipeline -------------------------------------------------- */

typedef struct combsel_discovery_config {
  double tau_e;
  double tau_b;
  size_t k;
  combsel_objective_params objective;
  int exclude_background_from_pool;
  int lazy;
} combsel_discovery_config;

typedef struct combsel_coverage_metrics {
  double purity;
  double coverage;
  double mean_sim_to_known;
  double mean_sim_to_background;
  double pool_prevalence;
} combsel_coverage_metrics;

COMBSEL_API void combsel_discovery_config_default(
    combsel_discovery_config* config);

/* Stage failures return COMBSEL_ERR_STAGE; the message names the stage. */
COMBSEL_API combsel_status combsel_discover(
    const combsel_embeddings* items, const combsel_embeddings* prototypes,
    const combsel_discovery_config* config, combsel_discovery** out);
COMBSEL_API void combsel_discovery_free(combsel_discovery* discovery);
COMBSEL_API size_t combsel_discovery_set(const combsel_discovery* d,
                                         combsel_set_kind kind,
                                         const size_t** items);
/* Step gains of the background (COMBSEL_SET_BACKGROUND) or unknown stage. */
COMBSEL_API size_t combsel_discovery_gains(const combsel_discovery* d,
                                           combsel_set_kind kind,
                                           const double** gains);
COMBSEL_API combsel_status combsel_discovery_metrics(
    const combsel_discovery* d, const int* truth, size_t n,
    combsel_coverage_metrics* out);
/* {kept, known, background, unknown, gains:{background, unknown}, metrics}.
 * metrics is omitted when truth is NULL. */
COMBSEL_API combsel_status combsel_discovery_to_json(
    const combsel_discovery* d, const int* truth, size_t n, char** out);

/* ---- Losses -------------------------------------------------------------- */

typedef struct combsel_loss_config {
  combsel_family family;
  double eta;
  double lambda;
  double nu;
  double epsilon;
  combsel_loss_mode mode;
} combsel_loss_config;

typedef struct combsel_loss_sets {
  size_t n_classes;
  const size_t* class_offsets; /* n_classes + 1 entries */
  const size_t* class_items;
  const size_t* conditioning; /* U, or the replay buffer in IOD mode */
  size_t n_conditioning;
  const size_t* ground; /* T */
  size_t n_ground;
} combsel_loss_sets;

typedef struct combsel_gradcheck_result {
  double max_abs_err;
  double max_rel_err;
  size_t checked;
  size_t tie_adjacent;
} combsel_gradcheck_result;

COMBSEL_API void combsel_loss_config_default(combsel_loss_config* config);

COMBSEL_API combsel_status combsel_loss_self(const combsel_embeddings* e,
                                             const combsel_loss_sets* sets,
                                             const combsel_loss_config* config,
                                             double* out);
COMBSEL_API combsel_status combsel_loss_cross(
    const combsel_embeddings* e, const combsel_loss_sets* sets,
    const combsel_loss_config* config, double* out);
COMBSEL_API combsel_status combsel_loss_evaluate(
    const combsel_embeddings* e, const combsel_loss_sets* sets,
    const combsel_loss_config* config, combsel_loss_report** out);
COMBSEL_API void combsel_loss_report_free(combsel_loss_report* report);
COMBSEL_API double combsel_loss_report_self(const combsel_loss_report* r);
COMBSEL_API double combsel_loss_report_cross(const combsel_loss_report* r);
COMBSEL_API double combsel_loss_report_total(const combsel_loss_report* r);
/* Row-major rows x cols gradient of the total loss. */
COMBSEL_API const double* combsel_loss_report_grad(
    const combsel_loss_report* r, size_t* rows, size_t* cols);

/* Central differences against the analytic gradient. `perturb` != 0
 * corrupts the analytic gradient as g * (1 + perturb) + perturb before the
 * comparison; it exists to test the checker itself. */
COMBSEL_API combsel_status combsel_gradcheck(
    const combsel_embeddings* e, const combsel_loss_sets* sets,
    const combsel_loss_config* config, double h, uint64_t seed,
    double perturb, combsel_gradcheck_result* out);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* COMBSEL_COMBSEL_H_ */
