/* Copyright 2026 The combsel Authors.
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

/* Exercises the public C interface from plain C. */

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "combsel/combsel.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define EXPECT_OK(call) EXPECT((call) == COMBSEL_OK)

static void TestObjectives(void) {
  const double s[9] = {1, .5, .2, .5, 1, .4, .2, .4, 1};
  const size_t ground[3] = {0, 1, 2};
  const size_t a[1] = {0};
  const size_t q[1] = {1};
  const size_t pair[2] = {0, 1};
  combsel_kernel* kernel = NULL;
  combsel_objective_params p;
  double value = 0.0;

  EXPECT_OK(combsel_kernel_create(3, s, 1e-4, &kernel));
  EXPECT(combsel_kernel_size(kernel) == 3);
  EXPECT(combsel_kernel_at(kernel, 1, 2) == 0.4);

  combsel_objective_params_default(&p);
  p.family = COMBSEL_FAMILY_FL;
  EXPECT_OK(combsel_objective_evaluate(kernel, &p, ground, 3, a, 1, &value));
  EXPECT(fabs(value - 1.7) < 1e-12);

  p.family = COMBSEL_FAMILY_GC;
  p.lambda = 0.5;
  EXPECT_OK(combsel_conditional_gain(kernel, &p, ground, 3, a, 1, q, 1, 1, &value));
  EXPECT(fabs(value - 0.7) < 1e-12);
  EXPECT_OK(combsel_conditional_gain(kernel, &p, ground, 3, a, 1, q, 1, 0, &value));
  EXPECT(fabs(value - 0.7) < 1e-12);

  p.family = COMBSEL_FAMILY_LOGDET;
  p.epsilon = 0.0;
  EXPECT_OK(combsel_objective_evaluate(kernel, &p, ground, 3, pair, 2, &value));
  EXPECT(fabs(value - log(0.75)) < 1e-12);

  {
    combsel_selection* sel = NULL;
    p.family = COMBSEL_FAMILY_FL;
    EXPECT_OK(combsel_maximize(kernel, &p, ground, 3, ground, 3, NULL, 0, 2,
                               COMBSEL_METHOD_LAZY, &sel));
    EXPECT(combsel_selection_size(sel) == 2);
    EXPECT(combsel_selection_items(sel)[0] == 1);
    EXPECT(combsel_selection_items(sel)[1] == 2);
    EXPECT(fabs(combsel_selection_value(sel) - 2.5) < 1e-12);
    combsel_selection_free(sel);
  }

  {
    /* Overlapping conditioning set is rejected. */
    p.family = COMBSEL_FAMILY_GC;
    EXPECT(combsel_conditional_gain(kernel, &p, ground, 3, a, 1, a, 1, 0, &value) ==
           COMBSEL_ERR_INVALID_ARGUMENT);
    EXPECT(strlen(combsel_last_error()) > 0);
  }
  combsel_kernel_free(kernel);

  {
    const double asym[4] = {1, 0.5, 0.2, 1};
    EXPECT(combsel_kernel_create(2, asym, 0.0, &kernel) == COMBSEL_ERR_INVALID_ARGUMENT);
  }
}

static void TestHungarian(void) {
  const double cost[9] = {4, 1, 3, 2, 0, 5, 3, 2, 2};
  size_t rows[3], cols[3];
  double total = 0.0;
  EXPECT_OK(combsel_hungarian(cost, 3, 3, rows, cols, &total));
  EXPECT(fabs(total - 5.0) < 1e-12);
}

static void TestDiscovery(void) {
  combsel_embeddings* items = NULL;
  combsel_embeddings* prototypes = NULL;
  combsel_discovery* d = NULL;
  combsel_discovery_config config;
  combsel_coverage_metrics m;
  char* resolved = NULL;
  char* json = NULL;
  const size_t* unknown = NULL;
  const size_t* known = NULL;
  const double* gains = NULL;

  EXPECT_OK(combsel_scene_generate("{\"seed\": 7}", &items, &prototypes, &resolved));
  EXPECT(resolved != NULL && strstr(resolved, "\"seed\":7") != NULL);
  combsel_string_free(resolved);
  EXPECT(combsel_embeddings_rows(items) == 500);
  EXPECT(combsel_embeddings_labels(items) != NULL);

  combsel_discovery_config_default(&config);
  EXPECT(config.k == 10);
  EXPECT(config.objective.family == COMBSEL_FAMILY_GC);
  EXPECT_OK(combsel_discover(items, prototypes, &config, &d));
  EXPECT(combsel_discovery_set(d, COMBSEL_SET_UNKNOWN, &unknown) == 10);
  EXPECT(combsel_discovery_set(d, COMBSEL_SET_KNOWN, &known) == 10);
  EXPECT(combsel_discovery_gains(d, COMBSEL_SET_UNKNOWN, &gains) == 10);
  EXPECT_OK(combsel_discovery_metrics(d, combsel_embeddings_labels(items), 500, &m));
  EXPECT(m.purity > m.pool_prevalence);
  EXPECT_OK(combsel_discovery_to_json(d, NULL, 0, &json));
  EXPECT(strstr(json, "\"unknown\"") != NULL);
  EXPECT(strstr(json, "\"metrics\"") == NULL);
  combsel_string_free(json);
  combsel_discovery_free(d);

  config.tau_e = 1.0;
  EXPECT(combsel_discover(items, prototypes, &config, &d) == COMBSEL_ERR_STAGE);
  EXPECT(strstr(combsel_last_error(), "stage 'filter'") != NULL);

  EXPECT(combsel_scene_generate("{\"sed\": 7}", &items, &prototypes, NULL) ==
         COMBSEL_ERR_INVALID_ARGUMENT);
  EXPECT(combsel_scene_generate("{not json", &items, &prototypes, NULL) ==
         COMBSEL_ERR_INVALID_ARGUMENT);

  combsel_embeddings_free(items);
  combsel_embeddings_free(prototypes);
}

static void TestLosses(void) {
  const double c = 0.2;
  double data[4];
  const size_t offsets[2] = {0, 1};
  const size_t class_items[1] = {0};
  const size_t u[1] = {1};
  const size_t t[2] = {0, 1};
  combsel_loss_sets sets;
  combsel_loss_config config;
  combsel_embeddings* e = NULL;
  combsel_loss_report* report = NULL;
  combsel_gradcheck_result check;
  double value = 0.0;
  size_t rows = 0, cols = 0;

  data[0] = 1;
  data[1] = 0;
  data[2] = c;
  data[3] = sqrt(1 - c * c);
  EXPECT_OK(combsel_embeddings_create(2, 2, data, NULL, NULL, &e));

  sets.n_classes = 1;
  sets.class_offsets = offsets;
  sets.class_items = class_items;
  sets.conditioning = u;
  sets.n_conditioning = 1;
  sets.ground = t;
  sets.n_ground = 2;

  combsel_loss_config_default(&config);
  EXPECT(config.family == COMBSEL_FAMILY_FL);
  EXPECT_OK(combsel_loss_cross(e, &sets, &config, &value));
  EXPECT(fabs(value - 0.4) < 1e-12);
  EXPECT_OK(combsel_loss_evaluate(e, &sets, &config, &report));
  EXPECT(combsel_loss_report_total(report) ==
         combsel_loss_report_self(report) - config.eta * combsel_loss_report_cross(report));
  EXPECT(combsel_loss_report_grad(report, &rows, &cols) != NULL);
  EXPECT(rows == 2 && cols == 2);
  combsel_loss_report_free(report);

  config.family = COMBSEL_FAMILY_GC;
  EXPECT_OK(combsel_gradcheck(e, &sets, &config, 1e-4, 0, 0.0, &check));
  EXPECT(check.max_rel_err < 1e-6);
  EXPECT_OK(combsel_gradcheck(e, &sets, &config, 1e-4, 0, 0.01, &check));
  EXPECT(check.max_rel_err > 1e-3);

  sets.n_conditioning = 0;
  EXPECT(combsel_loss_cross(e, &sets, &config, &value) == COMBSEL_ERR_INVALID_ARGUMENT);
  combsel_embeddings_free(e);

  {
    size_t n = 0;
    double dist = 0.0;
    EXPECT_OK(combsel_separation_count(NULL, &n));
    EXPECT(n == 3);
    EXPECT_OK(combsel_separation_case("{\"seed\": 1}", 2, &e, &dist));
    EXPECT(combsel_embeddings_rows(e) == 100);
    EXPECT(fabs(dist - 8.0 * sin(acos(-1.0) / 3.0)) < 1e-12);
    combsel_embeddings_free(e);
    EXPECT(combsel_separation_case(NULL, 3, &e, &dist) == COMBSEL_ERR_INVALID_ARGUMENT);
  }
}

static void TestMisc(void) {
  combsel_family f;
  EXPECT(strlen(combsel_version()) > 0);
  EXPECT_OK(combsel_parse_family("logdet", &f));
  EXPECT(f == COMBSEL_FAMILY_LOGDET);
  EXPECT(strcmp(combsel_family_name(COMBSEL_FAMILY_FL), "fl") == 0);
  EXPECT(combsel_parse_family("nope", &f) == COMBSEL_ERR_INVALID_ARGUMENT);
  EXPECT(combsel_embeddings_load_csv("/nonexistent/file.csv", NULL) != COMBSEL_OK);
  combsel_embeddings_free(NULL);
  combsel_string_free(NULL);
}

int main(void) {
  TestObjectives();
  TestHungarian();
  TestDiscovery();
  TestLosses();
  TestMisc();
  if (failures) {
    fprintf(stderr, "%d C API expectations failed\n", failures);
    return 1;
  }
  printf("C API: all expectations passed\n");
  return 0;
}
