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

#include "combsel/combsel.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "core/csv.hpp"
#include "core/embedding.hpp"
#include "core/error.hpp"
#include "core/index_set.hpp"
#include "core/kernel.hpp"
#include "discover/discovery.hpp"
#include "discover/hungarian.hpp"
#include "json.hpp"
#include "learn/losses.hpp"
#include "maximize/maximize.hpp"
#include "submodular/objective.hpp"
#include "synth/scene.hpp"
#include "synth/scene_json.hpp"

struct combsel_embeddings {
  combsel::EmbeddingSet value;
};
struct combsel_kernel {
  std::shared_ptr<const combsel::SimilarityKernel> value;
};
struct combsel_selection {
  combsel::SelectionResult value;
  std::vector<std::size_t> items;
};
struct combsel_discovery {
  combsel::DiscoveryResult value;
  std::vector<std::size_t> sets[5];
};
struct combsel_loss_report {
  combsel::LossReport value;
};

namespace {

using combsel::Error;
using combsel::ErrorCode;
using combsel::IndexSet;
using nlohmann::json;

thread_local std::string g_last_error;

combsel_status Fail(combsel_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
combsel_status Guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return COMBSEL_OK;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
        return Fail(COMBSEL_ERR_INVALID_ARGUMENT, e.what());
      case ErrorCode::kIo:
        return Fail(COMBSEL_ERR_IO, e.what());
      case ErrorCode::kNumeric:
        return Fail(COMBSEL_ERR_NUMERIC, e.what());
      case ErrorCode::kStage:
        return Fail(COMBSEL_ERR_STAGE, e.what());
    }
    return Fail(COMBSEL_ERR_INTERNAL, e.what());
  } catch (const json::exception& e) {
    return Fail(COMBSEL_ERR_INVALID_ARGUMENT, std::string("json: ") + e.what());
  } catch (const std::bad_alloc&) {
    return Fail(COMBSEL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(COMBSEL_ERR_INTERNAL, e.what());
  }
}

void Require(bool ok, const char* message) {
  if (!ok) throw combsel::InvalidArgument(message);
}

IndexSet ToSet(const std::size_t* items, std::size_t n, const char* what) {
  if (n == 0) return {};
  if (items == nullptr) {
    throw combsel::InvalidArgument(std::string(what) + " is NULL");
  }
  return IndexSet(std::vector<combsel::Index>(items, items + n));
}

combsel::Family ToFamily(combsel_family family) {
  switch (family) {
    case COMBSEL_FAMILY_FL:
      return combsel::Family::kFacilityLocation;
    case COMBSEL_FAMILY_GC:
      return combsel::Family::kGraphCut;
    case COMBSEL_FAMILY_LOGDET:
      return combsel::Family::kLogDeterminant;
  }
  throw combsel::InvalidArgument("unknown family value");
}

combsel_family FromFamily(combsel::Family family) {
  switch (family) {
    case combsel::Family::kFacilityLocation:
      return COMBSEL_FAMILY_FL;
    case combsel::Family::kGraphCut:
      return COMBSEL_FAMILY_GC;
    case combsel::Family::kLogDeterminant:
      break;
  }
  return COMBSEL_FAMILY_LOGDET;
}

combsel::SubmodularObjective MakeObjective(const combsel_kernel* kernel,
                                           const combsel_objective_params* p,
                                           const std::size_t* ground,
                                           std::size_t n_ground) {
  Require(kernel != nullptr && p != nullptr, "kernel and params are required");
  return combsel::SubmodularObjective(ToFamily(p->family), kernel->value,
                                      ToSet(ground, n_ground, "ground"),
                                      {p->lambda, p->nu, p->epsilon});
}

combsel::LossSets ToLossSets(const combsel_loss_sets* s) {
  Require(s != nullptr, "loss sets are required");
  combsel::LossSets out;
  if (s->n_classes > 0) {
    Require(s->class_offsets != nullptr, "class_offsets is NULL");
    Require(s->class_offsets[0] == 0, "class_offsets must start at 0");
    for (std::size_t c = 0; c < s->n_classes; ++c) {
      const std::size_t lo = s->class_offsets[c];
      const std::size_t hi = s->class_offsets[c + 1];
      Require(lo <= hi, "class_offsets must be non-decreasing");
      out.classes.push_back(
          ToSet(hi > lo ? s->class_items + lo : nullptr, hi - lo, "class_items"));
    }
  }
  out.conditioning = ToSet(s->conditioning, s->n_conditioning, "conditioning");
  out.ground = ToSet(s->ground, s->n_ground, "ground");
  return out;
}

combsel::LossConfig ToLossConfig(const combsel_loss_config* c) {
  Require(c != nullptr, "loss config is required");
  combsel::LossConfig out;
  out.family = ToFamily(c->family);
  out.eta = c->eta;
  out.lambda = c->lambda;
  out.nu = c->nu;
  out.epsilon = c->epsilon;
  out.mode = c->mode == COMBSEL_LOSS_IOD ? combsel::LossMode::kIod
                                         : combsel::LossMode::kOwod;
  out.Validate();
  return out;
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json ParseJsonOrEmpty(const char* text) {
  if (text == nullptr || *text == '\0') return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw combsel::InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

extern "C" {

const char* combsel_version(void) { return "1.0.0"; }

const char* combsel_last_error(void) { return g_last_error.c_str(); }

const char* combsel_status_name(combsel_status status) {
  switch (status) {
    case COMBSEL_OK:
      return "ok";
    case COMBSEL_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case COMBSEL_ERR_IO:
      return "i/o error";
    case COMBSEL_ERR_NUMERIC:
      return "numeric error";
    case COMBSEL_ERR_STAGE:
      return "stage error";
    case COMBSEL_ERR_INTERNAL:
      break;
  }
  return "internal error";
}

void combsel_string_free(char* str) { std::free(str); }

combsel_status combsel_parse_family(const char* name, combsel_family* out) {
  return Guard([&] {
    Require(name != nullptr && out != nullptr, "name and out are required");
    *out = FromFamily(combsel::ParseFamily(name));
  });
}

const char* combsel_family_name(combsel_family family) {
  switch (family) {
    case COMBSEL_FAMILY_FL:
      return "fl";
    case COMBSEL_FAMILY_GC:
      return "gc";
    case COMBSEL_FAMILY_LOGDET:
      return "logdet";
  }
  return "?";
}

// ---- Embeddings -------------------------------------------------------------

combsel_status combsel_embeddings_create(size_t rows, size_t cols,
                                         const double* data, const int* labels,
                                         const double* objectness,
                                         combsel_embeddings** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    Require(data != nullptr || rows * cols == 0, "data is NULL");
    std::optional<std::vector<int>> l;
    std::optional<std::vector<double>> o;
    if (labels != nullptr) l.emplace(labels, labels + rows);
    if (objectness != nullptr) o.emplace(objectness, objectness + rows);
    std::vector<double> d(data, data + rows * cols);
    *out = new combsel_embeddings{
        combsel::EmbeddingSet(rows, cols, std::move(d), std::move(l), std::move(o))};
  });
}

combsel_status combsel_embeddings_load_csv(const char* path,
                                           combsel_embeddings** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "path and out are required");
    *out = new combsel_embeddings{combsel::ReadEmbeddingsCsv(std::string(path))};
  });
}

combsel_status combsel_embeddings_save_csv(const combsel_embeddings* e,
                                           const char* path,
                                           const char* comment) {
  return Guard([&] {
    Require(e != nullptr && path != nullptr, "embeddings and path are required");
    combsel::WriteEmbeddingsCsv(std::string(path), e->value,
                                comment != nullptr ? comment : "");
  });
}

void combsel_embeddings_free(combsel_embeddings* e) { delete e; }

size_t combsel_embeddings_rows(const combsel_embeddings* e) {
  return e != nullptr ? e->value.rows() : 0;
}
size_t combsel_embeddings_cols(const combsel_embeddings* e) {
  return e != nullptr ? e->value.cols() : 0;
}
const double* combsel_embeddings_data(const combsel_embeddings* e) {
  return e != nullptr ? e->value.data().data() : nullptr;
}
const int* combsel_embeddings_labels(const combsel_embeddings* e) {
  return e != nullptr && e->value.has_labels() ? e->value.labels().data()
                                               : nullptr;
}
const double* combsel_embeddings_objectness(const combsel_embeddings* e) {
  return e != nullptr && e->value.has_objectness()
             ? e->value.objectness().data()
             : nullptr;
}

// ---- Synthetic data ---------------------------------------------------------

combsel_status combsel_scene_generate(const char* spec_json,
                                      combsel_embeddings** items,
                                      combsel_embeddings** prototypes,
                                      char** resolved_json) {
  return Guard([&] {
    Require(items != nullptr && prototypes != nullptr,
            "items and prototypes are required");
    const combsel::SceneSpec spec =
        combsel::SceneSpecFromJson(ParseJsonOrEmpty(spec_json));
    combsel::Scene scene = combsel::GenerateScene(spec);
    std::string resolved;
    if (resolved_json != nullptr) resolved = combsel::SceneSpecToJson(spec).dump();
    auto it = std::make_unique<combsel_embeddings>(std::move(scene.items));
    auto pr = std::make_unique<combsel_embeddings>(std::move(scene.prototypes));
    if (resolved_json != nullptr) *resolved_json = CopyString(resolved);
    *items = it.release();
    *prototypes = pr.release();
  });
}

combsel_status combsel_random_embeddings(size_t rows, size_t cols,
                                         uint64_t seed,
                                         combsel_embeddings** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    *out = new combsel_embeddings{combsel::RandomGaussian(rows, cols, seed)};
  });
}

combsel_status combsel_separation_count(const char* options_json, size_t* out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    *out = combsel::SeparationOptionsFromJson(ParseJsonOrEmpty(options_json))
               .n_cases;
  });
}

combsel_status combsel_separation_case(const char* options_json, size_t index,
                                       combsel_embeddings** out,
                                       double* center_distance) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    const auto options =
        combsel::SeparationOptionsFromJson(ParseJsonOrEmpty(options_json));
    Require(index < options.n_cases, "separation case index out of range");
    auto cases = combsel::GenerateSeparationCases(options);
    if (center_distance != nullptr) *center_distance = cases[index].center_distance;
    *out = new combsel_embeddings{std::move(cases[index].embeddings)};
  });
}

// ---- Kernels and objectives -------------------------------------------------

combsel_status combsel_kernel_cosine(const combsel_embeddings* e,
                                     const char* transform, double epsilon,
                                     combsel_kernel** out) {
  return Guard([&] {
    Require(e != nullptr && out != nullptr, "embeddings and out are required");
    const auto t = combsel::ParseTransform(transform != nullptr ? transform
                                                                : "raw-cosine");
    *out = new combsel_kernel{std::make_shared<const combsel::SimilarityKernel>(
        combsel::CosineKernel(e->value, t, epsilon))};
  });
}

combsel_status combsel_kernel_create(size_t n, const double* matrix,
                                     double epsilon, combsel_kernel** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    Require(matrix != nullptr || n == 0, "matrix is NULL");
    *out = new combsel_kernel{std::make_shared<const combsel::SimilarityKernel>(
        n, std::vector<double>(matrix, matrix + n * n),
        combsel::KernelTransform::kRawCosine, epsilon)};
  });
}

void combsel_kernel_free(combsel_kernel* kernel) { delete kernel; }

size_t combsel_kernel_size(const combsel_kernel* kernel) {
  return kernel != nullptr ? kernel->value->size() : 0;
}

double combsel_kernel_at(const combsel_kernel* kernel, size_t i, size_t j) {
  return (*kernel->value)(i, j);
}

void combsel_objective_params_default(combsel_objective_params* params) {
  const combsel::ObjectiveParams d;
  params->family = COMBSEL_FAMILY_GC;
  params->lambda = d.lambda;
  params->nu = d.nu;
  params->epsilon = d.epsilon;
}

combsel_status combsel_objective_evaluate(const combsel_kernel* kernel,
                                          const combsel_objective_params* params,
                                          const size_t* ground, size_t n_ground,
                                          const size_t* set, size_t n_set,
                                          double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    const auto obj = MakeObjective(kernel, params, ground, n_ground);
    *out = combsel::Evaluate(obj, ToSet(set, n_set, "set"));
  });
}

combsel_status combsel_conditional_gain(const combsel_kernel* kernel,
                                        const combsel_objective_params* params,
                                        const size_t* ground, size_t n_ground,
                                        const size_t* a, size_t n_a,
                                        const size_t* q, size_t n_q,
                                        int closed_form, double* out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    const auto obj = MakeObjective(kernel, params, ground, n_ground);
    const IndexSet as = ToSet(a, n_a, "a");
    const IndexSet qs = ToSet(q, n_q, "q");
    *out = closed_form ? combsel::ConditionalGainClosed(obj, as, qs)
                       : combsel::ConditionalGainDefinitional(obj, as, qs);
  });
}

combsel_status combsel_maximize(const combsel_kernel* kernel,
                                const combsel_objective_params* params,
                                const size_t* ground, size_t n_ground,
                                const size_t* candidates, size_t n_candidates,
                                const size_t* conditioning,
                                size_t n_conditioning, size_t k,
                                combsel_method method,
                                combsel_selection** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    const auto obj = MakeObjective(kernel, params, ground, n_ground);
    const IndexSet cand = ToSet(candidates, n_candidates, "candidates");
    const IndexSet cond = ToSet(conditioning, n_conditioning, "conditioning");
    auto sel = std::make_unique<combsel_selection>();
    switch (method) {
      case COMBSEL_METHOD_NAIVE:
        sel->value = combsel::GreedyMax(obj, cand, k, cond);
        break;
      case COMBSEL_METHOD_LAZY:
        sel->value = combsel::LazyGreedyMax(obj, cand, k, cond);
        break;
      case COMBSEL_METHOD_BRUTE:
        sel->value = combsel::BruteForceOpt(obj, cand, k, cond);
        break;
      default:
        throw combsel::InvalidArgument("unknown maximization method");
    }
    sel->items = sel->value.selected.items();
    *out = sel.release();
  });
}

void combsel_selection_free(combsel_selection* s) { delete s; }
size_t combsel_selection_size(const combsel_selection* s) {
  return s != nullptr ? s->items.size() : 0;
}
const size_t* combsel_selection_items(const combsel_selection* s) {
  return s != nullptr ? s->items.data() : nullptr;
}
const double* combsel_selection_gains(const combsel_selection* s) {
  return s != nullptr ? s->value.gains.data() : nullptr;
}
double combsel_selection_value(const combsel_selection* s) {
  return s != nullptr ? s->value.objective_value : 0.0;
}
uint64_t combsel_selection_evaluations(const combsel_selection* s) {
  return s != nullptr ? s->value.evaluations : 0;
}

// ---- Assignment -------------------------------------------------------------

combsel_status combsel_hungarian(const double* cost, size_t rows, size_t cols,
                                 size_t* out_rows, size_t* out_cols,
                                 double* out_cost) {
  return Guard([&] {
    Require(cost != nullptr, "cost is NULL");
    const auto a = combsel::HungarianAssign(
        std::span<const double>(cost, rows * cols), rows, cols);
    for (std::size_t i = 0; i < a.pairs.size(); ++i) {
      if (out_rows != nullptr) out_rows[i] = a.pairs[i].first;
      if (out_cols != nullptr) out_cols[i] = a.pairs[i].second;
    }
    if (out_cost != nullptr) *out_cost = a.cost;
  });
}

// ---- Discovery --------------------------------------------------------------

void combsel_discovery_config_default(combsel_discovery_config* config) {
  const combsel::DiscoveryConfig d;
  config->tau_e = d.tau_e;
  config->tau_b = d.tau_b;
  config->k = d.k;
  config->objective.family = FromFamily(d.family);
  config->objective.lambda = d.params.lambda;
  config->objective.nu = d.params.nu;
  config->objective.epsilon = d.params.epsilon;
  config->exclude_background_from_pool = d.exclude_background_from_pool;
  config->lazy = d.lazy;
}

combsel_status combsel_discover(const combsel_embeddings* items,
                                const combsel_embeddings* prototypes,
                                const combsel_discovery_config* config,
                                combsel_discovery** out) {
  return Guard([&] {
    Require(items != nullptr && prototypes != nullptr && config != nullptr &&
                out != nullptr,
            "items, prototypes, config and out are required");
    combsel::DiscoveryConfig c;
    c.tau_e = config->tau_e;
    c.tau_b = config->tau_b;
    c.k = config->k;
    c.family = ToFamily(config->objective.family);
    c.params = {config->objective.lambda, config->objective.nu,
                config->objective.epsilon};
    c.exclude_background_from_pool = config->exclude_background_from_pool != 0;
    c.lazy = config->lazy != 0;
    auto d = std::make_unique<combsel_discovery>();
    d->value = combsel::RunDiscovery(items->value, prototypes->value, c);
    d->sets[COMBSEL_SET_KEPT] = d->value.kept.items();
    d->sets[COMBSEL_SET_KNOWN] = d->value.known.items();
    d->sets[COMBSEL_SET_BACKGROUND] = d->value.background.items();
    d->sets[COMBSEL_SET_UNKNOWN] = d->value.unknown.items();
    d->sets[COMBSEL_SET_UNKNOWN_POOL] = d->value.unknown_pool.items();
    *out = d.release();
  });
}

void combsel_discovery_free(combsel_discovery* d) { delete d; }

size_t combsel_discovery_set(const combsel_discovery* d, combsel_set_kind kind,
                             const size_t** items) {
  if (d == nullptr || kind < COMBSEL_SET_KEPT || kind > COMBSEL_SET_UNKNOWN_POOL) {
    if (items != nullptr) *items = nullptr;
    return 0;
  }
  const auto& v = d->sets[kind];
  if (items != nullptr) *items = v.data();
  return v.size();
}

size_t combsel_discovery_gains(const combsel_discovery* d,
                               combsel_set_kind kind, const double** gains) {
  const std::vector<double>* v = nullptr;
  if (d != nullptr && kind == COMBSEL_SET_BACKGROUND) {
    v = &d->value.background_trace.gains;
  } else if (d != nullptr && kind == COMBSEL_SET_UNKNOWN) {
    v = &d->value.unknown_trace.gains;
  }
  if (gains != nullptr) *gains = v != nullptr ? v->data() : nullptr;
  return v != nullptr ? v->size() : 0;
}

combsel_status combsel_discovery_metrics(const combsel_discovery* d,
                                         const int* truth, size_t n,
                                         combsel_coverage_metrics* out) {
  return Guard([&] {
    Require(d != nullptr && truth != nullptr && out != nullptr,
            "discovery, truth and out are required");
    const auto m = combsel::ComputeCoverageMetrics(
        d->value, std::span<const int>(truth, n));
    *out = {m.purity, m.coverage, m.mean_sim_to_known,
            m.mean_sim_to_background, m.pool_prevalence};
  });
}

combsel_status combsel_discovery_to_json(const combsel_discovery* d,
                                         const int* truth, size_t n,
                                         char** out) {
  return Guard([&] {
    Require(d != nullptr && out != nullptr, "discovery and out are required");
    const auto& r = d->value;
    json j = {{"kept", r.kept.items()},
              {"known", r.known.items()},
              {"background", r.background.items()},
              {"unknown", r.unknown.items()},
              {"gains",
               {{"background", r.background_trace.gains},
                {"unknown", r.unknown_trace.gains}}}};
    if (truth != nullptr) {
      const auto m =
          combsel::ComputeCoverageMetrics(r, std::span<const int>(truth, n));
      j["metrics"] = {{"purity", m.purity},
                      {"coverage", m.coverage},
                      {"mean_sim_to_known", m.mean_sim_to_known},
                      {"mean_sim_to_background", m.mean_sim_to_background},
                      {"pool_prevalence", m.pool_prevalence}};
    }
    *out = CopyString(j.dump(2));
  });
}

// ---- Losses -----------------------------------------------------------------

void combsel_loss_config_default(combsel_loss_config* config) {
  const combsel::LossConfig d;
  config->family = FromFamily(d.family);
  config->eta = d.eta;
  config->lambda = d.lambda;
  config->nu = d.nu;
  config->epsilon = d.epsilon;
  config->mode = COMBSEL_LOSS_OWOD;
}

combsel_status combsel_loss_self(const combsel_embeddings* e,
                                 const combsel_loss_sets* sets,
                                 const combsel_loss_config* config,
                                 double* out) {
  return Guard([&] {
    Require(e != nullptr && out != nullptr, "embeddings and out are required");
    *out = combsel::LossSelf(e->value, ToLossSets(sets), ToLossConfig(config));
  });
}

combsel_status combsel_loss_cross(const combsel_embeddings* e,
                                  const combsel_loss_sets* sets,
                                  const combsel_loss_config* config,
                                  double* out) {
  return Guard([&] {
    Require(e != nullptr && out != nullptr, "embeddings and out are required");
    *out = combsel::LossCross(e->value, ToLossSets(sets), ToLossConfig(config));
  });
}

combsel_status combsel_loss_evaluate(const combsel_embeddings* e,
                                     const combsel_loss_sets* sets,
                                     const combsel_loss_config* config,
                                     combsel_loss_report** out) {
  return Guard([&] {
    Require(e != nullptr && out != nullptr, "embeddings and out are required");
    *out = new combsel_loss_report{
        combsel::LossTotal(e->value, ToLossSets(sets), ToLossConfig(config))};
  });
}

void combsel_loss_report_free(combsel_loss_report* r) { delete r; }
double combsel_loss_report_self(const combsel_loss_report* r) {
  return r->value.l_self;
}
double combsel_loss_report_cross(const combsel_loss_report* r) {
  return r->value.l_cross;
}
double combsel_loss_report_total(const combsel_loss_report* r) {
  return r->value.l_total;
}
const double* combsel_loss_report_grad(const combsel_loss_report* r,
                                       size_t* rows, size_t* cols) {
  if (rows != nullptr) *rows = r->value.rows;
  if (cols != nullptr) *cols = r->value.cols;
  return r->value.grad.data();
}

combsel_status combsel_gradcheck(const combsel_embeddings* e,
                                 const combsel_loss_sets* sets,
                                 const combsel_loss_config* config, double h,
                                 uint64_t seed, double perturb,
                                 combsel_gradcheck_result* out) {
  return Guard([&] {
    Require(e != nullptr && out != nullptr, "embeddings and out are required");
    const auto s = ToLossSets(sets);
    const auto c = ToLossConfig(config);
    std::vector<double> grad = combsel::GradLoss(e->value, s, c);
    if (perturb != 0.0) {
      for (double& g : grad) g = g * (1.0 + perturb) + perturb;
    }
    const auto r = combsel::FiniteDifferenceCheck(e->value, s, c, h, seed, grad);
    *out = {r.max_abs_err, r.max_rel_err, r.checked, r.tie_adjacent};
  });
}

}  // extern "C"
