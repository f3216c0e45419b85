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

#include "commands.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <sstream>

namespace cli {
namespace {

const char* const kFamilies[] = {"fl", "gc", "logdet"};

std::string DerivedPath(const std::string& out, const std::string& suffix) {
  const std::string ext = ".csv";
  const std::string::size_type dot = out.rfind('.');
  const std::string::size_type slash = out.find_last_of("/\\");
  const bool has_ext = dot != std::string::npos &&
                       (slash == std::string::npos || dot > slash);
  return (has_ext ? out.substr(0, dot) : out) + suffix + ext;
}

std::vector<std::string> FamiliesFor(const std::string& name) {
  if (name == "all") return {std::begin(kFamilies), std::end(kFamilies)};
  ParseFamilyOrFail(name);
  return {name};
}

// Discovery stage failures exit 4, except configuration validation.
void CheckDiscovery(combsel_status status) {
  if (status == COMBSEL_ERR_STAGE &&
      std::string(combsel_last_error()).rfind("stage 'config'", 0) == 0) {
    Fail(kExitConfig, combsel_last_error());
  }
  Check(status);
}

// ---- parameter blocks shared by several commands ---------------------------

json DiscoveryDefaults() {
  combsel_discovery_config d;
  combsel_discovery_config_default(&d);
  return {{"tau_e", d.tau_e},
          {"tau_b", d.tau_b},
          {"k", d.k},
          {"family", combsel_family_name(d.objective.family)},
          {"lambda", d.objective.lambda},
          {"nu", d.objective.nu},
          {"epsilon", d.objective.epsilon},
          {"exclude_background_from_pool", d.exclude_background_from_pool != 0},
          {"lazy", d.lazy != 0}};
}

combsel_discovery_config DiscoveryConfigFrom(const Params& p) {
  combsel_discovery_config c;
  combsel_discovery_config_default(&c);
  c.tau_e = p.Double("tau_e");
  c.tau_b = p.Double("tau_b");
  c.k = p.Count("k");
  c.objective.family = ParseFamilyOrFail(p.String("family"));
  c.objective.lambda = p.Double("lambda");
  c.objective.nu = p.Double("nu");
  c.objective.epsilon = p.Double("epsilon");
  c.exclude_background_from_pool = p.Bool("exclude_background_from_pool");
  c.lazy = p.Bool("lazy");
  return c;
}

json LossDefaults() {
  combsel_loss_config d;
  combsel_loss_config_default(&d);
  return {{"family", combsel_family_name(d.family)},
          {"eta", d.eta},
          {"lambda", d.lambda},
          {"nu", d.nu},
          {"epsilon", d.epsilon},
          {"mode", d.mode == COMBSEL_LOSS_IOD ? "iod" : "owod"}};
}

void AddLossFlags(CLI::App* app, Params& p) {
  p.Flag<std::string>(app, "--family", "family", "fl | gc | logdet | all");
  p.Flag<double>(app, "--eta", "eta", "Self / cross trade-off");
  p.Flag<double>(app, "--lambda", "lambda",
                 "GC redundancy weight, LogDet self regularizer");
  p.Flag<double>(app, "--nu", "nu", "Query weight of the cross term");
  p.Flag<double>(app, "--epsilon", "epsilon", "LogDet cross-term regularizer");
  p.Flag<std::string>(app, "--mode", "mode", "owod | iod");
}

combsel_loss_config LossConfigFrom(const Params& p, const std::string& family) {
  combsel_loss_config c;
  combsel_loss_config_default(&c);
  c.family = ParseFamilyOrFail(family);
  c.eta = p.Double("eta");
  c.lambda = p.Double("lambda");
  c.nu = p.Double("nu");
  c.epsilon = p.Double("epsilon");
  const std::string mode = p.String("mode");
  if (mode == "owod") {
    c.mode = COMBSEL_LOSS_OWOD;
  } else if (mode == "iod") {
    c.mode = COMBSEL_LOSS_IOD;
  } else {
    Fail(kExitConfig, "mode must be 'owod' or 'iod'");
  }
  return c;
}

// Owning form of combsel_loss_sets.
struct SetsBuffer {
  std::vector<std::size_t> offsets{0};
  std::vector<std::size_t> items;
  std::vector<std::size_t> conditioning;
  std::vector<std::size_t> ground;

  void AddClass(const std::vector<std::size_t>& cls) {
    items.insert(items.end(), cls.begin(), cls.end());
    offsets.push_back(items.size());
  }
  combsel_loss_sets View() const {
    return {offsets.size() - 1, offsets.data(), items.data(),
            conditioning.data(), conditioning.size(), ground.data(),
            ground.size()};
  }
  // T defaults to the union of every class and the conditioning set.
  void DefaultGround() {
    std::set<std::size_t> all(items.begin(), items.end());
    all.insert(conditioning.begin(), conditioning.end());
    ground.assign(all.begin(), all.end());
  }
};

std::vector<std::size_t> IndexList(const json& v, const std::string& what) {
  if (!v.is_array()) Fail(kExitConfig, what + " must be an array of indices");
  std::vector<std::size_t> out;
  for (const json& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0) {
      Fail(kExitConfig, what + " must hold non-negative integers");
    }
    out.push_back(x.get<std::size_t>());
  }
  return out;
}

// {classes: [[...]], unknown: [...] | previous: [...], ground: [...]}
SetsBuffer ParseSets(const json& j, const std::string& mode) {
  if (!j.is_object()) Fail(kExitConfig, "sets file must hold a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "classes" && key != "unknown" && key != "previous" &&
        key != "ground") {
      Fail(kExitConfig, "unknown key '" + key + "' in sets file");
    }
  }
  SetsBuffer sets;
  if (!j.contains("classes") || !j.at("classes").is_array()) {
    Fail(kExitConfig, "sets file needs a 'classes' array");
  }
  for (std::size_t c = 0; c < j.at("classes").size(); ++c) {
    sets.AddClass(IndexList(j.at("classes")[c], "classes[" + std::to_string(c) + "]"));
  }
  const char* key = mode == "iod" ? "previous" : "unknown";
  if (j.contains(key)) sets.conditioning = IndexList(j.at(key), key);
  if (j.contains("ground")) {
    sets.ground = IndexList(j.at("ground"), "ground");
  } else {
    sets.DefaultGround();
  }
  return sets;
}

json ReportJson(const combsel_loss_report* r, const std::string& family,
                bool with_grad) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  const double* grad = combsel_loss_report_grad(r, &rows, &cols);
  json j = {{"family", family},
            {"l_self", combsel_loss_report_self(r)},
            {"l_cross", combsel_loss_report_cross(r)},
            {"l_total", combsel_loss_report_total(r)},
            {"rows", rows},
            {"cols", cols}};
  if (with_grad) j["grad"] = std::vector<double>(grad, grad + rows * cols);
  return j;
}

std::string CsvHeaderComment(const json& config) {
  return "# " + config.dump() + "\n";
}

// ---- select / sweep helpers -------------------------------------------------

struct DiscoveryRun {
  Discovery handle;
  std::vector<std::size_t> Set(combsel_set_kind kind) const {
    const std::size_t* items = nullptr;
    const std::size_t n = combsel_discovery_set(handle.get(), kind, &items);
    return std::vector<std::size_t>(items, items + n);
  }
};

DiscoveryRun Discover(const combsel_embeddings* items,
                      const combsel_embeddings* prototypes,
                      const combsel_discovery_config& config) {
  combsel_discovery* raw = nullptr;
  CheckDiscovery(combsel_discover(items, prototypes, &config, &raw));
  return DiscoveryRun{Discovery(raw)};
}

std::vector<int> TruthOf(const combsel_embeddings* items) {
  const int* labels = combsel_embeddings_labels(items);
  if (labels == nullptr) return {};
  return std::vector<int>(labels, labels + combsel_embeddings_rows(items));
}

}  // namespace

// ---- generate ---------------------------------------------------------------

Command AddGenerate(CLI::App& root) {
  CLI::App* app = root.add_subcommand(
      "generate", "Write a seeded synthetic scene and its known prototypes");
  auto spec_path = std::make_shared<std::string>();
  auto proto_out = std::make_shared<std::string>();
  app->add_option("spec", *spec_path,
                  "Scene spec JSON; the default scene when omitted");
  app->add_option("--prototypes-out", *proto_out,
                  "Prototype CSV path (default <out>_prototypes.csv)");

  return {app, [=](const GlobalOptions& g) {
    json spec = json::object();
    if (!g.config_path.empty()) {
      spec = ReadJsonFile(g.config_path);
      if (!spec.is_object()) Fail(kExitConfig, "config must be a JSON object");
    }
    if (!spec_path->empty()) {
      const json file = ReadJsonFile(*spec_path);
      if (!file.is_object()) Fail(kExitConfig, "spec must be a JSON object");
      spec.merge_patch(file);
    }
    if (g.seed) spec["seed"] = *g.seed;
    if (g.out.empty()) Fail(kExitConfig, "generate requires --out");

    combsel_embeddings* items_raw = nullptr;
    combsel_embeddings* protos_raw = nullptr;
    char* resolved_raw = nullptr;
    Check(combsel_scene_generate(spec.dump().c_str(), &items_raw, &protos_raw,
                                 &resolved_raw));
    Embeddings items(items_raw);
    Embeddings protos(protos_raw);
    const json resolved = json::parse(TakeString(resolved_raw));
    const std::string comment = json{{"command", "generate"}, {"spec", resolved}}.dump();

    const std::string proto_path =
        proto_out->empty() ? DerivedPath(g.out, "_prototypes") : *proto_out;
    Check(combsel_embeddings_save_csv(items.get(), g.out.c_str(), comment.c_str()));
    Check(combsel_embeddings_save_csv(protos.get(), proto_path.c_str(),
                                      comment.c_str()));

    if (!g.quiet) {
      std::size_t known = 0, unknown = 0, background = 0;
      for (int label : TruthOf(items.get())) {
        if (label >= 1) ++known;
        else if (label == 0) ++unknown;
        else ++background;
      }
      const json summary = {
          {"rows", combsel_embeddings_rows(items.get())},
          {"d", combsel_embeddings_cols(items.get())},
          {"seed", resolved.at("seed")},
          {"counts", {{"known", known}, {"unknown", unknown}, {"background", background}}},
          {"prototypes", combsel_embeddings_rows(protos.get())},
          {"out", g.out},
          {"prototypes_out", proto_path}};
      std::cout << summary.dump() << "\n";
    }
    return kExitOk;
  }};
}

// ---- select -----------------------------------------------------------------

Command AddSelect(CLI::App& root) {
  CLI::App* app = root.add_subcommand(
      "select", "Run the discovery pipeline: filter, match, background, unknowns");
  auto items_path = std::make_shared<std::string>();
  auto protos_path = std::make_shared<std::string>();
  auto roles_out = std::make_shared<std::string>();
  auto params = std::make_shared<Params>(DiscoveryDefaults());
  app->add_option("items", *items_path, "Scene CSV with objectness")->required();
  app->add_option("prototypes", *protos_path, "Labelled prototype CSV")->required();
  app->add_option("--roles-out", *roles_out,
                  "Per-item role CSV (default <out>_roles.csv when --out is set)");
  params->Flag<double>(app, "--tau-e", "tau_e", "Objectness threshold (inclusive)");
  params->Flag<double>(app, "--tau-b", "tau_b", "Background budget fraction");
  params->Flag<std::size_t>(app, "--k", "k", "Unknown budget");
  params->Flag<std::string>(app, "--family", "family", "fl | gc | logdet");
  params->Flag<double>(app, "--lambda", "lambda", "GC redundancy weight");
  params->Flag<double>(app, "--nu", "nu", "Conditional-gain query weight");
  params->Flag<double>(app, "--epsilon", "epsilon", "LogDet regularizer");
  params->Switch(app, "--include-background-in-pool",
                 "exclude_background_from_pool", false,
                 "Offer selected background items to the unknown stage");
  params->Switch(app, "--naive", "lazy", false, "Use naive instead of lazy greedy");

  return {app, [=](const GlobalOptions& g) {
    params->Resolve(g.config_path);
    const combsel_discovery_config config = DiscoveryConfigFrom(*params);
    const Embeddings items = LoadEmbeddings(*items_path);
    const Embeddings protos = LoadEmbeddings(*protos_path);
    const DiscoveryRun run = Discover(items.get(), protos.get(), config);

    const std::vector<int> truth = TruthOf(items.get());
    char* raw = nullptr;
    Check(combsel_discovery_to_json(run.handle.get(),
                                    truth.empty() ? nullptr : truth.data(),
                                    truth.size(), &raw));
    json result = json::parse(TakeString(raw));
    json resolved = {{"command", "select"},
                     {"items", *items_path},
                     {"prototypes", *protos_path},
                     {"params", params->values()}};
    if (g.seed) resolved["seed"] = *g.seed;
    result["config"] = resolved;
    WriteText(g.out, result.dump(2) + "\n");

    const std::string roles_path =
        !roles_out->empty() ? *roles_out
                            : (g.out.empty() ? "" : DerivedPath(g.out, "_roles"));
    if (!roles_path.empty()) {
      const std::size_t n = combsel_embeddings_rows(items.get());
      const std::size_t d = combsel_embeddings_cols(items.get());
      const double* data = combsel_embeddings_data(items.get());
      std::vector<std::string> role(n, "rest");
      for (std::size_t i : run.Set(COMBSEL_SET_KNOWN)) role[i] = "known";
      for (std::size_t i : run.Set(COMBSEL_SET_BACKGROUND)) role[i] = "background";
      for (std::size_t i : run.Set(COMBSEL_SET_UNKNOWN)) role[i] = "unknown";
      std::ostringstream csv;
      csv << CsvHeaderComment(resolved) << "index";
      for (std::size_t c = 0; c < d; ++c) csv << ",f" << c;
      csv << ",truth,role\n";
      for (std::size_t i = 0; i < n; ++i) {
        csv << i;
        for (std::size_t c = 0; c < d; ++c) csv << ',' << FormatDouble(data[i * d + c]);
        csv << ',' << (truth.empty() ? std::string() : std::to_string(truth[i]))
            << ',' << role[i] << '\n';
      }
      WriteText(roles_path, csv.str());
    }

    if (!g.quiet && !g.out.empty()) {
      json summary = {{"kept", result["kept"].size()},
                      {"known", result["known"].size()},
                      {"background", result["background"].size()},
                      {"unknown", result["unknown"].size()}};
      if (result.contains("metrics")) summary["metrics"] = result["metrics"];
      std::cout << summary.dump() << "\n";
    }
    return kExitOk;
  }};
}

// ---- loss -------------------------------------------------------------------

Command AddLoss(CLI::App& root) {
  CLI::App* app = root.add_subcommand(
      "loss", "Evaluate the self, cross and total losses with gradients");
  auto inputs = std::make_shared<std::vector<std::string>>();
  auto cases = std::make_shared<bool>(false);
  auto separation = std::make_shared<std::string>();
  auto no_grad = std::make_shared<bool>(false);
  auto params = std::make_shared<Params>(LossDefaults());
  app->add_option("inputs", *inputs, "Embedding CSV and sets JSON")->expected(0, 2);
  app->add_flag("--cases", *cases,
                "Evaluate the separation cases instead of an input file");
  app->add_option("--separation", *separation,
                  "JSON options for the separation cases");
  app->add_flag("--no-grad", *no_grad, "Omit the gradient from the report");
  AddLossFlags(app, *params);

  return {app, [=](const GlobalOptions& g) {
    params->Resolve(g.config_path);
    const std::vector<std::string> families = FamiliesFor(params->String("family"));
    json resolved = {{"command", "loss"}, {"params", params->values()}};

    if (*cases) {
      if (!inputs->empty()) Fail(kExitConfig, "--cases takes no input files");
      json options = separation->empty() ? json::object() : ReadJsonFile(*separation);
      if (!options.is_object()) Fail(kExitConfig, "separation options must be an object");
      if (g.seed) options["seed"] = *g.seed;
      const std::string opt_text = options.dump();
      std::size_t n_cases = 0;
      Check(combsel_separation_count(opt_text.c_str(), &n_cases));
      resolved["separation"] = options;

      std::ostringstream csv;
      csv << CsvHeaderComment(resolved) << "case,family,l_self,l_cross,l_total\n";
      for (std::size_t c = 0; c < n_cases; ++c) {
        combsel_embeddings* raw = nullptr;
        Check(combsel_separation_case(opt_text.c_str(), c, &raw, nullptr));
        const Embeddings e(raw);
        SetsBuffer sets;
        std::vector<std::size_t> known;
        const std::vector<int> labels = TruthOf(e.get());
        for (std::size_t i = 0; i < labels.size(); ++i) {
          (labels[i] >= 1 ? known : sets.conditioning).push_back(i);
        }
        sets.AddClass(known);
        sets.DefaultGround();
        const combsel_loss_sets view = sets.View();
        for (const std::string& family : families) {
          const combsel_loss_config config = LossConfigFrom(*params, family);
          combsel_loss_report* rr = nullptr;
          Check(combsel_loss_evaluate(e.get(), &view, &config, &rr),
                "case " + std::to_string(c + 1) + " " + family);
          const LossReport report(rr);
          csv << (c + 1) << ',' << family << ','
              << FormatDouble(combsel_loss_report_self(report.get())) << ','
              << FormatDouble(combsel_loss_report_cross(report.get())) << ','
              << FormatDouble(combsel_loss_report_total(report.get())) << '\n';
        }
      }
      WriteText(g.out, csv.str());
      return kExitOk;
    }

    if (inputs->size() != 2) {
      Fail(kExitConfig, "loss needs an embedding CSV and a sets JSON (or --cases)");
    }
    const Embeddings e = LoadEmbeddings((*inputs)[0]);
    const SetsBuffer sets = ParseSets(ReadJsonFile((*inputs)[1]), params->String("mode"));
    const combsel_loss_sets view = sets.View();
    resolved["embeddings"] = (*inputs)[0];
    resolved["sets"] = (*inputs)[1];
    json reports = json::array();
    for (const std::string& family : families) {
      const combsel_loss_config config = LossConfigFrom(*params, family);
      combsel_loss_report* rr = nullptr;
      Check(combsel_loss_evaluate(e.get(), &view, &config, &rr), family);
      const LossReport report(rr);
      reports.push_back(ReportJson(report.get(), family, !*no_grad));
    }
    json out = reports.size() == 1 ? reports[0] : json{{"reports", reports}};
    out["config"] = resolved;
    WriteText(g.out, out.dump(2) + "\n");
    return kExitOk;
  }};
}

// ---- gradcheck --------------------------------------------------------------

Command AddGradcheck(CLI::App& root) {
  CLI::App* app = root.add_subcommand(
      "gradcheck", "Compare analytic loss gradients with central differences");
  // "--h" is the step size, so help is long-form only here.
  app->set_help_flag("--help", "Print this help message and exit");
  auto inputs = std::make_shared<std::vector<std::string>>();
  auto random = std::make_shared<bool>(false);
  auto perturb = std::make_shared<double>(0.0);
  json defaults = LossDefaults();
  defaults["h"] = 1e-4;
  defaults["threshold"] = 1e-5;
  defaults["rows"] = 12;
  defaults["cols"] = 4;
  auto params = std::make_shared<Params>(defaults);
  app->add_option("inputs", *inputs, "Embedding CSV and sets JSON")->expected(0, 2);
  app->add_flag("--random", *random,
                "Check a seeded random instance (two classes of 3, 3 unknowns)");
  app->add_flag("--perturb-grad{0.01}", *perturb,
                "Corrupt the analytic gradient (negative control)");
  AddLossFlags(app, *params);
  params->Flag<double>(app, "--h", "h", "Finite-difference step");
  params->Flag<double>(app, "--threshold", "threshold", "Pass iff max_rel_err < threshold");
  params->Flag<std::size_t>(app, "--rows", "rows", "Random instance rows");
  params->Flag<std::size_t>(app, "--cols", "cols", "Random instance columns");

  return {app, [=](const GlobalOptions& g) {
    params->Resolve(g.config_path);
    const std::vector<std::string> families = FamiliesFor(params->String("family"));
    const double h = params->Double("h");
    const double threshold = params->Double("threshold");
    const std::uint64_t seed = g.seed.value_or(0);

    Embeddings e;
    SetsBuffer sets;
    if (*random) {
      if (!inputs->empty()) Fail(kExitConfig, "--random takes no input files");
      const std::size_t rows = params->Count("rows");
      if (rows < 9) Fail(kExitConfig, "random instances need at least 9 rows");
      combsel_embeddings* raw = nullptr;
      Check(combsel_random_embeddings(rows, params->Count("cols"), seed, &raw));
      e.reset(raw);
      sets.AddClass({0, 1, 2});
      sets.AddClass({3, 4, 5});
      sets.conditioning = {6, 7, 8};
      for (std::size_t i = 0; i < rows; ++i) sets.ground.push_back(i);
    } else {
      if (inputs->size() != 2) {
        Fail(kExitConfig, "gradcheck needs an embedding CSV and a sets JSON (or --random)");
      }
      e = LoadEmbeddings((*inputs)[0]);
      sets = ParseSets(ReadJsonFile((*inputs)[1]), params->String("mode"));
    }
    const combsel_loss_sets view = sets.View();

    bool pass = true;
    json results = json::array();
    for (const std::string& family : families) {
      const combsel_loss_config config = LossConfigFrom(*params, family);
      combsel_gradcheck_result r;
      Check(combsel_gradcheck(e.get(), &view, &config, h, seed, *perturb, &r), family);
      const bool ok = r.max_rel_err < threshold;
      pass = pass && ok;
      results.push_back({{"family", family},
                         {"max_abs_err", r.max_abs_err},
                         {"max_rel_err", r.max_rel_err},
                         {"checked", r.checked},
                         {"tie_adjacent", r.tie_adjacent},
                         {"pass", ok}});
    }
    json out = {{"results", results}, {"threshold", threshold}, {"h", h},
                {"pass", pass}};
    if (!g.quiet || !g.out.empty()) WriteText(g.out, out.dump(2) + "\n");
    if (!pass) Fail(kExitCheck, "gradient check failed");
    return kExitOk;
  }};
}

// ---- sweep ------------------------------------------------------------------

Command AddSweep(CLI::App& root) {
  CLI::App* app = root.add_subcommand(
      "sweep", "Re-run discovery and the loss over a one-parameter grid");
  auto items_path = std::make_shared<std::string>();
  auto protos_path = std::make_shared<std::string>();
  auto sweep_path = std::make_shared<std::string>();
  app->add_option("items", *items_path, "Scene CSV with objectness")->required();
  app->add_option("prototypes", *protos_path, "Labelled prototype CSV")->required();
  app->add_option("sweep", *sweep_path,
                  "JSON {parameter, values, base}")->required();

  return {app, [=](const GlobalOptions& g) {
    // Discovery keys plus the loss evaluated on the discovered sets. "nu" is
    // shared; "lambda" and "epsilon" belong to the discovery objective.
    json defaults = DiscoveryDefaults();
    const json loss = LossDefaults();
    defaults["loss_family"] = loss["family"];
    defaults["eta"] = loss["eta"];
    defaults["loss_lambda"] = loss["lambda"];
    defaults["loss_epsilon"] = loss["epsilon"];
    Params base(defaults);
    base.Resolve(g.config_path);

    const json sweep = ReadJsonFile(*sweep_path);
    if (!sweep.is_object()) Fail(kExitConfig, "sweep file must hold a JSON object");
    for (const auto& item : sweep.items()) {
      if (item.key() != "parameter" && item.key() != "values" && item.key() != "base") {
        Fail(kExitConfig, "unknown key '" + item.key() + "' in sweep file");
      }
    }
    if (sweep.contains("base")) {
      if (!sweep["base"].is_object()) Fail(kExitConfig, "'base' must be an object");
      for (const auto& item : sweep["base"].items()) {
        if (!base.values().contains(item.key())) {
          Fail(kExitConfig, "unknown key '" + item.key() + "' in sweep base");
        }
        base.values()[item.key()] = item.value();
      }
    }
    if (!sweep.contains("parameter") || !sweep["parameter"].is_string()) {
      Fail(kExitConfig, "sweep file needs a 'parameter' string");
    }
    const std::string parameter = sweep["parameter"];
    static const std::set<std::string> kSweepable = {"k", "tau_e", "tau_b",
                                                     "eta", "nu", "lambda"};
    if (!kSweepable.count(parameter)) {
      Fail(kExitConfig, "unknown sweep parameter '" + parameter +
                            "' (expected k, tau_e, tau_b, eta, nu or lambda)");
    }
    if (!sweep.contains("values") || !sweep["values"].is_array() ||
        sweep["values"].empty()) {
      Fail(kExitConfig, "sweep file needs a non-empty 'values' array");
    }
    for (const json& v : sweep["values"]) {
      const bool ok = parameter == "k"
                          ? v.is_number_integer() && v.get<long long>() >= 0
                          : v.is_number();
      if (!ok) Fail(kExitConfig, "invalid value in sweep grid for " + parameter);
    }

    const Embeddings items = LoadEmbeddings(*items_path);
    const Embeddings protos = LoadEmbeddings(*protos_path);
    const int* proto_labels = combsel_embeddings_labels(protos.get());
    if (proto_labels == nullptr) Fail(kExitConfig, "prototypes need a label column");
    const std::vector<int> truth = TruthOf(items.get());
    if (truth.empty()) Fail(kExitConfig, "sweep needs truth labels in the scene CSV");

    json resolved = {{"command", "sweep"},
                     {"items", *items_path},
                     {"prototypes", *protos_path},
                     {"parameter", parameter},
                     {"values", sweep["values"]},
                     {"base", base.values()}};
    if (g.seed) resolved["seed"] = *g.seed;

    std::ostringstream csv;
    csv << CsvHeaderComment(resolved)
        << "parameter,value,n_kept,n_known,n_background,n_unknown,purity,"
           "coverage,mean_sim_to_known,mean_sim_to_background,pool_prevalence,"
           "l_self,l_cross,l_total\n";
    for (const json& value : sweep["values"]) {
      Params point = base;
      point.values()[parameter] = value;
      const combsel_discovery_config config = DiscoveryConfigFrom(point);
      const DiscoveryRun run = Discover(items.get(), protos.get(), config);
      combsel_coverage_metrics m;
      Check(combsel_discovery_metrics(run.handle.get(), truth.data(), truth.size(), &m));

      // Classes: matched knowns grouped by their prototype's label.
      const std::vector<std::size_t> known = run.Set(COMBSEL_SET_KNOWN);
      std::map<int, std::vector<std::size_t>> by_label;
      for (std::size_t p = 0; p < known.size(); ++p) {
        by_label[proto_labels[p]].push_back(known[p]);
      }
      SetsBuffer sets;
      for (auto& [label, members] : by_label) {
        std::sort(members.begin(), members.end());
        sets.AddClass(members);
      }
      sets.conditioning = run.Set(COMBSEL_SET_UNKNOWN);
      std::sort(sets.conditioning.begin(), sets.conditioning.end());
      sets.DefaultGround();
      const combsel_loss_sets view = sets.View();

      combsel_loss_config lc;
      combsel_loss_config_default(&lc);
      lc.family = ParseFamilyOrFail(point.String("loss_family"));
      lc.eta = point.Double("eta");
      lc.lambda = point.Double("loss_lambda");
      lc.nu = point.Double("nu");
      lc.epsilon = point.Double("loss_epsilon");
      std::string l_self = "nan", l_cross = "nan", l_total = "nan";
      if (sets.conditioning.empty()) {
        double s = 0.0;
        Check(combsel_loss_self(items.get(), &view, &lc, &s));
        l_self = FormatDouble(s);
      } else {
        combsel_loss_report* rr = nullptr;
        const combsel_status status = combsel_loss_evaluate(items.get(), &view, &lc, &rr);
        if (status == COMBSEL_ERR_NUMERIC) {
          std::cerr << "warning: loss at " << parameter << "=" << value.dump()
                    << ": " << combsel_last_error() << "\n";
        } else {
          Check(status);
          const LossReport report(rr);
          l_self = FormatDouble(combsel_loss_report_self(report.get()));
          l_cross = FormatDouble(combsel_loss_report_cross(report.get()));
          l_total = FormatDouble(combsel_loss_report_total(report.get()));
        }
      }

      csv << parameter << ','
          << (value.is_number_integer() ? value.dump() : FormatDouble(value.get<double>()))
          << ',' << run.Set(COMBSEL_SET_KEPT).size() << ',' << known.size() << ','
          << run.Set(COMBSEL_SET_BACKGROUND).size() << ','
          << run.Set(COMBSEL_SET_UNKNOWN).size() << ',' << FormatDouble(m.purity)
          << ',' << FormatDouble(m.coverage) << ','
          << FormatDouble(m.mean_sim_to_known) << ','
          << FormatDouble(m.mean_sim_to_background) << ','
          << FormatDouble(m.pool_prevalence) << ',' << l_self << ',' << l_cross
          << ',' << l_total << '\n';
    }
    WriteText(g.out, csv.str());
    return kExitOk;
  }};
}

}  // namespace cli
