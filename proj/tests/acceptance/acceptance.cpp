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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Criteria 1-3 and 5-7 run in process; 4, 8 and 9
// drive the command-line tool against the shipped data.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "common/instances.hpp"
#include "common/oracles.hpp"
#include "core/kernel.hpp"
#include "discover/discovery.hpp"
#include "discover/hungarian.hpp"
#include "json.hpp"
#include "learn/losses.hpp"
#include "maximize/maximize.hpp"
#include "submodular/objective.hpp"
#include "synth/scene.hpp"

namespace {

using namespace combsel;
namespace fs = std::filesystem;
using testing_support::Instance;
using testing_support::RandomInstance;
using testing_support::RandomSubset;
using testing_support::Range;
using testing_support::ToIndexSet;

// Pinned tolerances and budgets.
constexpr double kSubmodularTol = 1e-9;
constexpr double kIdentityTol = 1e-9;
constexpr double kGradRelTol = 1e-5;
constexpr double kGradStep = 1e-4;
constexpr double kScaleTol = 1e-9;
constexpr double kAssignmentTol = 1e-9;
constexpr double kGreedyRatio = 1.0 - 1.0 / 2.718281828459045;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Context {
  std::string cli;
  std::string data;
  fs::path scratch;
};

// ---- Criterion 1 -----------------------------------------------------------

struct FamilyCase {
  Family family;
  double lambda;
  std::string name;
};

Outcome Submodularity(const Context&) {
  const std::vector<FamilyCase> cases = {
      {Family::kFacilityLocation, 0.5, "fl"},
      {Family::kGraphCut, 0.25, "gc(0.25)"},
      {Family::kGraphCut, 0.5, "gc(0.5)"},
      {Family::kGraphCut, 1.0, "gc(1)"},
      {Family::kLogDeterminant, 0.5, "logdet"},
  };
  Outcome out;
  std::size_t violations = 0;
  double worst = 0.0;
  for (const FamilyCase& fc : cases) {
    std::mt19937_64 rng(std::hash<std::string>{}(fc.name) ^ 0x5eed);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 2 + rng() % 19;
      const Instance inst = RandomInstance(fc.family, n, rng);
      ObjectiveParams params;
      params.lambda = fc.lambda;
      params.epsilon = 1e-4;
      const SubmodularObjective f(fc.family, inst.kernel, ToIndexSet(Range(n)), params);
      auto value = [&](const oracle::Set& s) { return Evaluate(f, ToIndexSet(s)); };
      for (int rep = 0; rep < 10; ++rep) {
        const oracle::Set b = RandomSubset(n, 0.5, rng);
        oracle::Set a;
        for (std::size_t x : b) {
          if (rng() % 2) a.push_back(x);
        }
        for (std::size_t v = 0; v < n; ++v) {
          if (std::find(b.begin(), b.end(), v) != b.end()) continue;
          const double ga = value(oracle::Union(a, {v})) - value(a);
          const double gb = value(oracle::Union(b, {v})) - value(b);
          worst = std::max(worst, gb - ga);
          violations += gb > ga + kSubmodularTol;
        }
        const oracle::Set c = RandomSubset(n, 0.5, rng);
        const double lhs = value(b) + value(c);
        const double rhs = value(oracle::Union(b, c)) + value(oracle::Intersect(b, c));
        worst = std::max(worst, rhs - lhs);
        violations += rhs > lhs + kSubmodularTol;
      }
    }
  }
  out.pass = violations == 0;
  std::ostringstream d;
  d << "5 families x 500 instances, violations " << violations << ", worst excess " << worst;
  out.detail = d.str();
  return out;
}

// ---- Criterion 2 -----------------------------------------------------------

Outcome ConditionalGainIdentity(const Context&) {
  Outcome out;
  // Worked 3 x 3 kernel.
  auto worked = std::make_shared<const SimilarityKernel>(
      3, std::vector<double>{1, .5, .2, .5, 1, .4, .2, .4, 1}, KernelTransform::kRawCosine, 0.0);
  const IndexSet all{0, 1, 2};
  ObjectiveParams p;
  p.lambda = 0.5;
  p.epsilon = 0.0;
  const double gc = ConditionalGainClosed(
      SubmodularObjective(Family::kGraphCut, worked, all, p), {0}, {1});
  const double fl = ConditionalGainClosed(
      SubmodularObjective(Family::kFacilityLocation, worked, all, p), {0}, {1});
  const double ld = ConditionalGainClosed(
      SubmodularObjective(Family::kLogDeterminant, worked, all, p), {0}, {1});
  const bool worked_ok = std::abs(gc - 0.7) < kIdentityTol && std::abs(fl - 0.5) < kIdentityTol &&
                         std::abs(ld - std::log(0.75)) < kIdentityTol;

  double worst = 0.0;
  for (Family family : {Family::kFacilityLocation, Family::kGraphCut, Family::kLogDeterminant}) {
    std::mt19937_64 rng(1000 + static_cast<int>(family));
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 2 + rng() % 14;
      const Instance inst = RandomInstance(family, n, rng);
      ObjectiveParams params;
      params.lambda = 0.5;
      params.epsilon = 1e-4;
      const SubmodularObjective f(family, inst.kernel, ToIndexSet(Range(n)), params);
      const oracle::Set q = RandomSubset(n, 0.4, rng);
      oracle::Set a;
      for (std::size_t v = 0; v < n; ++v) {
        if (std::find(q.begin(), q.end(), v) == q.end() && rng() % 2) a.push_back(v);
      }
      const double closed = ConditionalGainClosed(f, ToIndexSet(a), ToIndexSet(q));
      const double def = ConditionalGainDefinitional(f, ToIndexSet(a), ToIndexSet(q));
      worst = std::max(worst, std::abs(closed - def));
    }
  }
  out.pass = worked_ok && worst < kIdentityTol;
  std::ostringstream d;
  d << "worked GC " << gc << " FL " << fl << " LogDet " << ld << "; 3 x 500 instances, max |closed - def| "
    << worst;
  out.detail = d.str();
  return out;
}

// ---- Criterion 3 -----------------------------------------------------------

Outcome GreedyGuarantee(const Context&) {
  Outcome out;
  std::mt19937_64 rng(33);
  double worst_ratio = INFINITY;
  std::size_t below = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 13;
    const std::size_t k = 1 + rng() % 4;
    const Instance inst = RandomInstance(Family::kFacilityLocation, n, rng);
    const SubmodularObjective f(Family::kFacilityLocation, inst.kernel, ToIndexSet(Range(n)));
    const IndexSet candidates = ToIndexSet(Range(n));
    const double greedy = GreedyMax(f, candidates, k).objective_value;
    const double best = BruteForceOpt(f, candidates, k).objective_value;
    if (best > 0) worst_ratio = std::min(worst_ratio, greedy / best);
    below += greedy < kGreedyRatio * best - 1e-12;
  }
  std::size_t mismatches = 0;
  for (Family family : {Family::kFacilityLocation, Family::kGraphCut, Family::kLogDeterminant}) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 3 + rng() % 25;
      const Instance inst = RandomInstance(family, n, rng);
      const SubmodularObjective f(family, inst.kernel, ToIndexSet(Range(n)));
      const oracle::Set q = RandomSubset(n, 0.2, rng);
      oracle::Set cand;
      for (std::size_t v = 0; v < n; ++v) {
        if (std::find(q.begin(), q.end(), v) == q.end()) cand.push_back(v);
      }
      const std::size_t k = rng() % (n + 1);
      const SelectionResult a = GreedyMax(f, ToIndexSet(cand), k, ToIndexSet(q));
      const SelectionResult b = LazyGreedyMax(f, ToIndexSet(cand), k, ToIndexSet(q));
      mismatches += a.selected.items() != b.selected.items() || a.gains != b.gains;
    }
  }
  out.pass = below == 0 && mismatches == 0;
  std::ostringstream d;
  d << "200 FL instances, min greedy/opt " << worst_ratio << " (bound " << kGreedyRatio
    << "); lazy vs naive mismatches " << mismatches << " / 600";
  out.detail = d.str();
  return out;
}

// ---- CLI helpers -----------------------------------------------------------

int RunCli(const Context& ctx, const std::string& args, const std::string& stdout_file) {
  const std::string cmd = "\"" + ctx.cli + "\" " + args + " > \"" +
                          (ctx.scratch / stdout_file).string() + "\" 2> \"" +
                          (ctx.scratch / "stderr.txt").string() + "\"";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Quoted(const std::string& s) { return "\"" + s + "\""; }

// ---- Criterion 4 -----------------------------------------------------------

Outcome ShippedSceneSelection(const Context& ctx) {
  Outcome out;
  const std::string args = "select " + Quoted(ctx.data + "/shipped_scene.csv") + " " +
                           Quoted(ctx.data + "/shipped_scene_prototypes.csv") +
                           " --tau-e 0.2 --tau-b 0.3 --k 10 --family gc";
  const int code = RunCli(ctx, args, "c4.json");
  if (code != 0) return {false, "select exited with " + std::to_string(code)};
  const nlohmann::json j = nlohmann::json::parse(Slurp(ctx.scratch / "c4.json"));
  auto to_set = [](const nlohmann::json& a) {
    return IndexSet(a.get<std::vector<Index>>());
  };
  const IndexSet kept = to_set(j["kept"]);
  const IndexSet known = to_set(j["known"]);
  const IndexSet background = to_set(j["background"]);
  const IndexSet unknown = to_set(j["unknown"]);
  const std::size_t pool = kept.size() - known.size();
  const std::size_t budget = static_cast<std::size_t>(std::floor(0.30 * pool + 1e-9));
  const double purity = j["metrics"]["purity"];
  const double prevalence = j["metrics"]["pool_prevalence"];
  out.pass = unknown.size() == 10 && background.size() == budget && Disjoint(known, background) &&
             Disjoint(known, unknown) && Disjoint(background, unknown) && purity > prevalence;
  std::ostringstream d;
  d << "|U| " << unknown.size() << ", |B| " << background.size() << " (floor(0.3 * " << pool
    << ") = " << budget << "), purity " << purity << " vs prevalence " << prevalence;
  out.detail = d.str();
  return out;
}

// ---- Criterion 5 -----------------------------------------------------------

Outcome GradientSuite(const Context&) {
  Outcome out;
  std::ostringstream d;
  bool identity_ok = true;
  double worst_scale = 0.0;
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> factor(0.2, 5.0);
  for (Family family : {Family::kFacilityLocation, Family::kGraphCut, Family::kLogDeterminant}) {
    double worst = 0.0;
    std::size_t ties = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      // 14 items in 8 dimensions: classes {0,1,2} and {3,4,5}, U = {6,7,8},
      // T = {0..11}; rows 12 and 13 are outside every set.
      const EmbeddingSet e = RandomGaussian(14, 8, 5000 + seed);
      LossSets sets;
      sets.classes = {{0, 1, 2}, {3, 4, 5}};
      sets.conditioning = {6, 7, 8};
      sets.ground = IndexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
      LossConfig config;
      config.family = family;
      config.eta = 0.5 + 0.5 * (seed % 3);
      config.nu = 0.5 + 0.25 * (seed % 3);
      const GradCheckResult r = FiniteDifferenceCheck(e, sets, config, kGradStep, seed);
      worst = std::max(worst, r.max_rel_err);
      ties += r.tie_adjacent;

      const LossReport rep = LossTotal(e, sets, config);
      identity_ok = identity_ok && rep.l_total == rep.l_self - config.eta * rep.l_cross;

      std::vector<double> data(e.data().begin(), e.data().end());
      for (std::size_t i = 0; i < e.rows(); ++i) {
        const double c = factor(rng);
        for (std::size_t j = 0; j < e.cols(); ++j) data[i * e.cols() + j] *= c;
      }
      const LossReport scaled = LossTotal(e.WithData(data), sets, config);
      worst_scale = std::max({worst_scale, std::abs(scaled.l_self - rep.l_self),
                              std::abs(scaled.l_cross - rep.l_cross),
                              std::abs(scaled.l_total - rep.l_total)});
    }
    out.pass = out.pass && worst < kGradRelTol;
    d << FamilyName(family) << " max rel err " << worst << " (tie-adjacent " << ties << "); ";
  }
  out.pass = out.pass && identity_ok && worst_scale < kScaleTol;
  d << "identity " << (identity_ok ? "exact" : "violated") << ", scale drift " << worst_scale;
  out.detail = d.str();
  return out;
}

// ---- Criterion 6 -----------------------------------------------------------

Outcome SeparationProperty(const Context&) {
  Outcome out;
  SeparationOptions options;
  options.seed = 0;
  const std::vector<SeparationCase> cases = GenerateSeparationCases(options);
  std::ostringstream d;
  for (Family family : {Family::kFacilityLocation, Family::kGraphCut}) {
    LossConfig config;
    config.family = family;
    d << FamilyName(family) << " l_cross";
    double previous = -INFINITY;
    for (const SeparationCase& sc : cases) {
      const LossSets sets{{sc.known}, sc.unknown, Union(sc.known, sc.unknown).Sorted()};
      const double cross = LossCross(sc.embeddings, sets, config);
      out.pass = out.pass && cross >= previous;
      previous = cross;
      d << " " << cross;
    }
    d << "; ";
  }
  d << "selected-unknown mean cosine to knowns";
  double previous = INFINITY;
  for (const SeparationCase& sc : cases) {
    DiscoveryConfig dc;
    auto kernel = std::make_shared<const SimilarityKernel>(DiscoveryKernel(sc.embeddings, dc));
    const IndexSet all = Union(sc.known, sc.unknown).Sorted();
    const SubmodularObjective f(dc.family, kernel, all, dc.params);
    const SelectionResult sel = SelectUnknowns(f, sc.unknown, sc.known, {}, dc.k);
    const SimilarityKernel raw = CosineKernel(sc.embeddings, KernelTransform::kRawCosine);
    double total = 0.0;
    for (Index u : sel.selected) {
      for (Index k : sc.known) total += raw(u, k);
    }
    const double mean = total / static_cast<double>(sel.selected.size() * sc.known.size());
    out.pass = out.pass && mean < previous;
    previous = mean;
    d << " " << mean;
  }
  out.detail = d.str();
  return out;
}

// ---- Criterion 7 -----------------------------------------------------------

Outcome HungarianOracle(const Context&) {
  Outcome out;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t rows = 1 + rng() % 8;
    std::size_t cols = 1 + rng() % 8;
    if (std::min(rows, cols) > 7) rows = 7;
    std::vector<double> cost(rows * cols);
    const bool integral = trial % 4 == 0;  // integer costs force ties
    for (double& c : cost) c = integral ? static_cast<double>(rng() % 4) : value(rng);
    const Assignment a = HungarianAssign(cost, rows, cols);
    const double brute = oracle::BruteAssignment(cost, rows, cols);
    worst = std::max(worst, std::abs(a.cost - brute));
  }
  out.pass = worst < kAssignmentTol;
  std::ostringstream d;
  d << "1000 matrices, max |hungarian - brute| " << worst;
  out.detail = d.str();
  return out;
}

// ---- Criterion 8 -----------------------------------------------------------

Outcome Determinism(const Context& ctx) {
  Outcome out;
  const std::string items = Quoted(ctx.data + "/shipped_scene.csv");
  const std::string protos = Quoted(ctx.data + "/shipped_scene_prototypes.csv");
  struct Job {
    std::string name;
    std::function<std::string(const std::string&)> args;
    std::vector<std::string> suffixes;
  };
  const std::vector<Job> jobs = {
      {"generate",
       [&](const std::string& o) {
         return "generate " + Quoted(ctx.data + "/shipped_scene.json") + " --out " + Quoted(o + ".csv");
       },
       {".csv", "_prototypes.csv"}},
      {"select", [&](const std::string& o) { return "select " + items + " " + protos + " --out " + Quoted(o + ".json"); },
       {".json", "_roles.csv"}},
      {"loss",
       [&](const std::string& o) {
         return "loss " + items + " " + Quoted(ctx.data + "/shipped_sets.json") +
                " --family all --out " + Quoted(o + ".json");
       },
       {".json"}},
      {"loss-cases", [&](const std::string& o) { return "loss --cases --family all --out " + Quoted(o + ".csv"); },
       {".csv"}},
      {"sweep",
       [&](const std::string& o) {
         return "sweep " + items + " " + protos + " " + Quoted(ctx.data + "/sweep_tau_e.json") +
                " --out " + Quoted(o + ".csv");
       },
       {".csv"}},
  };
  std::vector<std::string> failed;
  for (const Job& job : jobs) {
    bool same = true;
    for (int run = 0; run < 2; ++run) {
      const std::string stem = (ctx.scratch / (job.name + "_" + std::to_string(run))).string();
      same = same && RunCli(ctx, job.args(stem), job.name + ".stdout") == 0;
    }
    for (const std::string& suffix : job.suffixes) {
      const std::string a = Slurp(ctx.scratch / (job.name + "_0" + suffix));
      const std::string b = Slurp(ctx.scratch / (job.name + "_1" + suffix));
      same = same && !a.empty() && a == b;
    }
    if (!same) failed.push_back(job.name);
  }
  out.pass = failed.empty();
  out.detail = "generate, select, loss, sweep re-runs";
  for (const std::string& f : failed) out.detail += "; differs: " + f;
  if (failed.empty()) out.detail += " byte-identical";
  return out;
}

// ---- Criterion 9 -----------------------------------------------------------

Outcome SweepGrids(const Context& ctx) {
  Outcome out;
  std::ostringstream d;
  for (const std::string parameter : {"k", "tau_e", "tau_b", "eta"}) {
    const std::string grid_path = ctx.data + "/sweep_" + parameter + ".json";
    const nlohmann::json grid = nlohmann::json::parse(Slurp(grid_path));
    const std::string out_file = (ctx.scratch / ("sweep_" + parameter + ".csv")).string();
    const int code = RunCli(ctx,
                            "sweep " + Quoted(ctx.data + "/shipped_scene.csv") + " " +
                                Quoted(ctx.data + "/shipped_scene_prototypes.csv") + " " +
                                Quoted(grid_path) + " --out " + Quoted(out_file),
                            "sweep.stdout");
    std::istringstream in(Slurp(out_file));
    std::string line;
    std::vector<double> values;
    bool header = false;
    bool labelled = true;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!header) {
        header = true;
        continue;
      }
      const std::size_t c1 = line.find(',');
      const std::size_t c2 = line.find(',', c1 + 1);
      labelled = labelled && line.substr(0, c1) == parameter;
      values.push_back(std::stod(line.substr(c1 + 1, c2 - c1 - 1)));
    }
    const std::vector<double> want = grid["values"].get<std::vector<double>>();
    const bool ok = code == 0 && labelled && values == want;
    out.pass = out.pass && ok;
    d << parameter << " " << values.size() << "/" << want.size() << " rows" << (ok ? "" : " MISMATCH")
      << "; ";
  }
  const nlohmann::json k = nlohmann::json::parse(Slurp(ctx.data + "/sweep_k.json"));
  const std::vector<double> kv = k["values"].get<std::vector<double>>();
  const bool k_span = !kv.empty() && kv.front() == 0 && kv.back() == 100;
  out.pass = out.pass && k_span;
  d << "k grid spans [0, 100]: " << (k_span ? "yes" : "no");
  out.detail = d.str();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  Context ctx;
  app.add_option("--cli", ctx.cli, "Path to the combsel tool")->required();
  app.add_option("--data", ctx.data, "Shipped data directory")->required();
  CLI11_PARSE(app, argc, argv);

  ctx.scratch = fs::temp_directory_path() / ("combsel_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(ctx.scratch);
  fs::create_directories(ctx.scratch);

  struct Criterion {
    int id;
    std::string name;
    double budget_s;  // 0 = no runtime bound
    std::function<Outcome(const Context&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "submodularity", 10, Submodularity},
      {2, "conditional-gain identity", 10, ConditionalGainIdentity},
      {3, "greedy guarantee", 60, GreedyGuarantee},
      {4, "shipped-scene selection", 5, ShippedSceneSelection},
      {5, "gradient suite", 120, GradientSuite},
      {6, "separation property", 10, SeparationProperty},
      {7, "hungarian oracle", 10, HungarianOracle},
      {8, "determinism", 0, Determinism},
      {9, "sweep grids", 0, SweepGrids},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.budget_s == 0 || seconds < c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::ostringstream t;
    t.precision(3);
    t << std::fixed << seconds << " s";
    if (c.budget_s > 0) t << " / " << c.budget_s << " s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): "
              << o.detail << " [" << t.str() << "]" << std::endl;
  }
  fs::remove_all(ctx.scratch);
  return failures == 0 ? 0 : 1;
}
