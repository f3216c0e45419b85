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

#include <cmath>
#include <memory>
#include <random>

#include "../common/instances.hpp"
#include "../common/oracles.hpp"
#include "core/error.hpp"
#include "doctest.h"
#include "submodular/marginal.hpp"
#include "submodular/objective.hpp"

namespace combsel {
namespace {

using testing_support::Instance;
using testing_support::OracleValue;
using testing_support::RandomInstance;
using testing_support::RandomSubset;
using testing_support::ToIndexSet;

constexpr Family kFamilies[] = {Family::kFacilityLocation, Family::kGraphCut,
                                Family::kLogDeterminant};

std::shared_ptr<const SimilarityKernel> WorkedKernel(double epsilon = 0.0) {
  return std::make_shared<const SimilarityKernel>(
      3, std::vector<double>{1, .5, .2, .5, 1, .4, .2, .4, 1},
      KernelTransform::kRawCosine, epsilon);
}

SubmodularObjective Worked(Family family, double lambda = 0.5, double eps = 0.0) {
  return SubmodularObjective(family, WorkedKernel(), {0, 1, 2},
                             ObjectiveParams{lambda, 1.0, eps});
}

TEST_CASE("family names") {
  CHECK(ParseFamily("flcg") == Family::kFacilityLocation);
  CHECK(ParseFamily("gccg") == Family::kGraphCut);
  CHECK(ParseFamily("logdet") == Family::kLogDeterminant);
  CHECK(FamilyName(Family::kGraphCut) == "gc");
  CHECK_THROWS_AS(ParseFamily("coverage"), Error);
}

TEST_CASE("objective validation") {
  CHECK_THROWS_AS(SubmodularObjective(Family::kGraphCut, WorkedKernel(), {0},
                                      ObjectiveParams{-0.1, 1.0, 0.0}),
                  Error);
  CHECK_THROWS_AS(SubmodularObjective(Family::kFacilityLocation, WorkedKernel(), {5}),
                  Error);
  CHECK_THROWS_AS(SubmodularObjective(Family::kFacilityLocation, nullptr, {0}), Error);
}

TEST_CASE("evaluate on the worked 3x3 kernel") {
  CHECK(Evaluate(Worked(Family::kFacilityLocation), {0}) == doctest::Approx(1.7));
  CHECK(Evaluate(Worked(Family::kFacilityLocation), {}) == 0.0);
  CHECK(Evaluate(Worked(Family::kGraphCut), {0}) == doctest::Approx(1.2));
  CHECK(Evaluate(Worked(Family::kGraphCut), {}) == 0.0);
  CHECK(Evaluate(Worked(Family::kLogDeterminant), {0, 1}) ==
        doctest::Approx(std::log(0.75)));
  CHECK(Evaluate(Worked(Family::kLogDeterminant), {}) == 0.0);
}

TEST_CASE("log-det singular submatrix") {
  const auto dup = std::make_shared<const SimilarityKernel>(
      2, std::vector<double>{1, 1, 1, 1}, KernelTransform::kRawCosine, 0.0);
  const SubmodularObjective obj(Family::kLogDeterminant, dup, {0, 1},
                                ObjectiveParams{0.5, 1.0, 0.0});
  CHECK_THROWS_WITH(Evaluate(obj, {0, 1}), "singular kernel submatrix");
  const SubmodularObjective reg(Family::kLogDeterminant, dup, {0, 1},
                                ObjectiveParams{0.5, 1.0, 1e-4});
  CHECK(std::isfinite(Evaluate(reg, {0, 1})));
}

TEST_CASE("total information") {
  const auto fl = Worked(Family::kFacilityLocation);
  CHECK(TotalInformation(fl, {}) == 0.0);
  const std::vector<IndexSet> two{{0}, {1}};
  CHECK(TotalInformation(fl, two) == doctest::Approx(3.6));
  const std::vector<IndexSet> one{{0, 1, 2}};
  CHECK(TotalInformation(fl, one) == Evaluate(fl, {0, 1, 2}));
}

TEST_CASE("conditional gain worked values") {
  for (Family f : kFamilies) {
    const auto obj = Worked(f);
    CHECK(ConditionalGainDefinitional(obj, {0}, {}) == Evaluate(obj, {0}));
  }
  const auto gc = Worked(Family::kGraphCut);
  const auto fl = Worked(Family::kFacilityLocation);
  const auto ld = Worked(Family::kLogDeterminant);
  CHECK(ConditionalGainDefinitional(gc, {0}, {1}) == doctest::Approx(0.7));
  CHECK(ConditionalGainDefinitional(fl, {0}, {1}) == doctest::Approx(0.5));
  CHECK(ConditionalGainClosed(gc, {0}, {1}) == doctest::Approx(0.7));
  CHECK(ConditionalGainClosed(fl, {0}, {1}) == doctest::Approx(0.5));
  CHECK(ConditionalGainClosed(ld, {0}, {1}) == doctest::Approx(std::log(0.75)));
  CHECK(ConditionalGainDefinitional(ld, {0}, {1}) == doctest::Approx(std::log(0.75)));
  CHECK_THROWS_WITH(ConditionalGainDefinitional(gc, {0, 1}, {1}),
                    "conditioning sets overlap");
  CHECK_THROWS_AS(ConditionalGainClosed(gc, {0, 1}, {1}), Error);
}

TEST_CASE("closed form with nu != 1 follows the weighted formulas") {
  const SubmodularObjective gc(Family::kGraphCut, WorkedKernel(), {0, 1, 2},
                               ObjectiveParams{0.5, 0.5, 0.0});
  // f({0}) - 2 * 0.5 * 0.5 * 0.5
  CHECK(ConditionalGainClosed(gc, {0}, {1}) == doctest::Approx(1.2 - 0.25));
  const SubmodularObjective fl(Family::kFacilityLocation, WorkedKernel(), {0, 1, 2},
                               ObjectiveParams{0.5, 0.5, 0.0});
  // rows: max(1 - .25, 0) + max(.5 - .5, 0) + max(.2 - .2, 0)
  CHECK(ConditionalGainClosed(fl, {0}, {1}) == doctest::Approx(0.75));
  const SubmodularObjective ld(Family::kLogDeterminant, WorkedKernel(), {0, 1, 2},
                               ObjectiveParams{0.5, 0.5, 0.0});
  CHECK(ConditionalGainClosed(ld, {0}, {1}) == doctest::Approx(std::log(1 - 0.25 * 0.25)));
}

TEST_CASE("marginal gains on the worked kernel") {
  MarginalState fl(Worked(Family::kFacilityLocation));
  CHECK(fl.Gain(1) == doctest::Approx(1.9));
  fl.Commit(1);
  CHECK(fl.Gain(2) == doctest::Approx(0.6));
  CHECK_THROWS_WITH(fl.Gain(1), "element already selected");
  CHECK_THROWS_WITH(fl.Commit(1), "element already selected");

  const MarginalState gc(Worked(Family::kGraphCut));
  CHECK(gc.Gain(0) == doctest::Approx(1.2));

  const MarginalState ld(Worked(Family::kLogDeterminant));
  const MarginalState ld1 = ld.Committed(0);
  CHECK(ld1.Gain(1) == doctest::Approx(std::log(0.75)));
  CHECK(ld.selected().empty());  // Committed leaves the source untouched
}

TEST_CASE("log-det gain is -inf on a singular extension") {
  const auto dup = std::make_shared<const SimilarityKernel>(
      2, std::vector<double>{1, 1, 1, 1}, KernelTransform::kRawCosine, 0.0);
  MarginalState st(SubmodularObjective(Family::kLogDeterminant, dup, {0, 1},
                                       ObjectiveParams{0.5, 1.0, 0.0}));
  st.Commit(0);
  CHECK(std::isinf(st.Gain(1)));
  CHECK(st.Gain(1) < 0);
  CHECK_THROWS_AS(st.Commit(1), Error);
}

TEST_CASE("evaluate matches the oracle on random instances") {
  std::mt19937_64 rng(101);
  for (Family f : kFamilies) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + trial % 12;
      const Instance inst = RandomInstance(f, n, rng);
      const auto ground = RandomSubset(n, 0.7, rng);
      const ObjectiveParams params{0.25 + 0.25 * (trial % 3), 1.0, 1e-4};
      const SubmodularObjective obj(f, inst.kernel, ToIndexSet(ground), params);
      const auto a = RandomSubset(n, 0.5, rng);
      CHECK(std::abs(Evaluate(obj, ToIndexSet(a)) -
                     OracleValue(f, inst, ground, a, params)) < 1e-9);
    }
  }
}

TEST_CASE("submodularity properties on random instances") {
  std::mt19937_64 rng(202);
  for (Family f : kFamilies) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 3 + trial % 10;
      const Instance inst = RandomInstance(f, n, rng);
      const auto ground = testing_support::Range(n);
      const SubmodularObjective obj(f, inst.kernel, ToIndexSet(ground),
                                    ObjectiveParams{0.5, 1.0, 1e-4});
      const auto a = RandomSubset(n, 0.3, rng);
      auto b = oracle::Union(a, RandomSubset(n, 0.3, rng));
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t v = pick(rng);
      if (std::find(b.begin(), b.end(), v) != b.end()) continue;
      const auto f_ = [&](const oracle::Set& s) { return Evaluate(obj, ToIndexSet(s)); };
      const double gain_a = f_(oracle::Union(a, {v})) - f_(a);
      const double gain_b = f_(oracle::Union(b, {v})) - f_(b);
      CHECK(gain_a >= gain_b - 1e-9);

      const auto c = RandomSubset(n, 0.5, rng);
      CHECK(f_(a) + f_(c) >= f_(oracle::Union(a, c)) + f_(oracle::Intersect(a, c)) - 1e-9);
      if (f == Family::kFacilityLocation) CHECK(f_(a) <= f_(b) + 1e-9);
    }
  }
}

TEST_CASE("closed-form conditional gain equals the definition at nu = 1") {
  std::mt19937_64 rng(303);
  for (Family f : kFamilies) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 2 + trial % 12;
      const Instance inst = RandomInstance(f, n, rng);
      const SubmodularObjective obj(f, inst.kernel,
                                    ToIndexSet(testing_support::Range(n)),
                                    ObjectiveParams{0.5, 1.0, 1e-4});
      oracle::Set a, q;
      std::uniform_int_distribution<int> role(0, 2);
      for (std::size_t i = 0; i < n; ++i) {
        const int r = role(rng);
        if (r == 0) a.push_back(i);
        if (r == 1) q.push_back(i);
      }
      const double closed = ConditionalGainClosed(obj, ToIndexSet(a), ToIndexSet(q));
      const double defn = ConditionalGainDefinitional(obj, ToIndexSet(a), ToIndexSet(q));
      CHECK(std::abs(closed - defn) < 1e-9);
    }
  }
}

TEST_CASE("incremental state matches from-scratch evaluation") {
  std::mt19937_64 rng(404);
  for (Family f : kFamilies) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 2 + trial % 14;
      const Instance inst = RandomInstance(f, n, rng);
      const auto ground = RandomSubset(n, 0.8, rng);
      const ObjectiveParams params{0.5, 1.0, 1e-4};
      const SubmodularObjective obj(f, inst.kernel, ToIndexSet(ground), params);
      MarginalState state(obj);
      auto order = testing_support::Range(n);
      std::shuffle(order.begin(), order.end(), rng);
      oracle::Set chosen;
      for (std::size_t v : order) {
        const double before = state.value();
        const double gain = state.Gain(v);
        state.Commit(v);
        chosen.push_back(v);
        CHECK(std::abs(state.value() - before - gain) < 1e-12);
        CHECK(std::abs(state.value() - OracleValue(f, inst, ground, chosen, params)) < 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace combsel
