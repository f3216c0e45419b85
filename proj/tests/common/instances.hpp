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

// Seeded random objective instances shared by unit and acceptance tests. The
// kernel handed to the library is built from the oracle's own matrix so both
// sides see identical numbers.

#ifndef COMBSEL_TESTS_COMMON_INSTANCES_HPP_
#define COMBSEL_TESTS_COMMON_INSTANCES_HPP_

#include <memory>
#include <random>

#include "core/kernel.hpp"
#include "oracles.hpp"
#include "submodular/objective.hpp"

namespace testing_support {

struct Instance {
  std::size_t n = 0;
  oracle::Matrix s;
  std::shared_ptr<const combsel::SimilarityKernel> kernel;
};

// FL / GC: clipped cosine (nonnegative). LogDet: raw cosine of n vectors in
// n + 2 dimensions, which keeps S + eps I comfortably positive definite.
inline Instance RandomInstance(combsel::Family family, std::size_t n,
                               std::mt19937_64& rng) {
  const bool logdet = family == combsel::Family::kLogDeterminant;
  std::uniform_int_distribution<std::size_t> dim(2, 6);
  const std::size_t d = logdet ? n + 2 : dim(rng);
  Instance inst;
  inst.n = n;
  inst.s = oracle::CosineMatrix(oracle::GaussianRows(n, d, rng), !logdet);
  std::vector<double> flat;
  for (const auto& row : inst.s) flat.insert(flat.end(), row.begin(), row.end());
  inst.kernel = std::make_shared<const combsel::SimilarityKernel>(
      n, std::move(flat),
      logdet ? combsel::KernelTransform::kRawCosine
             : combsel::KernelTransform::kClipAtZero,
      logdet ? 1e-4 : 0.0);
  return inst;
}

inline oracle::Set RandomSubset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  oracle::Set out;
  for (std::size_t i = 0; i < n; ++i) {
    if (coin(rng)) out.push_back(i);
  }
  return out;
}

inline combsel::IndexSet ToIndexSet(const oracle::Set& s) {
  return combsel::IndexSet(std::vector<combsel::Index>(s.begin(), s.end()));
}

inline oracle::Set Range(std::size_t n) {
  oracle::Set out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

// Oracle value of f for the given family.
inline double OracleValue(combsel::Family family, const Instance& inst,
                          const oracle::Set& ground, const oracle::Set& a,
                          const combsel::ObjectiveParams& params) {
  switch (family) {
    case combsel::Family::kFacilityLocation:
      return oracle::FacilityLocation(inst.s, ground, a);
    case combsel::Family::kGraphCut:
      return oracle::GraphCut(inst.s, ground, a, params.lambda);
    case combsel::Family::kLogDeterminant:
      break;
  }
  return oracle::LogDeterminant(inst.s, a, params.epsilon);
}

}  // namespace testing_support

#endif  // COMBSEL_TESTS_COMMON_INSTANCES_HPP_
