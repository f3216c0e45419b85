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

#include "learn/losses.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace combsel {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Local (compacted) view of the items a loss touches. Local positions follow
// ascending global index, so "lowest local position" == "lowest index".
struct Workspace {
  std::vector<Index> active;
  Eigen::MatrixXd unit;       // active x d, unit rows
  std::vector<double> norm;   // per active item
  Eigen::MatrixXd sim;        // raw cosine over active items
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> conditioning;
  std::vector<std::size_t> ground;
  std::vector<std::size_t> ground_minus_conditioning;
};

struct Terms {
  double self = 0.0;
  double cross = 0.0;
  Eigen::MatrixXd g_self;   // dL_self / ds_ab over ordered local pairs
  Eigen::MatrixXd g_cross;
  std::vector<char> tie;    // items adjacent to an FL max or hinge tie
};

std::vector<std::size_t> ToLocal(const IndexSet& set,
                                 const std::vector<std::size_t>& position) {
  std::vector<std::size_t> out;
  out.reserve(set.size());
  for (Index v : set) out.push_back(position[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Workspace Prepare(const EmbeddingSet& embeddings, const LossSets& sets) {
  const std::size_t n = embeddings.rows();
  sets.ground.CheckBound(n);
  sets.conditioning.CheckBound(n);
  if (sets.ground.empty()) throw InvalidArgument("ground set is empty");
  for (std::size_t c = 0; c < sets.classes.size(); ++c) {
    const IndexSet& cls = sets.classes[c];
    cls.CheckBound(n);
    if (cls.empty()) {
      throw InvalidArgument("class " + std::to_string(c) + " is empty");
    }
    for (Index v : cls) {
      if (!sets.ground.contains(v)) {
        throw InvalidArgument("class " + std::to_string(c) +
                              " is not contained in the ground set");
      }
    }
    if (!Disjoint(cls, sets.conditioning)) {
      throw InvalidArgument("class " + std::to_string(c) +
                            " intersects the conditioning set");
    }
    for (std::size_t o = 0; o < c; ++o) {
      if (!Disjoint(cls, sets.classes[o])) {
        throw InvalidArgument("classes " + std::to_string(o) + " and " +
                              std::to_string(c) + " overlap");
      }
    }
  }

  Workspace ws;
  std::vector<char> used(n, 0);
  for (Index v : sets.ground) used[v] = 1;
  for (Index v : sets.conditioning) used[v] = 1;
  std::vector<std::size_t> position(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    if (used[i]) {
      position[i] = ws.active.size();
      ws.active.push_back(i);
    }
  }
  const std::size_t m = ws.active.size();
  const std::size_t d = embeddings.cols();
  ws.unit.resize(m, d);
  ws.norm.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    const auto row = embeddings.row(ws.active[a]);
    const double norm = RowNorm(row);
    if (!(norm > 0.0)) {
      throw InvalidArgument("zero-norm row " + std::to_string(ws.active[a]));
    }
    ws.norm[a] = norm;
    for (std::size_t c = 0; c < d; ++c) ws.unit(a, c) = row[c] / norm;
  }
  ws.sim = ws.unit * ws.unit.transpose();
  for (std::size_t a = 0; a < m; ++a) ws.sim(a, a) = 1.0;

  for (const IndexSet& cls : sets.classes) ws.classes.push_back(ToLocal(cls, position));
  ws.conditioning = ToLocal(sets.conditioning, position);
  ws.ground = ToLocal(sets.ground, position);
  std::vector<char> in_conditioning(m, 0);
  for (std::size_t a : ws.conditioning) in_conditioning[a] = 1;
  for (std::size_t a : ws.ground) {
    if (!in_conditioning[a]) ws.ground_minus_conditioning.push_back(a);
  }
  return ws;
}

struct Argmax {
  std::size_t best = kNone;
  double value = -std::numeric_limits<double>::infinity();
  std::size_t second = kNone;
  double second_value = -std::numeric_limits<double>::infinity();
};

Argmax RowMax(const Eigen::MatrixXd& sim, std::size_t row,
              const std::vector<std::size_t>& set) {
  Argmax out;
  for (std::size_t j : set) {
    const double s = sim(row, j);
    if (out.best == kNone || s > out.value) {
      out.second = out.best;
      out.second_value = out.value;
      out.best = j;
      out.value = s;
    } else if (out.second == kNone || s > out.second_value) {
      out.second = j;
      out.second_value = s;
    }
  }
  return out;
}

void MarkTie(const Argmax& am, std::size_t row, double tol,
             std::vector<char>& tie) {
  if (am.second != kNone && am.value - am.second_value < tol) {
    tie[row] = tie[am.best] = tie[am.second] = 1;
  }
}

double LogDetChol(const Eigen::MatrixXd& m, Eigen::LLT<Eigen::MatrixXd>& llt) {
  llt.compute(m);
  if (llt.info() != Eigen::Success) {
    throw NumericError("kernel submatrix is not positive definite");
  }
  double sum = 0.0;
  const Eigen::MatrixXd& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    if (!(l(i, i) > 0.0)) {
      throw NumericError("kernel submatrix is not positive definite");
    }
    sum += 2.0 * std::log(l(i, i));
  }
  return sum;
}

Eigen::MatrixXd Block(const Eigen::MatrixXd& sim,
                      const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = sim(rows[r], cols[c]);
  }
  return out;
}

void ComputeSelf(const Workspace& ws, const LossConfig& config, bool grads,
                 double tie_tol, Terms& t) {
  const std::size_t m = ws.active.size();
  if (grads) t.g_self = Eigen::MatrixXd::Zero(m, m);
  const Eigen::MatrixXd& s = ws.sim;
  for (const auto& cls : ws.classes) {
    const double w = 1.0 / static_cast<double>(cls.size());
    double term = 0.0;
    switch (config.family) {
      case Family::kFacilityLocation: {
        std::vector<char> in_class(m, 0);
        for (std::size_t a : cls) in_class[a] = 1;
        for (std::size_t i : ws.ground) {
          if (in_class[i]) continue;
          const Argmax am = RowMax(s, i, cls);
          term += am.value;
          if (grads) t.g_self(i, am.best) += w;
          MarkTie(am, i, tie_tol, t.tie);
        }
        break;
      }
      case Family::kGraphCut: {
        for (std::size_t i : cls) {
          for (std::size_t j : ws.ground_minus_conditioning) {
            term += s(i, j);
            if (grads) t.g_self(i, j) += w;
          }
        }
        double redundancy = 0.0;
        for (std::size_t i : cls) {
          for (std::size_t j : cls) {
            redundancy += s(i, j);
            if (grads) t.g_self(i, j) -= w * config.lambda;
          }
        }
        term -= config.lambda * redundancy;
        break;
      }
      case Family::kLogDeterminant: {
        Eigen::MatrixXd mk = Block(s, cls, cls);
        mk.diagonal().array() += config.lambda;
        Eigen::LLT<Eigen::MatrixXd> llt;
        term = LogDetChol(mk, llt);
        if (grads) {
          const Eigen::MatrixXd inv =
              llt.solve(Eigen::MatrixXd::Identity(cls.size(), cls.size()));
          for (std::size_t r = 0; r < cls.size(); ++r) {
            for (std::size_t c = 0; c < cls.size(); ++c) {
              t.g_self(cls[r], cls[c]) += w * inv(r, c);
            }
          }
        }
        break;
      }
    }
    t.self += w * term;
  }
}

void ComputeCross(const Workspace& ws, const LossConfig& config, bool grads,
                  double tie_tol, Terms& t) {
  if (ws.conditioning.empty()) {
    throw InvalidArgument("conditioning set is empty");
  }
  const std::size_t m = ws.active.size();
  if (grads) t.g_cross = Eigen::MatrixXd::Zero(m, m);
  const Eigen::MatrixXd& s = ws.sim;
  const double w = 1.0 / static_cast<double>(ws.ground.size());
  const double nu = config.nu;
  const double lambda = config.lambda;
  const auto& cond = ws.conditioning;
  for (const auto& cls : ws.classes) {
    double term = 0.0;
    switch (config.family) {
      case Family::kFacilityLocation: {
        for (std::size_t n : ws.ground) {
          const Argmax known = RowMax(s, n, cls);
          const Argmax query = RowMax(s, n, cond);
          const double arg = known.value - nu * query.value;
          MarkTie(known, n, tie_tol, t.tie);
          MarkTie(query, n, tie_tol * (1.0 + nu), t.tie);
          if (std::abs(arg) < tie_tol * (1.0 + nu)) {
            t.tie[n] = t.tie[known.best] = t.tie[query.best] = 1;
          }
          if (arg > 0.0) {
            term += arg;
            if (grads) {
              t.g_cross(n, known.best) += w;
              t.g_cross(n, query.best) -= w * nu;
            }
          }
        }
        break;
      }
      case Family::kGraphCut: {
        double relevance = 0.0;
        for (std::size_t n : ws.ground) {
          for (std::size_t k : cls) {
            relevance += s(n, k);
            if (grads) t.g_cross(n, k) += w;
          }
        }
        double redundancy = 0.0;
        for (std::size_t i : cls) {
          for (std::size_t j : cls) {
            redundancy += s(i, j);
            if (grads) t.g_cross(i, j) -= w * lambda;
          }
        }
        double between = 0.0;
        for (std::size_t k : cls) {
          for (std::size_t u : cond) {
            between += s(k, u);
            if (grads) t.g_cross(k, u) -= w * 2.0 * lambda * nu;
          }
        }
        term = (relevance - lambda * redundancy) - 2.0 * lambda * nu * between;
        break;
      }
      case Family::kLogDeterminant: {
        const std::size_t kc = cls.size();
        const std::size_t uc = cond.size();
        Eigen::MatrixXd su = Block(s, cond, cond);
        su.diagonal().array() += config.epsilon;
        Eigen::LLT<Eigen::MatrixXd> llt_u(su);
        if (llt_u.info() != Eigen::Success) {
          throw NumericError("singular conditioning submatrix");
        }
        const Eigen::MatrixXd sku = Block(s, cls, cond);
        const Eigen::MatrixXd w_suk = llt_u.solve(sku.transpose());  // W S_UK
        Eigen::MatrixXd schur = Block(s, cls, cls);
        schur.diagonal().array() += config.epsilon;
        schur -= nu * nu * (sku * w_suk);
        schur = 0.5 * (schur + schur.transpose());
        Eigen::LLT<Eigen::MatrixXd> llt_m;
        term = LogDetChol(schur, llt_m);
        if (grads) {
          const Eigen::MatrixXd minv =
              llt_m.solve(Eigen::MatrixXd::Identity(kc, kc));
          // d/dS_K = M^-1; d/dS_KU = -2 nu^2 M^-1 S_KU W;
          // d/dS_U = nu^2 W S_UK M^-1 S_KU W.
          const Eigen::MatrixXd g_ku = -2.0 * nu * nu * (minv * w_suk.transpose());
          const Eigen::MatrixXd g_u =
              nu * nu * (w_suk * minv * w_suk.transpose());
          for (std::size_t r = 0; r < kc; ++r) {
            for (std::size_t c = 0; c < kc; ++c) {
              t.g_cross(cls[r], cls[c]) += w * minv(r, c);
            }
            for (std::size_t c = 0; c < uc; ++c) {
              t.g_cross(cls[r], cond[c]) += w * g_ku(r, c);
            }
          }
          for (std::size_t r = 0; r < uc; ++r) {
            for (std::size_t c = 0; c < uc; ++c) {
              t.g_cross(cond[r], cond[c]) += w * g_u(r, c);
            }
          }
        }
        break;
      }
    }
    t.cross += w * term;
  }
}

// Chains dL/ds over ordered pairs to dL/de through the cosine:
//   ds_pb/de_p = (u_b - s_pb u_p) / |e_p|.
std::vector<double> ChainToEmbeddings(const Workspace& ws,
                                      const Eigen::MatrixXd& g,
                                      std::size_t rows, std::size_t cols) {
  std::vector<double> grad(rows * cols, 0.0);
  const std::size_t m = ws.active.size();
  for (std::size_t p = 0; p < m; ++p) {
    Eigen::RowVectorXd acc = Eigen::RowVectorXd::Zero(cols);
    for (std::size_t b = 0; b < m; ++b) {
      if (b == p) continue;
      const double coeff = g(p, b) + g(b, p);
      if (coeff == 0.0) continue;
      acc += coeff * (ws.unit.row(b) - ws.sim(p, b) * ws.unit.row(p));
    }
    acc /= ws.norm[p];
    const std::size_t row = ws.active[p];
    for (std::size_t c = 0; c < cols; ++c) grad[row * cols + c] = acc(c);
  }
  return grad;
}

Terms Compute(const Workspace& ws, const LossConfig& config, bool self,
              bool cross, bool grads, double tie_tol = 0.0) {
  config.Validate();
  Terms t;
  t.tie.assign(ws.active.size(), 0);
  if (self) ComputeSelf(ws, config, grads, tie_tol, t);
  if (cross) ComputeCross(ws, config, grads, tie_tol, t);
  return t;
}

double TotalValue(const EmbeddingSet& embeddings, const LossSets& sets,
                  const LossConfig& config) {
  const Workspace ws = Prepare(embeddings, sets);
  const Terms t = Compute(ws, config, true, true, false);
  return t.self - config.eta * t.cross;
}

}  // namespace

LossMode ParseLossMode(std::string_view name) {
  if (name == "owod" || name == "OWOD") return LossMode::kOwod;
  if (name == "iod" || name == "IOD") return LossMode::kIod;
  throw InvalidArgument("unknown loss mode '" + std::string(name) + "'");
}

std::string_view LossModeName(LossMode mode) {
  return mode == LossMode::kIod ? "iod" : "owod";
}

void LossConfig::Validate() const {
  if (!(eta >= 0.0)) throw InvalidArgument("eta must be >= 0");
  if (!(lambda >= 0.0)) throw InvalidArgument("lambda must be >= 0");
  if (!(nu >= 0.0)) throw InvalidArgument("nu must be >= 0");
  if (!(epsilon >= 0.0)) throw InvalidArgument("epsilon must be >= 0");
}

double LossSelf(const EmbeddingSet& embeddings, const LossSets& sets,
                const LossConfig& config) {
  const Workspace ws = Prepare(embeddings, sets);
  return Compute(ws, config, true, false, false).self;
}

double LossCross(const EmbeddingSet& embeddings, const LossSets& sets,
                 const LossConfig& config) {
  const Workspace ws = Prepare(embeddings, sets);
  return Compute(ws, config, false, true, false).cross;
}

LossReport LossTotal(const EmbeddingSet& embeddings, const LossSets& sets,
                     const LossConfig& config) {
  const Workspace ws = Prepare(embeddings, sets);
  const Terms t = Compute(ws, config, true, true, true);
  LossReport report;
  report.l_self = t.self;
  report.l_cross = t.cross;
  report.l_total = t.self - config.eta * t.cross;
  report.rows = embeddings.rows();
  report.cols = embeddings.cols();
  report.grad = ChainToEmbeddings(ws, t.g_self - config.eta * t.g_cross,
                                  report.rows, report.cols);
  for (double g : report.grad) {
    if (!std::isfinite(g)) throw NumericError("non-finite loss gradient");
  }
  return report;
}

std::vector<double> GradLoss(const EmbeddingSet& embeddings,
                             const LossSets& sets, const LossConfig& config) {
  return LossTotal(embeddings, sets, config).grad;
}

GradCheckResult FiniteDifferenceCheck(const EmbeddingSet& embeddings,
                                      const LossSets& sets,
                                      const LossConfig& config, double h,
                                      std::uint64_t seed) {
  const std::vector<double> analytic = GradLoss(embeddings, sets, config);
  return FiniteDifferenceCheck(embeddings, sets, config, h, seed, analytic);
}

GradCheckResult FiniteDifferenceCheck(const EmbeddingSet& embeddings,
                                      const LossSets& sets,
                                      const LossConfig& config, double h,
                                      std::uint64_t seed,
                                      std::span<const double> analytic) {
  if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be > 0");
  const std::size_t rows = embeddings.rows();
  const std::size_t cols = embeddings.cols();
  if (analytic.size() != rows * cols) {
    throw InvalidArgument("analytic gradient has the wrong size");
  }

  // A perturbation of size h moves any cosine of row p by at most 2h/|e_p|;
  // FL max terms closer than that to a tie may switch branches.
  std::vector<char> tie_row(rows, 0);
  if (config.family == Family::kFacilityLocation) {
    const Workspace ws = Prepare(embeddings, sets);
    double min_norm = std::numeric_limits<double>::infinity();
    for (double nrm : ws.norm) min_norm = std::min(min_norm, nrm);
    const double tol = 4.0 * h / min_norm;
    const Terms t = Compute(ws, config, true, !ws.conditioning.empty(), false, tol);
    for (std::size_t a = 0; a < ws.active.size(); ++a) {
      if (t.tie[a]) tie_row[ws.active[a]] = 1;
    }
  }

  std::vector<std::size_t> coords;
  if (rows * cols <= 5000) {
    coords.resize(rows * cols);
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
  } else {
    // Partial Fisher-Yates for a seeded sample without replacement.
    std::vector<std::size_t> all(rows * cols);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Xoshiro256 rng(seed);
    const std::size_t count = 256;
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + rng.Below(all.size() - i);
      std::swap(all[i], all[j]);
    }
    coords.assign(all.begin(), all.begin() + count);
    std::sort(coords.begin(), coords.end());
  }

  GradCheckResult result;
  std::vector<double> data(embeddings.data().begin(), embeddings.data().end());
  for (std::size_t idx : coords) {
    if (tie_row[idx / cols]) {
      ++result.tie_adjacent;
      continue;
    }
    const double original = data[idx];
    data[idx] = original + h;
    const double plus = TotalValue(embeddings.WithData(data), sets, config);
    data[idx] = original - h;
    const double minus = TotalValue(embeddings.WithData(data), sets, config);
    data[idx] = original;
    const double numeric = (plus - minus) / (2.0 * h);
    const double abs_err = std::abs(numeric - analytic[idx]);
    const double scale =
        std::max({1.0, std::abs(numeric), std::abs(analytic[idx])});
    result.max_abs_err = std::max(result.max_abs_err, abs_err);
    result.max_rel_err = std::max(result.max_rel_err, abs_err / scale);
    ++result.checked;
  }
  return result;
}

}  // namespace combsel
