// Copyright 2026 The EECS Authors.
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

#include "eecs/trainer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <random>
#include <thread>

#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "eecs/errors.h"
#include "eecs/model_io.h"
#include "eecs/prox.h"
#include "eecs/subspace.h"

namespace eecs {

void TrainConfig::Validate() const {
  hp.Validate();
  if (threads < 1) throw ValidationError("threads must be at least 1");
  if (deterministic && threads != 1) {
    throw ValidationError("deterministic mode requires threads = 1");
  }
  if (subspace_steps < 1) throw ValidationError("subspace_steps must be >= 1");
}

bool SameTrajectory(const TrainReport &a, const TrainReport &b) {
  auto same = [](const LossBreakdown &x, const LossBreakdown &y) {
    return x.j_glove == y.j_glove && x.j_text_entity == y.j_text_entity &&
           x.j_type == y.j_type && x.j_type_comb_penalty == y.j_type_comb_penalty &&
           x.j_rel_dim == y.j_rel_dim && x.j_rel_dist == y.j_rel_dist &&
           x.j_reg1 == y.j_reg1 && x.j_reg2 == y.j_reg2 && x.total == y.total;
  };
  if (!same(a.initial, b.initial) || a.prox_calls != b.prox_calls ||
      a.epochs.size() != b.epochs.size()) {
    return false;
  }
  for (size_t i = 0; i < a.epochs.size(); ++i) {
    if (a.epochs[i].epoch != b.epochs[i].epoch ||
        !same(a.epochs[i].losses, b.epochs[i].losses) ||
        a.epochs[i].dims != b.epochs[i].dims) {
      return false;
    }
  }
  return true;
}

std::string EpochJson(const EpochRecord &r) {
  nlohmann::json j;
  j["epoch"] = r.epoch;
  j["j_glove"] = r.losses.j_glove;
  j["j_text_entity"] = r.losses.j_text_entity;
  j["j_type"] = r.losses.j_type;
  j["j_type_comb_penalty"] = r.losses.j_type_comb_penalty;
  j["j_rel_dim"] = r.losses.j_rel_dim;
  j["j_rel_dist"] = r.losses.j_rel_dist;
  j["j_reg1"] = r.losses.j_reg1;
  j["j_reg2"] = r.losses.j_reg2;
  j["total"] = r.losses.total;
  j["wall_ms"] = r.wall_ms;
  j["dims"] = nlohmann::json::object();
  for (const auto &[type, dim] : r.dims) j["dims"][type] = dim;
  return j.dump();
}

AdagradState AdagradState::ZerosLike(const Parameters &params) {
  AdagradState s{params};
  EmbeddingModel &m = s.accum.model;
  m.entities.setZero();
  m.words.setZero();
  m.contexts.setZero();
  m.entity_bias.setZero();
  m.word_bias.setZero();
  m.context_bias.setZero();
  for (TypeSubspace &t : s.accum.types.types) {
    t.anchors.setZero();
    t.coefficients.setZero();
  }
  s.accum.relations.relations.setZero();
  for (RelationGroup &g : s.accum.relations.groups) {
    g.anchors.setZero();
    g.coefficients.setZero();
  }
  return s;
}

void AdagradStep(Parameters *params, const SparseGradient &grad,
                 AdagradState *state, double lr) {
  for (const auto &[address, g] : grad) {
    if (!std::isfinite(g)) {
      throw NumericError("non-finite gradient for " + Describe(address));
    }
    double &acc = ParamRef(state->accum, address);
    acc += g * g;
    ParamRef(*params, address) -= lr * g / std::sqrt(acc + kAdagradEps);
  }
}

double ProxThreshold(double beta, double step) { return beta * step; }

namespace {

using Clock = std::chrono::steady_clock;

template <typename X, typename A, typename G>
void Ada(X &&x, A &&acc, const G &g, double lr) {
  acc.array() += g.array().square();
  x.array() -= lr * g.array() / (acc.array() + kAdagradEps).sqrt();
}

inline void Ada1(double &x, double &acc, double g, double lr) {
  acc += g * g;
  x -= lr * g / std::sqrt(acc + kAdagradEps);
}

void CheckFinite(double v, const char *what, int64_t index) {
  if (!std::isfinite(v)) {
    throw NumericError(std::string("non-finite gradient for ") + what + "[" +
                       std::to_string(index) + "]");
  }
}

class Trainer {
 public:
  Trainer(const TrainingData &data, const TrainConfig &cfg, Parameters *params)
      : data_(data),
        cfg_(cfg),
        hp_(cfg.hp),
        spec_(SpecOf(cfg.hp.variant)),
        p_(*params),
        state_(AdagradState::ZerosLike(*params)),
        rng_(cfg.shuffle_seed) {}

  TrainReport Run() {
    TrainReport report;
    report.initial = TotalObjective(data_, p_, hp_);
    std::ofstream log;
    if (!cfg_.log_path.empty()) {
      log.open(cfg_.log_path, std::ios::trunc);
      if (!log) throw ValidationError("cannot write training log " + cfg_.log_path);
    }
    Parameters last_good = p_;
    for (int epoch = 1; epoch <= hp_.epochs; ++epoch) {
      const auto start = Clock::now();
      EpochRecord record;
      record.epoch = epoch;
      try {
        TextPass();
        TypePass();
        RelationPass();
        record.losses = TotalObjective(data_, p_, hp_);
        if (!std::isfinite(record.losses.total)) {
          throw NumericError("objective is not finite");
        }
      } catch (const NumericError &e) {
        p_ = last_good;
        if (!cfg_.checkpoint_path.empty()) SaveModel(cfg_.checkpoint_path, p_, hp_);
        throw NumericError("training diverged in epoch " + std::to_string(epoch) +
                           " (" + e.what() + "); restored epoch " +
                           std::to_string(epoch - 1));
      }
      record.wall_ms =
          std::chrono::duration<double, std::milli>(Clock::now() - start).count();
      for (const TypeSubspace &t : p_.types.types) {
        record.dims[t.type_id] = EffectiveRank(t.DifferenceMatrix(), hp_.rank_eps);
      }
      spdlog::debug("epoch {} total {:.6g}", epoch, record.losses.total);
      if (log) log << EpochJson(record) << '\n';
      report.epochs.push_back(std::move(record));
      last_good = p_;
    }
    report.prox_calls = prox_calls_;
    return report;
  }

 private:
  void TextPass() {
    const size_t nww = data_.word_word.size();
    std::vector<size_t> order(nww + data_.entity_word.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::shuffle(order.begin(), order.end(), rng_);
    if (cfg_.threads <= 1 || order.size() < 2) {
      TextShard(order, 0, order.size());
      return;
    }
    // Racy mode: shards update shared vectors without locks.
    const size_t shards = std::min<size_t>(cfg_.threads, order.size());
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(shards);
    for (size_t s = 0; s < shards; ++s) {
      const size_t begin = order.size() * s / shards;
      const size_t end = order.size() * (s + 1) / shards;
      workers.emplace_back([&, s, begin, end] {
        try {
          TextShard(order, begin, end);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
    for (std::thread &t : workers) t.join();
    for (const std::exception_ptr &e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  void TextShard(const std::vector<size_t> &order, size_t begin, size_t end) {
    EmbeddingModel &m = p_.model;
    EmbeddingModel &acc = state_.accum.model;
    const double lr = hp_.learn_rate;
    const double a = hp_.alpha;
    const size_t nww = data_.word_word.size();
    Vector g1(m.dim()), g2(m.dim());
    for (size_t k = begin; k < end; ++k) {
      const size_t idx = order[k];
      if (idx < nww) {
        const CooccurrenceEntry &e = data_.word_word[idx];
        const double c = a * terms::Glove(e, m, hp_).coef;
        CheckFinite(c, "word", e.row);
        g1 = c * m.contexts.col(e.col);
        g2 = c * m.words.col(e.row);
        Ada(m.words.col(e.row), acc.words.col(e.row), g1, lr);
        Ada(m.contexts.col(e.col), acc.contexts.col(e.col), g2, lr);
        Ada1(m.word_bias(e.row), acc.word_bias(e.row), c, lr);
        Ada1(m.context_bias(e.col), acc.context_bias(e.col), c, lr);
      } else {
        const CooccurrenceEntry &e = data_.entity_word[idx - nww];
        const double c = a * terms::EntityWord(e, m, hp_).coef;
        CheckFinite(c, "entity", e.row);
        g1 = c * m.words.col(e.col);
        g2 = c * m.entities.col(e.row);
        Ada(m.entities.col(e.row), acc.entities.col(e.row), g1, lr);
        Ada(m.words.col(e.col), acc.words.col(e.col), g2, lr);
        Ada1(m.entity_bias(e.row), acc.entity_bias(e.row), c, lr);
        Ada1(m.word_bias(e.col), acc.word_bias(e.col), c, lr);
      }
    }
  }

  // Fits the convex-combination model points ~ anchors * coefficients by
  // projected gradient on the coefficients and proximal gradient on the
  // anchors. Returns the final residuals.
  Matrix FitSubspace(const Matrix &points, Matrix *anchors, Matrix *coefficients,
                     bool comb, bool regularize) {
    const double s = 1.0 - hp_.alpha;
    for (int step = 0; step < cfg_.subspace_steps; ++step) {
      // Coefficients. Shifting every anchor by the same vector changes the
      // gradient only along the all-ones direction, which the simplex
      // projection ignores; the centered anchors give the tighter constant.
      const Matrix centered = anchors->colwise() - anchors->rowwise().mean();
      const Vector sigma = SingularValues(centered);
      const double spectral = sigma.size() ? sigma(0) : 0.0;
      const double lip = 2.0 * s * spectral * spectral;
      if (lip > 0.0) {
        const Matrix residual = points - (*anchors) * (*coefficients);
        const Matrix step_dir = (2.0 * s / lip) * centered.transpose() * residual;
        for (Eigen::Index i = 0; i < coefficients->cols(); ++i) {
          coefficients->col(i) =
              ProjectToSimplex(coefficients->col(i) + step_dir.col(i));
        }
      }
      // Anchors.
      const Matrix residual = points - (*anchors) * (*coefficients);
      Matrix grad = -2.0 * s * residual * coefficients->transpose();
      if (comb) {
        Matrix spread = Matrix::Zero(anchors->rows(), anchors->cols());
        terms::AnchorSpread(*anchors, &spread);
        grad += s * spread;
      }
      const Matrix gram = (*coefficients) * coefficients->transpose();
      const double lam = Eigen::SelfAdjointEigenSolver<Matrix>(
                             gram, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .maxCoeff();
      const double lip_a = 2.0 * s * lam;
      if (!(lip_a > 0.0)) continue;
      const double eta = 1.0 / lip_a;
      *anchors -= eta * grad;
      if (regularize) {
        const int n = static_cast<int>(anchors->rows());
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) {
          m.row(i) = (anchors->col(i + 1) - anchors->col(0)).transpose();
        }
        m = ProxNuclear(m, ProxThreshold(hp_.beta, eta));
        ++prox_calls_;
        for (int i = 0; i < n; ++i) {
          anchors->col(i + 1) = anchors->col(0) + m.row(i).transpose();
        }
      }
    }
    if (!anchors->allFinite() || !coefficients->allFinite()) {
      throw NumericError("non-finite subspace parameters");
    }
    return points - (*anchors) * (*coefficients);
  }

  void TypePass() {
    if (!spec_.type || hp_.alpha >= 1.0) return;
    EmbeddingModel &m = p_.model;
    const double s = 1.0 - hp_.alpha;
    for (TypeSubspace &t : p_.types.types) {
      const Eigen::Index count = static_cast<Eigen::Index>(t.members.size());
      Matrix points(m.dim(), count);
      for (Eigen::Index i = 0; i < count; ++i) {
        points.col(i) = m.entities.col(t.members[i]);
      }
      const Matrix residual = FitSubspace(points, &t.anchors, &t.coefficients,
                                          spec_.type_comb, spec_.reg_types);
      for (Eigen::Index i = 0; i < count; ++i) {
        const int e = t.members[i];
        const Vector g = 2.0 * s * residual.col(i);
        Ada(m.entities.col(e), state_.accum.model.entities.col(e), g,
            hp_.learn_rate);
      }
    }
  }

  void RelationPass() {
    if (!spec_.uses_relations() || hp_.alpha >= 1.0) return;
    EmbeddingModel &m = p_.model;
    RelationParams &rels = p_.relations;
    EmbeddingModel &acc = state_.accum.model;
    Matrix &rel_acc = state_.accum.relations.relations;
    const double s = 1.0 - hp_.alpha;
    const double lr = hp_.learn_rate;

    if (spec_.rel_dim) {
      for (RelationGroup &g : rels.groups) {
        const int count = static_cast<int>(g.members.size()) + 1;
        Matrix points(m.dim(), count);
        for (int i = 0; i < count; ++i) {
          points.col(i) = GroupMemberPoint(g, i, m, rels);
        }
        const Matrix residual = FitSubspace(points, &g.anchors, &g.coefficients,
                                            false, spec_.reg_groups);
        std::map<int, Vector> entity_grads;
        auto add = [&](int e, const Vector &v) {
          auto [it, fresh] = entity_grads.try_emplace(e, v);
          if (!fresh) it->second += v;
        };
        for (int i = 0; i + 1 < count; ++i) {
          add(g.members[i], 2.0 * s * residual.col(i));
        }
        const Vector last = 2.0 * s * residual.col(count - 1);
        add(g.entity, last);
        const double sign = g.side == GroupSide::kHead ? 1.0 : -1.0;
        const Vector rel_grad = sign * last;
        for (auto &[e, grad] : entity_grads) {
          Ada(m.entities.col(e), acc.entities.col(e), grad, lr);
        }
        Ada(rels.relations.col(g.relation), rel_acc.col(g.relation), rel_grad, lr);
      }
    }

    if (spec_.rel_dist) {
      const std::vector<Triple> &triples = data_.triples.triples();
      std::vector<size_t> order(triples.size());
      std::iota(order.begin(), order.end(), size_t{0});
      std::shuffle(order.begin(), order.end(), rng_);
      for (size_t idx : order) {
        const Triple &t = triples[idx];
        const Vector d = m.entities.col(t.tail) - m.entities.col(t.head) -
                         rels.relations.col(t.relation);
        if (!d.allFinite()) {
          throw NumericError("non-finite gradient for relation[" +
                             std::to_string(t.relation) + "]");
        }
        const Vector g = 4.0 * s * d;
        if (t.head != t.tail) {
          Ada(m.entities.col(t.tail), acc.entities.col(t.tail), g, lr);
          const Vector neg = -g;
          Ada(m.entities.col(t.head), acc.entities.col(t.head), neg, lr);
        }
        const Vector neg = -g;
        Ada(rels.relations.col(t.relation), rel_acc.col(t.relation), neg, lr);
      }
    }
  }

  const TrainingData &data_;
  const TrainConfig &cfg_;
  const Hyperparams &hp_;
  const VariantSpec spec_;
  Parameters &p_;
  AdagradState state_;
  std::mt19937_64 rng_;
  int64_t prox_calls_ = 0;
};

}  // namespace

TrainReport Train(const TrainingData &data, const TrainConfig &cfg,
                  Parameters *params) {
  cfg.Validate();
  if (params->model.dim() != cfg.hp.dim) {
    throw ValidationError("parameters have dimension " +
                          std::to_string(params->model.dim()) + ", config says " +
                          std::to_string(cfg.hp.dim));
  }
  Trainer trainer(data, cfg, params);
  return trainer.Run();
}

TrainResult Train(const TrainingData &data, const ModelShape &shape,
                  const TrainConfig &cfg) {
  cfg.Validate();
  TrainResult result;
  result.params = InitParameters(shape, cfg.hp, cfg.hp.seed);
  result.report = Train(data, cfg, &result.params);
  return result;
}

TuneGrid TuneGrid::Default() {
  TuneGrid grid;
  for (int i = 0; i <= 10; ++i) grid.alphas.push_back(i / 10.0);
  for (int b = 50; b <= 400; b += 50) grid.betas.push_back(b);
  return grid;
}

TuneResult Tune(const Hyperparams &base, const TuneGrid &grid,
                const std::function<double(const Hyperparams &)> &score) {
  if (grid.alphas.empty() || grid.betas.empty()) {
    throw ValidationError("tuning grid is empty");
  }
  std::vector<double> betas = grid.betas, alphas = grid.alphas;
  std::sort(betas.begin(), betas.end());
  std::sort(alphas.begin(), alphas.end());
  bool found = false;
  TuneResult best;
  best.best = base;
  for (double beta : betas) {
    for (double alpha : alphas) {
      Hyperparams hp = base;
      hp.alpha = alpha;
      hp.beta = beta;
      const double value = score(hp);
      if (std::isnan(value)) continue;
      if (!found || value > best.score) {
        best.best = hp;
        best.score = value;
        found = true;
      }
    }
  }
  if (!found) throw ValidationError("every grid point scored NaN");
  return best;
}

}  // namespace eecs
