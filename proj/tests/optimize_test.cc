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

#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "eecs/errors.h"
#include "eecs/model_io.h"
#include "eecs/trainer.h"
#include "fixtures.h"

namespace eecs {
namespace {

using testing::MakeRandomProblem;
using testing::TempDir;

TrainConfig SmallConfig(int dim, int epochs) {
  TrainConfig cfg;
  cfg.hp.dim = dim;
  cfg.hp.epochs = epochs;
  cfg.hp.beta = 0.5;
  cfg.hp.variant = Variant::kTypeComb;
  return cfg;
}

TEST(AdagradTest, MatchesClosedForm) {
  testing::RandomProblem rp = MakeRandomProblem(1, 3);
  Parameters &p = rp.params;
  AdagradState state = AdagradState::ZerosLike(p);
  const ParamAddress a{ParamClass::kEntity, 1, 0, 2};
  const ParamAddress b{ParamClass::kGroupAnchor, 0, 1, 0};
  const double a0 = ParamRef(p, a), b0 = ParamRef(p, b);
  const double lr = 0.1;

  SparseGradient g1;
  g1.Add(a, 0.5);
  g1.Add(b, -2.0);
  AdagradStep(&p, g1, &state, lr);
  const double a1 = a0 - lr * 0.5 / std::sqrt(0.25 + kAdagradEps);
  EXPECT_NEAR(ParamRef(p, a), a1, 1e-15);
  EXPECT_NEAR(ParamRef(p, b), b0 + lr * 2.0 / std::sqrt(4.0 + kAdagradEps), 1e-15);
  EXPECT_DOUBLE_EQ(ParamRef(state.accum, a), 0.25);

  SparseGradient g2;
  g2.Add(a, 1.5);
  AdagradStep(&p, g2, &state, lr);
  EXPECT_NEAR(ParamRef(p, a), a1 - lr * 1.5 / std::sqrt(0.25 + 2.25 + kAdagradEps), 1e-15);
  EXPECT_DOUBLE_EQ(ParamRef(state.accum, a), 2.5);
}

TEST(AdagradTest, UntouchedCoordinatesStay) {
  testing::RandomProblem rp = MakeRandomProblem(2, 3);
  const Parameters before = rp.params;
  AdagradState state = AdagradState::ZerosLike(rp.params);
  AdagradStep(&rp.params, SparseGradient(), &state, 0.1);
  EXPECT_TRUE(Identical(before, rp.params));
  EXPECT_EQ(state.accum.model.entities.norm(), 0.0);
}

TEST(AdagradTest, NonFiniteGradientThrows) {
  testing::RandomProblem rp = MakeRandomProblem(3, 3);
  AdagradState state = AdagradState::ZerosLike(rp.params);
  SparseGradient g;
  g.Add({ParamClass::kWord, 0, 0, 0}, std::numeric_limits<double>::quiet_NaN());
  EXPECT_THROW(AdagradStep(&rp.params, g, &state, 0.1), NumericError);
  SparseGradient h;
  h.Add({ParamClass::kRelation, 0, 0, 0}, INFINITY);
  EXPECT_THROW(AdagradStep(&rp.params, h, &state, 0.1), NumericError);
}

TEST(ProxThresholdTest, ScalesWithStep) {
  EXPECT_DOUBLE_EQ(ProxThreshold(2.0, 0.25), 0.5);
  EXPECT_EQ(ProxThreshold(0.0, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(ProxThreshold(3.0, 0.1) * 2, ProxThreshold(3.0, 0.2));
}

TEST(TrainConfigTest, Validation) {
  TrainConfig cfg;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.threads = 2;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg.deterministic = false;
  EXPECT_NO_THROW(cfg.Validate());
  cfg.threads = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg.threads = 1;
  cfg.subspace_steps = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
  cfg.subspace_steps = 1;
  cfg.hp.dim = 0;
  EXPECT_THROW(cfg.Validate(), ValidationError);
}

TEST(TrainTest, ObjectiveDecreasesAndCoefficientsStayOnSimplex) {
  const testing::RandomProblem rp = MakeRandomProblem(4, 4);
  TrainConfig cfg = SmallConfig(4, 30);
  const TrainResult r = Train(rp.data, rp.shape, cfg);
  ASSERT_EQ(r.report.epochs.size(), 30u);
  EXPECT_LT(r.report.epochs.back().losses.total, r.report.initial.total);
  for (const TypeSubspace &t : r.params.types.types) {
    for (Eigen::Index c = 0; c < t.coefficients.cols(); ++c) {
      EXPECT_NEAR(t.coefficients.col(c).sum(), 1.0, 1e-9);
      EXPECT_GE(t.coefficients.col(c).minCoeff(), -1e-12);
    }
  }
  for (const RelationGroup &g : r.params.relations.groups) {
    for (Eigen::Index c = 0; c < g.coefficients.cols(); ++c) {
      EXPECT_NEAR(g.coefficients.col(c).sum(), 1.0, 1e-9);
    }
  }
  EXPECT_GT(r.report.prox_calls, 0);
}

TEST(TrainTest, ZeroEpochsLeavesInitialization) {
  const testing::RandomProblem rp = MakeRandomProblem(5, 3);
  TrainConfig cfg = SmallConfig(3, 0);
  const TrainResult r = Train(rp.data, rp.shape, cfg);
  EXPECT_TRUE(r.report.epochs.empty());
  EXPECT_TRUE(Identical(r.params, InitParameters(rp.shape, cfg.hp, cfg.hp.seed)));
}

TEST(TrainTest, DeterministicRunsAreIdentical) {
  const testing::RandomProblem rp = MakeRandomProblem(6, 4);
  const TrainConfig cfg = SmallConfig(4, 5);
  const TrainResult a = Train(rp.data, rp.shape, cfg);
  const TrainResult b = Train(rp.data, rp.shape, cfg);
  EXPECT_TRUE(Identical(a.params, b.params));
  EXPECT_TRUE(SameTrajectory(a.report, b.report));
  EXPECT_EQ(SerializeModel(a.params, cfg.hp), SerializeModel(b.params, cfg.hp));

  TrainConfig other = cfg;
  other.shuffle_seed = 2;
  EXPECT_FALSE(Identical(a.params, Train(rp.data, rp.shape, other).params));
}

TEST(TrainTest, LogHasOneObjectPerEpoch) {
  TempDir dir;
  const testing::RandomProblem rp = MakeRandomProblem(7, 3);
  TrainConfig cfg = SmallConfig(3, 4);
  cfg.log_path = dir.File("log.jsonl");
  const TrainResult r = Train(rp.data, rp.shape, cfg);
  std::ifstream in(cfg.log_path);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);
    ++n;
    EXPECT_EQ(j.at("epoch").get<int>(), n);
    EXPECT_DOUBLE_EQ(j.at("total").get<double>(), r.report.epochs[n - 1].losses.total);
  }
  EXPECT_EQ(n, 4);
}

TEST(TrainTest, ParallelRunStaysFinite) {
  const testing::RandomProblem rp = MakeRandomProblem(8, 4);
  TrainConfig cfg = SmallConfig(4, 10);
  cfg.threads = 2;
  cfg.deterministic = false;
  const TrainResult r = Train(rp.data, rp.shape, cfg);
  ASSERT_EQ(r.report.epochs.size(), 10u);
  EXPECT_TRUE(std::isfinite(r.report.epochs.back().losses.total));
  EXPECT_LT(r.report.epochs.back().losses.total, r.report.initial.total);
}

TEST(TrainTest, DivergenceRestoresAndCheckpoints) {
  TempDir dir;
  const testing::RandomProblem rp = MakeRandomProblem(9, 3);
  TrainConfig cfg = SmallConfig(3, 3);
  cfg.checkpoint_path = dir.File("last_good.eecs");
  Parameters params = InitParameters(rp.shape, cfg.hp, 1);
  // Squared residuals of this entity overflow, so its gradients do too.
  params.model.entities(0, 0) = 1e200;
  const Parameters start = params;
  EXPECT_THROW(Train(rp.data, cfg, &params), NumericError);
  const SavedModel saved = LoadModel(cfg.checkpoint_path);
  EXPECT_TRUE(Identical(saved.params, start));
}

TEST(TuneTest, PicksMaximum) {
  Hyperparams base;
  const TuneGrid grid{{0.0, 0.5, 1.0}, {1.0, 2.0}};
  const TuneResult r = Tune(base, grid, [](const Hyperparams &h) {
    return -std::abs(h.alpha - 0.5) - std::abs(h.beta - 2.0);
  });
  EXPECT_EQ(r.best.alpha, 0.5);
  EXPECT_EQ(r.best.beta, 2.0);
  EXPECT_EQ(r.score, 0.0);
}

TEST(TuneTest, TiesPreferSmallerBetaThenAlpha) {
  Hyperparams base;
  base.dim = 17;
  const TuneGrid grid{{1.0, 0.2, 0.6}, {9.0, 3.0}};
  const TuneResult r = Tune(base, grid, [](const Hyperparams &) { return 1.0; });
  EXPECT_EQ(r.best.beta, 3.0);
  EXPECT_EQ(r.best.alpha, 0.2);
  EXPECT_EQ(r.best.dim, 17);
}

TEST(TuneTest, NaNNeverWins) {
  const TuneGrid grid{{0.1, 0.2}, {1.0}};
  const TuneResult r = Tune(Hyperparams{}, grid, [](const Hyperparams &h) {
    return h.alpha < 0.15 ? std::numeric_limits<double>::quiet_NaN() : -100.0;
  });
  EXPECT_EQ(r.best.alpha, 0.2);
  EXPECT_EQ(r.score, -100.0);
  EXPECT_THROW(Tune(Hyperparams{}, grid,
                    [](const Hyperparams &) { return std::nan(""); }),
               ValidationError);
}

TEST(TuneTest, EmptyGridIsAnError) {
  const auto score = [](const Hyperparams &) { return 0.0; };
  EXPECT_THROW(Tune(Hyperparams{}, TuneGrid{{}, {1.0}}, score), ValidationError);
  EXPECT_THROW(Tune(Hyperparams{}, TuneGrid{{0.5}, {}}, score), ValidationError);
}

TEST(TuneTest, DefaultGrid) {
  const TuneGrid grid = TuneGrid::Default();
  ASSERT_EQ(grid.alphas.size(), 11u);
  EXPECT_DOUBLE_EQ(grid.alphas.front(), 0.0);
  EXPECT_DOUBLE_EQ(grid.alphas.back(), 1.0);
  ASSERT_EQ(grid.betas.size(), 8u);
  EXPECT_DOUBLE_EQ(grid.betas.front(), 50.0);
  EXPECT_DOUBLE_EQ(grid.betas.back(), 400.0);
}

}  // namespace
}  // namespace eecs
