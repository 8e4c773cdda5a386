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

#ifndef EECS_TRAINER_H_
#define EECS_TRAINER_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "eecs/hyperparams.h"
#include "eecs/objective.h"
#include "eecs/parameters.h"
#include "eecs/training_data.h"

namespace eecs {

struct TrainConfig {
  Hyperparams hp;
  int threads = 1;
  // Single worker and fixed shuffles; the run is a pure function of its
  // inputs and seeds.
  bool deterministic = true;
  uint64_t shuffle_seed = 1;
  std::string log_path;         // one JSON object per epoch; empty for none
  std::string checkpoint_path;  // last good model on divergence; may be empty
  // Rounds of coefficient and anchor updates per type or group and epoch.
  int subspace_steps = 5;

  void Validate() const;
};

struct EpochRecord {
  int epoch = 0;
  LossBreakdown losses;
  double wall_ms = 0.0;
  std::map<std::string, int> dims;  // effective dimension per type
};

struct TrainReport {
  LossBreakdown initial;
  std::vector<EpochRecord> epochs;
  int64_t prox_calls = 0;
};

// Equal up to wall-clock times.
bool SameTrajectory(const TrainReport &a, const TrainReport &b);

std::string EpochJson(const EpochRecord &record);

// Squared-gradient accumulators, stored in a zero-initialized copy of the
// parameter layout.
struct AdagradState {
  Parameters accum;

  static AdagradState ZerosLike(const Parameters &params);
};

inline constexpr double kAdagradEps = 1e-8;

// x -= lr * g / sqrt(G + eps) after G += g^2, for every coordinate in `grad`.
// Throws NumericError naming the parameter if a gradient is not finite.
void AdagradStep(Parameters *params, const SparseGradient &grad,
                 AdagradState *state, double lr);

// Threshold applied to anchor difference matrices after a step of size
// `step`.
double ProxThreshold(double beta, double step);

// Trains `params` in place (they must match `data`; see InitParameters).
// On divergence restores the last good epoch, writes it to
// cfg.checkpoint_path if set, and throws NumericError.
TrainReport Train(const TrainingData &data, const TrainConfig &cfg,
                  Parameters *params);

struct TrainResult {
  Parameters params;
  TrainReport report;
};

// Initializes from cfg.hp.seed, then trains.
TrainResult Train(const TrainingData &data, const ModelShape &shape,
                  const TrainConfig &cfg);

struct TuneGrid {
  std::vector<double> alphas;
  std::vector<double> betas;

  // alpha in {0, 0.1, ..., 1}, beta in {50, 100, ..., 400}.
  static TuneGrid Default();
};

struct TuneResult {
  Hyperparams best;
  double score = 0.0;
};

// Maximizes `score` over the grid. Ties go to the smaller beta, then the
// smaller alpha. NaN scores never win. Throws ValidationError on an empty
// grid.
TuneResult Tune(const Hyperparams &base, const TuneGrid &grid,
                const std::function<double(const Hyperparams &)> &score);

}  // namespace eecs

#endif  // EECS_TRAINER_H_
