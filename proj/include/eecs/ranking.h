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

#ifndef EECS_RANKING_H_
#define EECS_RANKING_H_

#include <cstdint>
#include <vector>

#include "eecs/parameters.h"

namespace eecs {

struct RankingDirection {
  Vector w;
  double offset = 0.0;  // centers the training scores
  double c = 0.0;       // selected regularization constant
};

struct RankerOptions {
  std::vector<double> c_grid{0.01, 0.1, 1.0, 10.0, 100.0};
  int iterations = 300;
  size_t max_pairs = 20000;  // larger pair sets are subsampled
  uint64_t seed = 1;
};

// Linear pairwise ranker: minimizes
//   sum over pairs with v_i > v_j of max(0, 1 - w.(p_i - p_j)) + |w|^2 / C
// by projected subgradient descent, for every C in the grid, and keeps the
// C with the best validation Spearman correlation (training correlation if
// the validation split cannot be scored). Throws ValidationError if every
// training value is equal.
RankingDirection FitRankingDirection(const std::vector<Vector> &train_points,
                                     const std::vector<double> &train_values,
                                     const std::vector<Vector> &val_points,
                                     const std::vector<double> &val_values,
                                     const RankerOptions &options = {});

double Score(const RankingDirection &direction, const Vector &point);

}  // namespace eecs

#endif  // EECS_RANKING_H_
