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

#include "eecs/ranking.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "eecs/errors.h"
#include "eecs/metrics.h"

namespace eecs {

namespace {

struct Pair {
  int better;
  int worse;
};

// Pegasos on the equivalent form lambda/2 |w|^2 + mean hinge, with
// lambda = 2 / (C * num_pairs).
Vector FitOne(const std::vector<Vector> &points, const std::vector<Pair> &pairs,
              double c, int iterations) {
  const Eigen::Index dim = points.front().size();
  const double m = static_cast<double>(pairs.size());
  const double lambda = 2.0 / (c * m);
  const double radius = 1.0 / std::sqrt(lambda);
  Vector w = Vector::Zero(dim);
  Vector sum = Vector::Zero(dim);
  Vector avg = Vector::Zero(dim);
  int averaged = 0;
  for (int t = 1; t <= iterations; ++t) {
    const double eta = 1.0 / (lambda * t);
    sum.setZero();
    for (const Pair &p : pairs) {
      const Vector diff = points[p.better] - points[p.worse];
      if (w.dot(diff) < 1.0) sum += diff;
    }
    w = (1.0 - eta * lambda) * w + (eta / m) * sum;
    const double norm = w.norm();
    if (norm > radius) w *= radius / norm;
    if (2 * t > iterations) {
      avg += w;
      ++averaged;
    }
  }
  return avg / std::max(averaged, 1);
}

double Correlation(const Vector &w, const std::vector<Vector> &points,
                   const std::vector<double> &values) {
  std::vector<double> scores;
  for (const Vector &p : points) scores.push_back(w.dot(p));
  return Spearman(scores, values);
}

bool Scorable(const std::vector<double> &values) {
  return values.size() >= 2 &&
         std::adjacent_find(values.begin(), values.end(),
                            std::not_equal_to<>()) != values.end();
}

}  // namespace

RankingDirection FitRankingDirection(const std::vector<Vector> &train_points,
                                     const std::vector<double> &train_values,
                                     const std::vector<Vector> &val_points,
                                     const std::vector<double> &val_values,
                                     const RankerOptions &options) {
  if (train_points.size() != train_values.size() ||
      val_points.size() != val_values.size()) {
    throw ValidationError("ranker: points and values differ in length");
  }
  if (!Scorable(train_values)) {
    throw ValidationError("degenerate ranking problem: all training values equal");
  }
  if (options.c_grid.empty()) throw ValidationError("ranker: empty C grid");
  std::vector<Pair> pairs;
  for (size_t i = 0; i < train_values.size(); ++i) {
    for (size_t j = 0; j < train_values.size(); ++j) {
      if (train_values[i] > train_values[j]) {
        pairs.push_back({static_cast<int>(i), static_cast<int>(j)});
      }
    }
  }
  if (pairs.size() > options.max_pairs) {
    std::mt19937_64 rng(options.seed);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(options.max_pairs);
  }
  const bool use_val = Scorable(val_values);
  RankingDirection best;
  double best_rho = -2.0;
  for (double c : options.c_grid) {
    if (!(c > 0.0)) throw ValidationError("ranker: C must be positive");
    const Vector w = FitOne(train_points, pairs, c, options.iterations);
    const double rho = use_val ? Correlation(w, val_points, val_values)
                               : Correlation(w, train_points, train_values);
    if (rho > best_rho) {
      best_rho = rho;
      best.w = w;
      best.c = c;
    }
  }
  double mean = 0.0;
  for (const Vector &p : train_points) mean += best.w.dot(p);
  best.offset = -mean / static_cast<double>(train_points.size());
  return best;
}

double Score(const RankingDirection &direction, const Vector &point) {
  return direction.w.dot(point) + direction.offset;
}

}  // namespace eecs
