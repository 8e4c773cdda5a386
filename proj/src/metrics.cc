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

#include "eecs/metrics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <spdlog/spdlog.h>

#include "eecs/errors.h"

namespace eecs {

std::vector<double> AverageRanks(const std::vector<double> &values) {
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n);
  for (size_t i = 0; i < n;) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double Spearman(const std::vector<double> &pred, const std::vector<double> &truth) {
  if (pred.size() != truth.size()) {
    throw ValidationError("spearman: length mismatch");
  }
  if (pred.size() < 2) throw ValidationError("spearman: need at least 2 items");
  const std::vector<double> a = AverageRanks(pred), b = AverageRanks(truth);
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (b[i] - mb);
    va += (a[i] - ma) * (a[i] - ma);
    vb += (b[i] - mb) * (b[i] - mb);
  }
  if (va == 0.0 || vb == 0.0) return 0.0;
  return cov / std::sqrt(va * vb);
}

double FisherMean(const std::vector<double> &rhos) {
  if (rhos.empty()) throw ValidationError("fisher mean of an empty list");
  constexpr double kLimit = 1.0 - 1e-12;
  double sum = 0.0;
  for (double rho : rhos) {
    if (std::isnan(rho)) throw ValidationError("fisher mean: NaN correlation");
    if (std::abs(rho) > kLimit) {
      spdlog::warn("correlation {} clamped for the Fisher transform", rho);
      rho = std::clamp(rho, -kLimit, kLimit);
    }
    sum += std::atanh(rho);
  }
  return std::tanh(sum / static_cast<double>(rhos.size()));
}

double AveragePrecision(const std::vector<bool> &relevant, int num_relevant) {
  if (num_relevant < 0) {
    num_relevant = static_cast<int>(std::count(relevant.begin(), relevant.end(), true));
  }
  if (num_relevant == 0) return 0.0;
  double sum = 0.0;
  int hits = 0;
  for (size_t i = 0; i < relevant.size(); ++i) {
    if (!relevant[i]) continue;
    ++hits;
    sum += static_cast<double>(hits) / static_cast<double>(i + 1);
  }
  return sum / num_relevant;
}

double PrecisionAtK(const std::vector<bool> &relevant, int k) {
  if (k < 1) throw ValidationError("precision@k needs k >= 1");
  const size_t n = std::min(relevant.size(), static_cast<size_t>(k));
  if (n == 0) return 0.0;
  const auto hits = std::count(relevant.begin(), relevant.begin() + n, true);
  return static_cast<double>(hits) / static_cast<double>(n);
}

double ReciprocalRank(const std::vector<bool> &relevant) {
  for (size_t i = 0; i < relevant.size(); ++i) {
    if (relevant[i]) return 1.0 / static_cast<double>(i + 1);
  }
  return 0.0;
}

double MeanRank(const std::vector<int> &ranks) {
  if (ranks.empty()) throw ValidationError("mean rank of no ranks");
  double sum = 0.0;
  for (int r : ranks) sum += r;
  return sum / static_cast<double>(ranks.size());
}

double HitsAtK(const std::vector<int> &ranks, int k) {
  if (ranks.empty()) throw ValidationError("hits@k of no ranks");
  const auto hits = std::count_if(ranks.begin(), ranks.end(),
                                  [k](int r) { return r <= k; });
  return static_cast<double>(hits) / static_cast<double>(ranks.size());
}

double Accuracy(const std::vector<bool> &predicted, const std::vector<bool> &truth) {
  if (predicted.size() != truth.size()) {
    throw ValidationError("accuracy: length mismatch");
  }
  if (predicted.empty()) throw ValidationError("accuracy of no predictions");
  size_t correct = 0;
  for (size_t i = 0; i < predicted.size(); ++i) correct += predicted[i] == truth[i];
  return static_cast<double>(correct) / static_cast<double>(predicted.size());
}

}  // namespace eecs
