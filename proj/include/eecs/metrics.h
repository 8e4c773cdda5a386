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

#ifndef EECS_METRICS_H_
#define EECS_METRICS_H_

#include <vector>

namespace eecs {

// 1-based ranks of `values` in ascending order; tied values share the
// average of their ranks.
std::vector<double> AverageRanks(const std::vector<double> &values);

// Spearman rank correlation with average ranks for ties: the Pearson
// correlation of the rank vectors. Returns 0 if either side is constant.
// Throws ValidationError on a length mismatch or fewer than 2 items.
double Spearman(const std::vector<double> &pred, const std::vector<double> &truth);

// tanh of the mean of atanh(rho). Inputs at +-1 are clamped to
// +-(1 - 1e-12) with a warning. Throws ValidationError on an empty list.
double FisherMean(const std::vector<double> &rhos);

// Metrics over a ranked list; relevant[i] says whether the item at rank
// i + 1 is relevant.
//
// Mean over the relevant items of the precision at their rank, divided by
// `num_relevant` (defaults to the relevant items in the list).
double AveragePrecision(const std::vector<bool> &relevant, int num_relevant = -1);
// Fraction of relevant items among the first min(k, size) entries.
double PrecisionAtK(const std::vector<bool> &relevant, int k);
// 1 / rank of the first relevant item, 0 if none.
double ReciprocalRank(const std::vector<bool> &relevant);

double MeanRank(const std::vector<int> &ranks);
double HitsAtK(const std::vector<int> &ranks, int k);
double Accuracy(const std::vector<bool> &predicted, const std::vector<bool> &truth);

}  // namespace eecs

#endif  // EECS_METRICS_H_
