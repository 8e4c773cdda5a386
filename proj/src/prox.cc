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

#include "eecs/prox.h"

#include <algorithm>
#include <functional>
#include <vector>

#include <Eigen/SVD>

#include "eecs/errors.h"

namespace eecs {

Vector ProjectToSimplex(const Vector &v) {
  const Eigen::Index n = v.size();
  if (n == 0) throw ValidationError("cannot project an empty vector");
  if (!v.allFinite()) throw NumericError("simplex projection of non-finite input");
  // Adding the same constant to every entry does not move the projection.
  // Shifting the largest entry to zero keeps huge inputs from cancelling.
  const Vector w = v.array() - v.maxCoeff();
  std::vector<double> u(w.data(), w.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Vector out = (w.array() - theta).max(0.0).matrix();
  // Remove rounding drift so the sum is 1 to machine precision.
  const double sum = out.sum();
  if (sum > 0.0) out /= sum;
  return out;
}

Matrix ProxNuclear(const Matrix &m, double tau) {
  if (tau < 0.0) throw ValidationError("prox threshold must be non-negative");
  if (!m.allFinite()) throw NumericError("prox of a non-finite matrix");
  if (tau == 0.0 || m.size() == 0) return m;
  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Vector shrunk = (svd.singularValues().array() - tau).max(0.0).matrix();
  return svd.matrixU() * shrunk.asDiagonal() * svd.matrixV().transpose();
}

}  // namespace eecs
