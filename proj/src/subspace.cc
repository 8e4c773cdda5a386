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

#include "eecs/subspace.h"

#include <algorithm>

#include <Eigen/SVD>

#include "eecs/errors.h"

namespace eecs {

namespace {

SubspaceSummary Summarize(const Matrix &differences, double rank_eps) {
  SubspaceSummary s;
  if (!differences.allFinite()) {
    throw NumericError("subspace analysis of a non-finite matrix");
  }
  if (differences.size() == 0) return s;
  Eigen::BDCSVD<Matrix> svd(differences, Eigen::ComputeThinV);
  const Vector &sigma = svd.singularValues();
  s.singular_values.assign(sigma.data(), sigma.data() + sigma.size());
  const double cutoff = rank_eps * std::max(sigma.size() ? sigma(0) : 0.0, 1.0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > cutoff) {
      s.basis.push_back(svd.matrixV().col(i));
    }
  }
  s.effective_dim = static_cast<int>(s.basis.size());
  return s;
}

}  // namespace

Vector SingularValues(const Matrix &m) {
  if (!m.allFinite()) throw NumericError("SVD of a non-finite matrix");
  if (m.size() == 0) return Vector();
  return Eigen::BDCSVD<Matrix>(m).singularValues();
}

int EffectiveRank(const Matrix &m, double rank_eps) {
  const Vector sigma = SingularValues(m);
  if (sigma.size() == 0) return 0;
  const double cutoff = rank_eps * std::max(sigma(0), 1.0);
  return static_cast<int>((sigma.array() > cutoff).count());
}

SubspaceSummary AnchorSubspace(const TypeSubspaceParams &types,
                               const std::string &type_id, double rank_eps) {
  const int index = types.Find(type_id);
  if (index < 0) throw NotFoundError("unknown type: " + type_id);
  const TypeSubspace &t = types.types[index];
  SubspaceSummary s = Summarize(t.DifferenceMatrix(), rank_eps);
  s.type_id = type_id;
  s.num_entities = static_cast<int>(t.members.size());
  s.base_point = t.anchors.col(0);
  return s;
}

SubspaceSummary PointSubspace(const EmbeddingModel &model,
                              const std::string &type_id,
                              const std::vector<int> &members,
                              double rank_eps) {
  if (members.empty()) throw ValidationError("type " + type_id + " has no members");
  std::vector<Vector> points;
  for (int e : members) points.push_back(model.entities.col(e));
  const Vector c = Centroid(points);
  Matrix rows(static_cast<Eigen::Index>(points.size()), c.size());
  for (size_t i = 0; i < points.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = (points[i] - c).transpose();
  }
  SubspaceSummary s = Summarize(rows, rank_eps);
  s.type_id = type_id;
  s.num_entities = static_cast<int>(members.size());
  s.base_point = c;
  return s;
}

Vector ProjectToSubspace(const Vector &point, const SubspaceSummary &summary) {
  if (point.size() != summary.base_point.size()) {
    throw ValidationError("projection: dimension mismatch");
  }
  const Vector offset = point - summary.base_point;
  Vector out = summary.base_point;
  for (const Vector &b : summary.basis) out += b.dot(offset) * b;
  return out;
}

Vector Centroid(const std::vector<Vector> &points) {
  if (points.empty()) throw ValidationError("centroid of an empty point set");
  Vector sum = Vector::Zero(points.front().size());
  for (const Vector &p : points) {
    if (p.size() != sum.size()) throw ValidationError("centroid: ragged points");
    sum += p;
  }
  return sum / static_cast<double>(points.size());
}

}  // namespace eecs
