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

#ifndef EECS_SUBSPACE_H_
#define EECS_SUBSPACE_H_

#include <string>
#include <vector>

#include "eecs/parameters.h"

namespace eecs {

// Singular values in descending order. Throws NumericError on non-finite
// input.
Vector SingularValues(const Matrix &m);

// Number of singular values above rank_eps * max(sigma_1, 1).
int EffectiveRank(const Matrix &m, double rank_eps);

struct SubspaceSummary {
  std::string type_id;
  int num_entities = 0;
  int effective_dim = 0;
  std::vector<double> singular_values;  // descending
  Vector base_point;
  std::vector<Vector> basis;  // orthonormal, effective_dim vectors
};

// Summary of the affine span of a type's anchors: base point p_0 and the
// leading right singular vectors of the anchor difference matrix. Throws
// NotFoundError for an unknown type.
SubspaceSummary AnchorSubspace(const TypeSubspaceParams &types,
                               const std::string &type_id, double rank_eps);

// Same analysis on the entity points themselves (a PCA around their
// centroid). Useful for variants that learn no anchors.
SubspaceSummary PointSubspace(const EmbeddingModel &model,
                              const std::string &type_id,
                              const std::vector<int> &members,
                              double rank_eps);

// Orthogonal projection onto base_point + span(basis).
Vector ProjectToSubspace(const Vector &point, const SubspaceSummary &summary);

// Arithmetic mean. Throws ValidationError on an empty or ragged list.
Vector Centroid(const std::vector<Vector> &points);

}  // namespace eecs

#endif  // EECS_SUBSPACE_H_
