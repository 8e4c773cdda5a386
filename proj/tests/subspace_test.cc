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
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "eecs/errors.h"
#include "eecs/subspace.h"

namespace eecs {
namespace {

Matrix Gaussian(int rows, int cols, std::mt19937_64 &rng, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  return m;
}

TEST(SingularValuesTest, DescendingAndNonNegative) {
  std::mt19937_64 rng(1);
  const Vector s = SingularValues(Gaussian(5, 7, rng));
  ASSERT_EQ(s.size(), 5);
  for (Eigen::Index i = 1; i < s.size(); ++i) EXPECT_GE(s(i - 1), s(i));
  EXPECT_GE(s.minCoeff(), 0.0);
  Matrix bad = Matrix::Zero(2, 2);
  bad(1, 1) = INFINITY;
  EXPECT_THROW(SingularValues(bad), NumericError);
}

TEST(EffectiveRankTest, CountsAboveRelativeFloor) {
  Matrix d = Matrix::Zero(4, 4);
  d.diagonal() << 10.0, 0.5, 0.011, 0.009;
  // Floor is 1e-3 * max(10, 1) = 0.01.
  EXPECT_EQ(EffectiveRank(d, 1e-3), 3);
  EXPECT_EQ(EffectiveRank(d, 0.1), 1);

  // Below sigma_1 = 1 the floor is absolute.
  Matrix small = Matrix::Zero(3, 3);
  small.diagonal() << 0.1, 0.002, 0.0005;
  EXPECT_EQ(EffectiveRank(small, 1e-3), 2);
  EXPECT_EQ(EffectiveRank(Matrix::Zero(3, 3), 1e-3), 0);
}

TEST(EffectiveRankTest, LowRankProducts) {
  std::mt19937_64 rng(2);
  for (int r = 1; r <= 4; ++r) {
    const Matrix m = Gaussian(6, r, rng) * Gaussian(r, 6, rng);
    EXPECT_EQ(EffectiveRank(m, 1e-6), r);
  }
}

TypeSubspaceParams PlaneAnchors(std::mt19937_64 &rng, Matrix *plane, Vector *origin) {
  const int dim = 6;
  *plane = Eigen::HouseholderQR<Matrix>(Gaussian(dim, dim, rng))
               .householderQ() * Matrix::Identity(dim, 2);
  *origin = Gaussian(dim, 1, rng);
  TypeSubspace t;
  t.type_id = "plane";
  t.members = {0, 1, 2};
  t.anchors.resize(dim, dim + 1);
  for (int j = 0; j <= dim; ++j) {
    t.anchors.col(j) = *origin + *plane * Gaussian(2, 1, rng, 3.0);
  }
  t.coefficients = Matrix::Constant(dim + 1, 3, 1.0 / (dim + 1));
  TypeSubspaceParams types;
  types.types.push_back(t);
  return types;
}

TEST(AnchorSubspaceTest, RecoversPlane) {
  std::mt19937_64 rng(3);
  Matrix plane;
  Vector origin;
  const TypeSubspaceParams types = PlaneAnchors(rng, &plane, &origin);
  const SubspaceSummary s = AnchorSubspace(types, "plane", 1e-6);
  EXPECT_EQ(s.type_id, "plane");
  EXPECT_EQ(s.num_entities, 3);
  EXPECT_EQ(s.effective_dim, 2);
  ASSERT_EQ(s.basis.size(), 2u);
  ASSERT_EQ(s.singular_values.size(), 6u);
  for (size_t i = 0; i < s.basis.size(); ++i) {
    for (size_t j = 0; j < s.basis.size(); ++j) {
      EXPECT_NEAR(s.basis[i].dot(s.basis[j]), i == j ? 1.0 : 0.0, 1e-9);
    }
    // Every basis vector lies in the plane.
    EXPECT_NEAR((plane * (plane.transpose() * s.basis[i])).norm(), 1.0, 1e-9);
  }
  EXPECT_LT((s.base_point - types.types[0].anchors.col(0)).norm(), 1e-15);
}

TEST(AnchorSubspaceTest, UnknownType) {
  std::mt19937_64 rng(4);
  Matrix plane;
  Vector origin;
  const TypeSubspaceParams types = PlaneAnchors(rng, &plane, &origin);
  EXPECT_THROW(AnchorSubspace(types, "absent", 1e-3), NotFoundError);
}

TEST(ProjectionTest, IdempotentAndOrthogonal) {
  std::mt19937_64 rng(5);
  Matrix plane;
  Vector origin;
  const SubspaceSummary s =
      AnchorSubspace(PlaneAnchors(rng, &plane, &origin), "plane", 1e-6);
  for (int k = 0; k < 5; ++k) {
    const Vector x = Gaussian(6, 1, rng);
    const Vector p = ProjectToSubspace(x, s);
    EXPECT_LT((ProjectToSubspace(p, s) - p).norm(), 1e-12);
    for (const Vector &b : s.basis) EXPECT_NEAR((x - p).dot(b), 0.0, 1e-12);
    // The projection lies on origin + span(plane).
    const Vector offset = p - origin;
    EXPECT_LT((offset - plane * (plane.transpose() * offset)).norm(), 1e-9);
  }
}

TEST(PointSubspaceTest, RecoversPlaneFromPoints) {
  std::mt19937_64 rng(6);
  const int dim = 5;
  const Matrix plane =
      Eigen::HouseholderQR<Matrix>(Gaussian(dim, dim, rng)).householderQ() *
      Matrix::Identity(dim, 2);
  const Vector center = Gaussian(dim, 1, rng);
  EmbeddingModel model;
  model.entities.resize(dim, 40);
  std::vector<int> members;
  for (int e = 0; e < 40; ++e) {
    model.entities.col(e) = center + plane * Gaussian(2, 1, rng);
    if (e % 2 == 0) members.push_back(e);
  }
  // Odd entities are off the plane and not members.
  for (int e = 1; e < 40; e += 2) model.entities.col(e) += Gaussian(dim, 1, rng);

  const SubspaceSummary s = PointSubspace(model, "t", members, 1e-6);
  EXPECT_EQ(s.num_entities, 20);
  EXPECT_EQ(s.effective_dim, 2);
  Vector mean = Vector::Zero(dim);
  for (int e : members) mean += model.entities.col(e);
  mean /= members.size();
  EXPECT_LT((s.base_point - mean).norm(), 1e-12);
  for (int e : members) {
    const Vector x = model.entities.col(e);
    EXPECT_LT((ProjectToSubspace(x, s) - x).norm(), 1e-9);
  }
}

TEST(CentroidTest, MeanAndErrors) {
  Vector a(2), b(2), c(3);
  a << 1, 2;
  b << 3, 6;
  c << 0, 0, 0;
  EXPECT_EQ(Centroid({a, b}), Vector((a + b) / 2));
  EXPECT_THROW(Centroid({}), ValidationError);
  EXPECT_THROW(Centroid({a, c}), ValidationError);
}

}  // namespace
}  // namespace eecs
