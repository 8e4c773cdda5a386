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

#ifndef EECS_PARAMETERS_H_
#define EECS_PARAMETERS_H_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "eecs/hyperparams.h"
#include "eecs/triple_store.h"
#include "eecs/type_system.h"
#include "eecs/vocabulary.h"

namespace eecs {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Entity points, word and context vectors, and biases. Vectors are stored as
// columns.
struct EmbeddingModel {
  std::vector<std::string> entity_ids;
  std::vector<std::string> word_ids;
  Matrix entities;  // dim x |E|
  Matrix words;     // dim x V
  Matrix contexts;  // dim x V
  Vector entity_bias;
  Vector word_bias;
  Vector context_bias;

  int dim() const { return static_cast<int>(entities.rows()); }
  int num_entities() const { return static_cast<int>(entities.cols()); }
  int num_words() const { return static_cast<int>(words.cols()); }
  int FindEntity(const std::string &id) const;
};

// Anchor points of one semantic type and the convex-combination
// coefficients of its instances. Coefficient columns lie on the probability
// simplex.
struct TypeSubspace {
  std::string type_id;
  std::vector<int> members;  // sorted entity indices
  Matrix anchors;            // dim x (dim + 1), column j is anchor j
  Matrix coefficients;       // (dim + 1) x |members|

  // Row i is anchor i+1 minus anchor 0.
  Matrix DifferenceMatrix() const;
  // Replaces anchors 1..dim by anchor 0 plus the rows of `m`.
  void SetFromDifferenceMatrix(const Matrix &m);
};

struct TypeSubspaceParams {
  std::vector<TypeSubspace> types;

  int Find(const std::string &type_id) const;
};

// kHead groups collect {p_f : f in rhs(e, k)} plus the translated point
// p_e + r_k; kTail groups collect {p_e : e in lhs(k, f)} plus p_f - r_k.
enum class GroupSide : int32_t { kHead = 0, kTail = 1 };

struct RelationGroup {
  GroupSide side = GroupSide::kHead;
  int entity = 0;  // e for kHead, f for kTail
  int relation = 0;
  std::vector<int> members;
  Matrix anchors;       // dim x (dim + 1)
  Matrix coefficients;  // (dim + 1) x (|members| + 1); last column is the
                        // translated point

  Matrix DifferenceMatrix() const;
  void SetFromDifferenceMatrix(const Matrix &m);
};

struct RelationParams {
  std::vector<std::string> relation_ids;
  Matrix relations;  // dim x |R|
  std::vector<RelationGroup> groups;
};

struct Parameters {
  EmbeddingModel model;
  TypeSubspaceParams types;
  RelationParams relations;
};

// Exact equality of every field, including shapes.
bool Identical(const Parameters &a, const Parameters &b);

// Structure the parameters are allocated for.
struct ModelShape {
  std::vector<std::string> entity_ids;
  std::vector<std::string> word_ids;
  std::vector<std::string> type_ids;
  std::vector<std::vector<int>> type_members;
  std::vector<std::string> relation_ids;
  struct Group {
    GroupSide side;
    int entity;
    int relation;
    std::vector<int> members;
  };
  std::vector<Group> groups;

  // Types are included when the variant fits types; relation groups when it
  // fits relation subspaces.
  static ModelShape FromData(const EntityCatalog &catalog,
                             const Vocabulary &vocab, const TypeSystem &types,
                             const TripleStore &triples, Variant variant);
};

// Entity, word, context, and relation coordinates are drawn uniformly from
// [-0.5/n, 0.5/n]; biases start at zero. Anchors start at the centroid of
// their group's initial points plus uniform noise in [-0.1/n, 0.1/n], and
// every coefficient vector starts at 1/(n+1). Deterministic given `seed`.
Parameters InitParameters(const ModelShape &shape, const Hyperparams &hp,
                          uint64_t seed);

// Position of the points a group's anchors are fitted to: members first,
// then the translated point.
Vector GroupMemberPoint(const RelationGroup &group, int i,
                        const EmbeddingModel &model,
                        const RelationParams &rels);

}  // namespace eecs

#endif  // EECS_PARAMETERS_H_
