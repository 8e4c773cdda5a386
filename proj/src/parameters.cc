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

#include "eecs/parameters.h"

#include <algorithm>
#include <random>

#include "eecs/errors.h"

namespace eecs {

namespace {

bool SameMatrix(const Matrix &a, const Matrix &b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::equal(a.data(), a.data() + a.size(), b.data());
}

Matrix DifferenceRows(const Matrix &anchors) {
  const int n = static_cast<int>(anchors.rows());
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m.row(i) = (anchors.col(i + 1) - anchors.col(0)).transpose();
  }
  return m;
}

void SetAnchorsFromRows(const Matrix &m, Matrix *anchors) {
  const int n = static_cast<int>(anchors->rows());
  for (int i = 0; i < n; ++i) {
    anchors->col(i + 1) = anchors->col(0) + m.row(i).transpose();
  }
}

void FillUniform(std::mt19937_64 &rng, double half_width, Matrix *m) {
  std::uniform_real_distribution<double> dist(-half_width, half_width);
  for (Eigen::Index j = 0; j < m->cols(); ++j) {
    for (Eigen::Index i = 0; i < m->rows(); ++i) (*m)(i, j) = dist(rng);
  }
}

Matrix AnchorsAround(const Vector &centroid, int n, std::mt19937_64 &rng) {
  Matrix anchors(n, n + 1);
  FillUniform(rng, 0.1 / n, &anchors);
  anchors.colwise() += centroid;
  return anchors;
}

}  // namespace

int EmbeddingModel::FindEntity(const std::string &id) const {
  auto it = std::find(entity_ids.begin(), entity_ids.end(), id);
  return it == entity_ids.end() ? -1 : static_cast<int>(it - entity_ids.begin());
}

Matrix TypeSubspace::DifferenceMatrix() const { return DifferenceRows(anchors); }

void TypeSubspace::SetFromDifferenceMatrix(const Matrix &m) {
  SetAnchorsFromRows(m, &anchors);
}

Matrix RelationGroup::DifferenceMatrix() const { return DifferenceRows(anchors); }

void RelationGroup::SetFromDifferenceMatrix(const Matrix &m) {
  SetAnchorsFromRows(m, &anchors);
}

int TypeSubspaceParams::Find(const std::string &type_id) const {
  for (size_t i = 0; i < types.size(); ++i) {
    if (types[i].type_id == type_id) return static_cast<int>(i);
  }
  return -1;
}

bool Identical(const Parameters &a, const Parameters &b) {
  const EmbeddingModel &ma = a.model, &mb = b.model;
  if (ma.entity_ids != mb.entity_ids || ma.word_ids != mb.word_ids) return false;
  if (!SameMatrix(ma.entities, mb.entities) || !SameMatrix(ma.words, mb.words) ||
      !SameMatrix(ma.contexts, mb.contexts) ||
      !SameMatrix(ma.entity_bias, mb.entity_bias) ||
      !SameMatrix(ma.word_bias, mb.word_bias) ||
      !SameMatrix(ma.context_bias, mb.context_bias)) {
    return false;
  }
  if (a.types.types.size() != b.types.types.size()) return false;
  for (size_t s = 0; s < a.types.types.size(); ++s) {
    const TypeSubspace &ta = a.types.types[s], &tb = b.types.types[s];
    if (ta.type_id != tb.type_id || ta.members != tb.members ||
        !SameMatrix(ta.anchors, tb.anchors) ||
        !SameMatrix(ta.coefficients, tb.coefficients)) {
      return false;
    }
  }
  const RelationParams &ra = a.relations, &rb = b.relations;
  if (ra.relation_ids != rb.relation_ids ||
      !SameMatrix(ra.relations, rb.relations) ||
      ra.groups.size() != rb.groups.size()) {
    return false;
  }
  for (size_t g = 0; g < ra.groups.size(); ++g) {
    const RelationGroup &ga = ra.groups[g], &gb = rb.groups[g];
    if (ga.side != gb.side || ga.entity != gb.entity ||
        ga.relation != gb.relation || ga.members != gb.members ||
        !SameMatrix(ga.anchors, gb.anchors) ||
        !SameMatrix(ga.coefficients, gb.coefficients)) {
      return false;
    }
  }
  return true;
}

ModelShape ModelShape::FromData(const EntityCatalog &catalog,
                                const Vocabulary &vocab,
                                const TypeSystem &types,
                                const TripleStore &triples, Variant variant) {
  const VariantSpec spec = SpecOf(variant);
  ModelShape shape;
  shape.entity_ids = catalog.ids();
  shape.word_ids = vocab.ids();
  if (spec.type) {
    for (int s = 0; s < types.size(); ++s) {
      shape.type_ids.push_back(types.id(s));
      shape.type_members.push_back(types.Instances(s));
    }
  }
  shape.relation_ids = triples.relation_ids();
  if (spec.rel_dim) {
    for (const auto &[key, tails] : triples.rhs()) {
      shape.groups.push_back(Group{GroupSide::kHead, key.first, key.second, tails});
    }
    for (const auto &[key, heads] : triples.lhs()) {
      shape.groups.push_back(Group{GroupSide::kTail, key.second, key.first, heads});
    }
  }
  return shape;
}

Parameters InitParameters(const ModelShape &shape, const Hyperparams &hp,
                          uint64_t seed) {
  hp.Validate();
  if (shape.entity_ids.empty()) {
    throw ValidationError("cannot initialize a model without entities");
  }
  if (shape.word_ids.empty()) {
    throw ValidationError("cannot initialize a model without words");
  }
  const int n = hp.dim;
  const int num_entities = static_cast<int>(shape.entity_ids.size());
  const int num_words = static_cast<int>(shape.word_ids.size());
  std::mt19937_64 rng(seed);

  Parameters params;
  EmbeddingModel &model = params.model;
  model.entity_ids = shape.entity_ids;
  model.word_ids = shape.word_ids;
  model.entities.resize(n, num_entities);
  model.words.resize(n, num_words);
  model.contexts.resize(n, num_words);
  FillUniform(rng, 0.5 / n, &model.entities);
  FillUniform(rng, 0.5 / n, &model.words);
  FillUniform(rng, 0.5 / n, &model.contexts);
  model.entity_bias = Vector::Zero(num_entities);
  model.word_bias = Vector::Zero(num_words);
  model.context_bias = Vector::Zero(num_words);

  RelationParams &rels = params.relations;
  rels.relation_ids = shape.relation_ids;
  rels.relations.resize(n, static_cast<Eigen::Index>(shape.relation_ids.size()));
  FillUniform(rng, 0.5 / n, &rels.relations);

  const double uniform = 1.0 / (n + 1);
  for (size_t s = 0; s < shape.type_ids.size(); ++s) {
    TypeSubspace type;
    type.type_id = shape.type_ids[s];
    type.members = shape.type_members[s];
    Vector centroid = Vector::Zero(n);
    for (int e : type.members) centroid += model.entities.col(e);
    if (!type.members.empty()) centroid /= static_cast<double>(type.members.size());
    type.anchors = AnchorsAround(centroid, n, rng);
    type.coefficients = Matrix::Constant(
        n + 1, static_cast<Eigen::Index>(type.members.size()), uniform);
    params.types.types.push_back(std::move(type));
  }

  for (const ModelShape::Group &g : shape.groups) {
    RelationGroup group;
    group.side = g.side;
    group.entity = g.entity;
    group.relation = g.relation;
    group.members = g.members;
    const int count = static_cast<int>(g.members.size()) + 1;
    Vector centroid = Vector::Zero(n);
    for (int i = 0; i < count; ++i) {
      centroid += GroupMemberPoint(group, i, model, rels);
    }
    centroid /= count;
    group.anchors = AnchorsAround(centroid, n, rng);
    group.coefficients = Matrix::Constant(n + 1, count, uniform);
    rels.groups.push_back(std::move(group));
  }
  return params;
}

Vector GroupMemberPoint(const RelationGroup &group, int i,
                        const EmbeddingModel &model,
                        const RelationParams &rels) {
  if (i < static_cast<int>(group.members.size())) {
    return model.entities.col(group.members[i]);
  }
  if (group.side == GroupSide::kHead) {
    return model.entities.col(group.entity) + rels.relations.col(group.relation);
  }
  return model.entities.col(group.entity) - rels.relations.col(group.relation);
}

}  // namespace eecs
