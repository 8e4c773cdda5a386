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

#include "eecs/objective.h"

#include <sstream>
#include <tuple>

#include <Eigen/SVD>

#include "eecs/errors.h"

namespace eecs {

double WeightF(double x, double x_max, double exponent) {
  if (x >= x_max) return 1.0;
  return std::pow(x / x_max, exponent);
}

double CombineLosses(const LossBreakdown &l, const Hyperparams &hp) {
  return hp.alpha * (l.j_glove + l.j_text_entity) +
         (1.0 - hp.alpha) *
             (l.j_type + l.j_type_comb_penalty + l.j_rel_dim + l.j_rel_dist) +
         hp.beta * (l.j_reg1 + l.j_reg2);
}

double GloveLoss(const CooccurrenceTable &table, const EmbeddingModel &model,
                 const Hyperparams &hp) {
  double sum = 0.0;
  for (const CooccurrenceEntry &e : table.entries()) {
    sum += terms::Glove(e, model, hp).loss;
  }
  return sum;
}

double EntityWordLoss(const CooccurrenceTable &table,
                      const EmbeddingModel &model, const Hyperparams &hp) {
  double sum = 0.0;
  for (const CooccurrenceEntry &e : table.entries()) {
    sum += terms::EntityWord(e, model, hp).loss;
  }
  return sum;
}

namespace terms {

double AnchorSpread(const Matrix &anchors, Matrix *grad) {
  const Vector c = anchors.rowwise().mean();
  const Eigen::Index k = anchors.cols();
  double sum = 0.0;
  Matrix unit = Matrix::Zero(anchors.rows(), k);
  for (Eigen::Index j = 0; j < k; ++j) {
    const Vector d = anchors.col(j) - c;
    const double norm = d.norm();
    sum += norm;
    if (norm > 0.0) unit.col(j) = d / norm;
  }
  if (grad != nullptr) {
    // d/da_j of sum_i |a_i - c| with c = mean(a).
    const Vector mean_unit = unit.rowwise().mean();
    for (Eigen::Index j = 0; j < k; ++j) {
      grad->col(j) += unit.col(j) - mean_unit;
    }
  }
  return sum;
}

void CheckSimplex(const Matrix &coefficients, const std::string &what,
                  double tol) {
  for (Eigen::Index j = 0; j < coefficients.cols(); ++j) {
    const auto col = coefficients.col(j);
    if (!col.allFinite() || col.minCoeff() < -tol ||
        std::abs(col.sum() - 1.0) > tol) {
      throw ContractViolation(what + ": coefficient vector " + std::to_string(j) +
                              " is off the simplex");
    }
  }
}

}  // namespace terms

double CombPenalty(const TypeSubspaceParams &types) {
  double sum = 0.0;
  for (const TypeSubspace &t : types.types) {
    sum += terms::AnchorSpread(t.anchors, nullptr);
  }
  return sum;
}

double TypeLoss(const TypeSubspaceParams &types, const EmbeddingModel &model,
                bool comb) {
  double sum = 0.0;
  for (const TypeSubspace &t : types.types) {
    terms::CheckSimplex(t.coefficients, "type " + t.type_id);
    for (size_t i = 0; i < t.members.size(); ++i) {
      sum += terms::FitResidual(t.anchors, t.coefficients.col(i),
                                model.entities.col(t.members[i]))
                 .squaredNorm();
    }
  }
  if (comb) sum += CombPenalty(types);
  return sum;
}

double RelDistLoss(const TripleStore &triples, const EmbeddingModel &model,
                   const RelationParams &rels) {
  // The head-grouped and tail-grouped sums visit each triple once each.
  double sum = 0.0;
  for (const auto &[key, tails] : triples.rhs()) {
    const Vector moved =
        model.entities.col(key.first) + rels.relations.col(key.second);
    for (int f : tails) sum += (model.entities.col(f) - moved).squaredNorm();
  }
  for (const auto &[key, heads] : triples.lhs()) {
    const Vector moved =
        model.entities.col(key.second) - rels.relations.col(key.first);
    for (int e : heads) sum += (model.entities.col(e) - moved).squaredNorm();
  }
  return sum;
}

double RelDimLoss(const RelationParams &rels, const EmbeddingModel &model) {
  double sum = 0.0;
  for (const RelationGroup &g : rels.groups) {
    terms::CheckSimplex(g.coefficients, "relation group");
    const int count = static_cast<int>(g.members.size()) + 1;
    for (int i = 0; i < count; ++i) {
      sum += terms::FitResidual(g.anchors, g.coefficients.col(i),
                                GroupMemberPoint(g, i, model, rels))
                 .squaredNorm();
    }
  }
  return sum;
}

double NuclearNorm(const Matrix &m) {
  if (!m.allFinite()) throw NumericError("nuclear norm of a non-finite matrix");
  if (m.size() == 0) return 0.0;
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

std::pair<double, double> Regularizer(const TypeSubspaceParams &types,
                                      const RelationParams &rels,
                                      Variant variant) {
  const VariantSpec spec = SpecOf(variant);
  double reg1 = 0.0, reg2 = 0.0;
  if (spec.reg_types) {
    for (const TypeSubspace &t : types.types) {
      reg1 += NuclearNorm(t.DifferenceMatrix());
    }
  }
  if (spec.reg_groups) {
    for (const RelationGroup &g : rels.groups) {
      reg2 += NuclearNorm(g.DifferenceMatrix());
    }
  }
  return {reg1, reg2};
}

LossBreakdown TotalObjective(const TrainingData &data, const Parameters &params,
                             const Hyperparams &hp) {
  const VariantSpec spec = SpecOf(hp.variant);
  const EmbeddingModel &m = params.model;
  LossBreakdown l;
  l.j_glove = GloveLoss(data.word_word, m, hp);
  l.j_text_entity = EntityWordLoss(data.entity_word, m, hp);
  if (spec.type) {
    l.j_type = TypeLoss(params.types, m, false);
    if (spec.type_comb) l.j_type_comb_penalty = CombPenalty(params.types);
  }
  if (spec.rel_dim) l.j_rel_dim = RelDimLoss(params.relations, m);
  if (spec.rel_dist) l.j_rel_dist = RelDistLoss(data.triples, m, params.relations);
  std::tie(l.j_reg1, l.j_reg2) =
      Regularizer(params.types, params.relations, hp.variant);
  l.total = CombineLosses(l, hp);
  return l;
}

std::string Describe(const ParamAddress &a) {
  static const char *kNames[] = {
      "entity",     "word",        "context",          "entity_bias",
      "word_bias",  "context_bias", "type_anchor",     "type_coefficient",
      "relation",   "group_anchor", "group_coefficient"};
  std::ostringstream out;
  out << kNames[static_cast<int>(a.cls)] << "[" << a.index;
  if (a.cls == ParamClass::kTypeAnchor || a.cls == ParamClass::kTypeCoefficient ||
      a.cls == ParamClass::kGroupAnchor ||
      a.cls == ParamClass::kGroupCoefficient) {
    out << "][" << a.slot;
  }
  out << "][" << a.coord << "]";
  return out.str();
}

namespace {

double &At(Matrix &m, int64_t row, int64_t col, const ParamAddress &a) {
  if (row < 0 || col < 0 || row >= m.rows() || col >= m.cols()) {
    throw NotFoundError("no parameter " + Describe(a));
  }
  return m(row, col);
}

double &At(Vector &v, int64_t i, const ParamAddress &a) {
  if (i < 0 || i >= v.size()) throw NotFoundError("no parameter " + Describe(a));
  return v(i);
}

template <typename T>
T &Item(std::vector<T> &v, int64_t i, const ParamAddress &a) {
  if (i < 0 || i >= static_cast<int64_t>(v.size())) {
    throw NotFoundError("no parameter " + Describe(a));
  }
  return v[i];
}

ParamAddress Addr(ParamClass cls, int64_t index, int64_t slot, int32_t coord) {
  return ParamAddress{cls, index, slot, coord};
}

void AddColumn(SparseGradient *g, ParamClass cls, int64_t index, int64_t slot,
               const Vector &v, double scale) {
  for (Eigen::Index c = 0; c < v.size(); ++c) {
    g->Add(Addr(cls, index, slot, static_cast<int32_t>(c)), scale * v(c));
  }
}

// Adds the gradient of |point - A lambda|^2 for the anchors and the
// coefficient column; returns the residual so callers can route d/dpoint.
Vector FitGradient(const Matrix &anchors, const Eigen::Ref<const Vector> &lambda,
                   const Vector &point, ParamClass anchor_cls,
                   ParamClass coef_cls, int64_t block, int64_t column,
                   double scale, SparseGradient *g, double *loss) {
  const Vector r = terms::FitResidual(anchors, lambda, point);
  *loss += r.squaredNorm();
  const Vector d_lambda = -2.0 * anchors.transpose() * r;
  for (Eigen::Index j = 0; j < lambda.size(); ++j) {
    g->Add(Addr(coef_cls, block, column, static_cast<int32_t>(j)),
           scale * d_lambda(j));
    AddColumn(g, anchor_cls, block, j, r, -2.0 * lambda(j) * scale);
  }
  return r;
}

}  // namespace

double &ParamRef(Parameters &p, const ParamAddress &a) {
  EmbeddingModel &m = p.model;
  switch (a.cls) {
    case ParamClass::kEntity:
      return At(m.entities, a.coord, a.index, a);
    case ParamClass::kWord:
      return At(m.words, a.coord, a.index, a);
    case ParamClass::kContext:
      return At(m.contexts, a.coord, a.index, a);
    case ParamClass::kEntityBias:
      return At(m.entity_bias, a.index, a);
    case ParamClass::kWordBias:
      return At(m.word_bias, a.index, a);
    case ParamClass::kContextBias:
      return At(m.context_bias, a.index, a);
    case ParamClass::kTypeAnchor:
      return At(Item(p.types.types, a.index, a).anchors, a.coord, a.slot, a);
    case ParamClass::kTypeCoefficient:
      return At(Item(p.types.types, a.index, a).coefficients, a.coord, a.slot, a);
    case ParamClass::kRelation:
      return At(p.relations.relations, a.coord, a.index, a);
    case ParamClass::kGroupAnchor:
      return At(Item(p.relations.groups, a.index, a).anchors, a.coord, a.slot, a);
    case ParamClass::kGroupCoefficient:
      return At(Item(p.relations.groups, a.index, a).coefficients, a.coord,
                a.slot, a);
  }
  throw NotFoundError("no parameter " + Describe(a));
}

Batch Batch::Everything(const TrainingData &data, const Parameters &params) {
  Batch b;
  for (size_t i = 0; i < data.word_word.size(); ++i) b.word_word.push_back(i);
  for (size_t i = 0; i < data.entity_word.size(); ++i) b.entity_word.push_back(i);
  for (size_t s = 0; s < params.types.types.size(); ++s) {
    b.types.push_back(static_cast<int>(s));
  }
  for (size_t g = 0; g < params.relations.groups.size(); ++g) {
    b.groups.push_back(static_cast<int>(g));
  }
  for (size_t t = 0; t < data.triples.size(); ++t) b.triples.push_back(t);
  return b;
}

std::pair<double, SparseGradient> LossAndGradients(const Batch &batch,
                                                   const TrainingData &data,
                                                   const Parameters &params,
                                                   const Hyperparams &hp) {
  const VariantSpec spec = SpecOf(hp.variant);
  const EmbeddingModel &m = params.model;
  const double a = hp.alpha;
  const double s = 1.0 - hp.alpha;
  SparseGradient g;
  double text = 0.0, structure = 0.0;

  for (size_t i : batch.word_word) {
    const CooccurrenceEntry &e = data.word_word.entries().at(i);
    const terms::TextTerm t = terms::Glove(e, m, hp);
    text += t.loss;
    AddColumn(&g, ParamClass::kWord, e.row, 0, m.contexts.col(e.col), a * t.coef);
    AddColumn(&g, ParamClass::kContext, e.col, 0, m.words.col(e.row), a * t.coef);
    g.Add(Addr(ParamClass::kWordBias, e.row, 0, 0), a * t.coef);
    g.Add(Addr(ParamClass::kContextBias, e.col, 0, 0), a * t.coef);
  }
  for (size_t i : batch.entity_word) {
    const CooccurrenceEntry &e = data.entity_word.entries().at(i);
    const terms::TextTerm t = terms::EntityWord(e, m, hp);
    text += t.loss;
    AddColumn(&g, ParamClass::kEntity, e.row, 0, m.words.col(e.col), a * t.coef);
    AddColumn(&g, ParamClass::kWord, e.col, 0, m.entities.col(e.row), a * t.coef);
    g.Add(Addr(ParamClass::kEntityBias, e.row, 0, 0), a * t.coef);
    g.Add(Addr(ParamClass::kWordBias, e.col, 0, 0), a * t.coef);
  }

  if (spec.type) {
    for (int ti : batch.types) {
      const TypeSubspace &t = params.types.types.at(ti);
      terms::CheckSimplex(t.coefficients, "type " + t.type_id);
      for (size_t i = 0; i < t.members.size(); ++i) {
        const int e = t.members[i];
        const Vector r = FitGradient(
            t.anchors, t.coefficients.col(i), m.entities.col(e),
            ParamClass::kTypeAnchor, ParamClass::kTypeCoefficient, ti,
            static_cast<int64_t>(i), s, &g, &structure);
        AddColumn(&g, ParamClass::kEntity, e, 0, r, 2.0 * s);
      }
      if (spec.type_comb) {
        Matrix grad = Matrix::Zero(t.anchors.rows(), t.anchors.cols());
        structure += terms::AnchorSpread(t.anchors, &grad);
        for (Eigen::Index j = 0; j < grad.cols(); ++j) {
          AddColumn(&g, ParamClass::kTypeAnchor, ti, j, grad.col(j), s);
        }
      }
    }
  }

  if (spec.rel_dim) {
    const RelationParams &rels = params.relations;
    for (int gi : batch.groups) {
      const RelationGroup &grp = rels.groups.at(gi);
      terms::CheckSimplex(grp.coefficients, "relation group");
      const int count = static_cast<int>(grp.members.size()) + 1;
      for (int i = 0; i < count; ++i) {
        const Vector r = FitGradient(
            grp.anchors, grp.coefficients.col(i),
            GroupMemberPoint(grp, i, m, rels), ParamClass::kGroupAnchor,
            ParamClass::kGroupCoefficient, gi, i, s, &g, &structure);
        if (i < count - 1) {
          AddColumn(&g, ParamClass::kEntity, grp.members[i], 0, r, 2.0 * s);
        } else {
          const double sign = grp.side == GroupSide::kHead ? 1.0 : -1.0;
          AddColumn(&g, ParamClass::kEntity, grp.entity, 0, r, 2.0 * s);
          AddColumn(&g, ParamClass::kRelation, grp.relation, 0, r, 2.0 * s * sign);
        }
      }
    }
  }

  if (spec.rel_dist) {
    for (size_t ti : batch.triples) {
      const Triple &t = data.triples.triples().at(ti);
      const Vector d = m.entities.col(t.tail) - m.entities.col(t.head) -
                       params.relations.relations.col(t.relation);
      structure += 2.0 * d.squaredNorm();
      AddColumn(&g, ParamClass::kEntity, t.tail, 0, d, 4.0 * s);
      AddColumn(&g, ParamClass::kEntity, t.head, 0, d, -4.0 * s);
      AddColumn(&g, ParamClass::kRelation, t.relation, 0, d, -4.0 * s);
    }
  }
  return {a * text + s * structure, std::move(g)};
}

}  // namespace eecs
