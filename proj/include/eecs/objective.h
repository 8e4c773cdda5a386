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

#ifndef EECS_OBJECTIVE_H_
#define EECS_OBJECTIVE_H_

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eecs/cooccurrence.h"
#include "eecs/hyperparams.h"
#include "eecs/parameters.h"
#include "eecs/training_data.h"
#include "eecs/triple_store.h"

namespace eecs {

// Co-occurrence weighting: (x / x_max)^exponent below x_max, 1 above.
double WeightF(double x, double x_max, double exponent);

// Value of every objective component. Components a variant does not use are
// zero. `total` combines them as
//   alpha * (glove + text_entity)
//   + (1 - alpha) * (type + type_comb_penalty + rel_dim + rel_dist)
//   + beta * (reg1 + reg2).
struct LossBreakdown {
  double j_glove = 0.0;
  double j_text_entity = 0.0;
  double j_type = 0.0;
  double j_type_comb_penalty = 0.0;
  double j_rel_dim = 0.0;
  double j_rel_dist = 0.0;
  double j_reg1 = 0.0;
  double j_reg2 = 0.0;
  double total = 0.0;

  double text() const { return j_glove + j_text_entity; }
};

// Recomputes `total` from the components.
double CombineLosses(const LossBreakdown &losses, const Hyperparams &hp);

// Weighted least squares over the word-word table.
double GloveLoss(const CooccurrenceTable &table, const EmbeddingModel &model,
                 const Hyperparams &hp);

// Weighted least squares over the entity-word table, using entity points,
// word vectors, entity biases and word biases.
double EntityWordLoss(const CooccurrenceTable &table,
                      const EmbeddingModel &model, const Hyperparams &hp);

// Squared distance of every type instance to the convex combination of its
// type's anchors. With `comb`, adds CombPenalty. Throws ContractViolation if a
// coefficient vector is off the simplex by more than 1e-9.
double TypeLoss(const TypeSubspaceParams &types, const EmbeddingModel &model,
                bool comb);

// Sum over types and anchors of the (unsquared) Euclidean distance between
// the anchor and the centroid of its type's anchors.
double CombPenalty(const TypeSubspaceParams &types);

// Translation loss summed over both grouped sums: every triple contributes
// ||p_f - p_e - r_k||^2 once through rhs(e, k) and once through lhs(k, f).
double RelDistLoss(const TripleStore &triples, const EmbeddingModel &model,
                   const RelationParams &rels);

// Squared distance of every relation group point (members and translated
// point) to the convex combination of the group's anchors.
double RelDimLoss(const RelationParams &rels, const EmbeddingModel &model);

// Sum of singular values. Throws NumericError on non-finite input.
double NuclearNorm(const Matrix &m);

// (sum of type nuclear norms, sum of group nuclear norms), zeroed for
// components the variant does not regularize.
std::pair<double, double> Regularizer(const TypeSubspaceParams &types,
                                      const RelationParams &rels,
                                      Variant variant);

LossBreakdown TotalObjective(const TrainingData &data, const Parameters &params,
                             const Hyperparams &hp);

// Address of one scalar parameter. `index` selects the entity, word, type,
// relation or group; `slot` selects the anchor or the coefficient column
// within a type or group; `coord` the coordinate.
enum class ParamClass : uint8_t {
  kEntity,
  kWord,
  kContext,
  kEntityBias,
  kWordBias,
  kContextBias,
  kTypeAnchor,
  kTypeCoefficient,
  kRelation,
  kGroupAnchor,
  kGroupCoefficient,
};

struct ParamAddress {
  ParamClass cls = ParamClass::kEntity;
  int64_t index = 0;
  int64_t slot = 0;
  int32_t coord = 0;

  auto operator<=>(const ParamAddress &) const = default;
};

std::string Describe(const ParamAddress &address);

// Reference to the scalar at `address`. Throws NotFoundError when the
// address is out of range.
double &ParamRef(Parameters &params, const ParamAddress &address);

class SparseGradient {
 public:
  void Add(const ParamAddress &address, double value) {
    entries_[address] += value;
  }
  double Get(const ParamAddress &address) const {
    auto it = entries_.find(address);
    return it == entries_.end() ? 0.0 : it->second;
  }
  void Merge(const SparseGradient &other) {
    for (const auto &[a, v] : other.entries_) entries_[a] += v;
  }
  size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<ParamAddress, double> entries_;
};

// Subset of objective terms. Types and groups contribute all of their
// instance terms (and, for type_comb variants, the anchor penalty).
struct Batch {
  std::vector<size_t> word_word;
  std::vector<size_t> entity_word;
  std::vector<int> types;
  std::vector<int> groups;
  std::vector<size_t> triples;

  static Batch Everything(const TrainingData &data, const Parameters &params);
};

// Value and analytic gradient of the smooth terms referenced by `batch`,
// weighted by alpha and 1 - alpha as in the total objective. Nuclear norms
// are excluded; they are handled by the proximal step of the optimizer.
std::pair<double, SparseGradient> LossAndGradients(const Batch &batch,
                                                   const TrainingData &data,
                                                   const Parameters &params,
                                                   const Hyperparams &hp);

// Per-term building blocks shared by the objective and the optimizer.
namespace terms {

// A weighted least-squares text term f(x) * r^2 with r the residual.
// `coef` = 2 f(x) r is the derivative of the term with respect to r.
struct TextTerm {
  double loss;
  double coef;
};

inline TextTerm Glove(const CooccurrenceEntry &e, const EmbeddingModel &m,
                      const Hyperparams &hp) {
  const double f = WeightF(e.weight, hp.x_max, hp.weight_exp);
  const double r = m.words.col(e.row).dot(m.contexts.col(e.col)) +
                   m.word_bias(e.row) + m.context_bias(e.col) -
                   std::log(e.weight);
  return {f * r * r, 2.0 * f * r};
}

inline TextTerm EntityWord(const CooccurrenceEntry &e, const EmbeddingModel &m,
                           const Hyperparams &hp) {
  const double f = WeightF(e.weight, hp.x_max, hp.weight_exp);
  const double r = m.entities.col(e.row).dot(m.words.col(e.col)) +
                   m.entity_bias(e.row) + m.word_bias(e.col) -
                   std::log(e.weight);
  return {f * r * r, 2.0 * f * r};
}

// point - anchors * coefficients
template <typename P, typename C>
Vector FitResidual(const Matrix &anchors, const C &coefficients,
                   const P &point) {
  return point - anchors * coefficients;
}

// Distance penalty of one anchor set; adds its gradient to `grad` (same
// shape as `anchors`) when non-null. Anchors at the centroid contribute a
// zero subgradient.
double AnchorSpread(const Matrix &anchors, Matrix *grad);

// Throws ContractViolation if a column is off the simplex by more than tol.
void CheckSimplex(const Matrix &coefficients, const std::string &what,
                  double tol = 1e-9);

}  // namespace terms

}  // namespace eecs

#endif  // EECS_OBJECTIVE_H_
