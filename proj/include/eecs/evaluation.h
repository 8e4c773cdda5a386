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

#ifndef EECS_EVALUATION_H_
#define EECS_EVALUATION_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "eecs/parameters.h"
#include "eecs/ranking.h"
#include "eecs/triple_store.h"
#include "eecs/type_system.h"

namespace eecs {

struct Split {
  std::vector<std::string> train;
  std::vector<std::string> valid;
  std::vector<std::string> test;
};

// Seeded shuffle of `ids` cut into train/valid/test by the given fractions;
// the test part takes the remainder.
Split MakeSplit(std::vector<std::string> ids, double train_fraction,
                double valid_fraction, uint64_t seed);

struct RankingProblem {
  std::string type_id;
  std::string attribute;
  std::map<std::string, double> values;
  Split split;
};

struct InductionProblem {
  std::string relation;
  std::string target;
  Split split;  // of the positive entities
};

struct AnalogyProblem {
  std::vector<std::array<std::string, 4>> quads;
  std::vector<size_t> tune;  // indexes into quads
  std::vector<size_t> test;
};

inline constexpr size_t kMinRankingEntities = 30;

// Problem files hold one JSON object, a JSON array of objects, or one object
// per line. Ranking problems must cover at least kMinRankingEntities
// entities; splits are checked for overlap and coverage. Missing splits are
// generated (60/20/20, or 25/75 for analogies) from `seed`.
std::vector<RankingProblem> LoadRankingProblems(const std::string &path,
                                                uint64_t seed = 1);
std::vector<InductionProblem> LoadInductionProblems(const std::string &path,
                                                    uint64_t seed = 1);
std::vector<AnalogyProblem> LoadAnalogyProblems(const std::string &path,
                                                uint64_t seed = 1);

struct LabeledTriple {
  std::string head;
  std::string relation;
  std::string tail;
  bool positive = true;
};

// "head<TAB>relation<TAB>tail[<TAB>label]"; label is 1/0, +1/-1 or
// true/false and defaults to positive.
std::vector<LabeledTriple> LoadLabeledTriples(const std::string &path);

// Per problem, and aggregated over the scored problems.
struct ProblemResult {
  std::string name;
  std::map<std::string, double> metrics;
  bool skipped = false;
  std::string note;
};

struct TaskResult {
  std::string task;
  std::vector<ProblemResult> problems;
  std::map<std::string, double> aggregate;

  std::string ToJson() const;
};

// Fits a direction on the train split (C tuned on the validation split),
// scores the test split and reports Spearman rho; aggregate "fisher_rho".
TaskResult EvalRanking(const std::vector<RankingProblem> &problems,
                       const EmbeddingModel &model,
                       const RankerOptions &options = {});

// Ranks the candidates (instances of the most specific common type of all
// positives, minus the train and validation positives) by distance to the
// centroid of the train positives; relevant items are the test positives.
// With `exclude_valid` false, validation positives stay in the pool as
// irrelevant candidates. Aggregates "map", "p_at_5" and "mrr". Throws
// ValidationError for a problem without train or test positives.
TaskResult EvalInduction(const std::vector<InductionProblem> &problems,
                         const EmbeddingModel &model, const TypeSystem &types,
                         bool exclude_valid = true);

// Cosine nearest neighbour of b - a + c among the instances of the most
// specific common type of the problem's answers (all entities if they
// share none), excluding a, b and c. Scores the test quads; "accuracy".
TaskResult EvalAnalogy(const std::vector<AnalogyProblem> &problems,
                       const EmbeddingModel &model, const TypeSystem &types);

// Raw head and tail ranks by translation distance; ties go to the smaller
// entity index. "mean_rank" and "hits_at_10".
TaskResult EvalLinkPrediction(const std::vector<LabeledTriple> &test,
                              const EmbeddingModel &model,
                              const RelationParams &rels);

// Per-relation thresholds on the negated translation distance chosen on the
// validation set; a relation absent from validation uses the global
// threshold. "accuracy".
TaskResult EvalTripleClassification(const std::vector<LabeledTriple> &valid,
                                    const std::vector<LabeledTriple> &test,
                                    const EmbeddingModel &model,
                                    const RelationParams &rels);

// Threshold maximizing accuracy of "positive iff score > delta". Candidates
// are the midpoints between consecutive distinct scores and one value below
// and above all scores; ties go to the smallest candidate.
double BestThreshold(const std::vector<double> &scores,
                     const std::vector<bool> &labels);

// One corrupted negative per positive. The head is replaced with
// probability tph / (tph + hpt) of the relation, otherwise the tail; known
// triples are avoided when possible.
std::vector<LabeledTriple> CorruptTriples(const std::vector<LabeledTriple> &positives,
                                          const TripleStore &known,
                                          const std::vector<std::string> &entity_ids,
                                          uint64_t seed);

}  // namespace eecs

#endif  // EECS_EVALUATION_H_
