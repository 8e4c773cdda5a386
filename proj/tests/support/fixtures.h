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

#ifndef EECS_TESTS_SUPPORT_FIXTURES_H_
#define EECS_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "eecs/corpus.h"
#include "eecs/parameters.h"
#include "eecs/training_data.h"

namespace eecs::testing {

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::string &path() const { return path_; }
  std::string File(const std::string &name) const;

 private:
  std::string path_;
};

void WriteFile(const std::string &path, const std::string &contents);
std::string ReadFile(const std::string &path);

// Small random problem touching every parameter class: a few words,
// entities, two nested types, two relations with their groups, and random
// co-occurrence tables. Every parameter is randomized; coefficient columns
// are drawn from the interior of the simplex.
struct RandomProblem {
  TrainingData data;
  ModelShape shape;
  Parameters params;
};
RandomProblem MakeRandomProblem(uint64_t seed, int dim);

// Entities of one type lying near a low-dimensional affine subspace, with an
// entity-word table whose log counts are bilinear in the hidden points.
struct LowRankFixture {
  int dim = 10;
  int subspace_dim = 3;
  double noise = 0.01;
  double base = 5.0;  // log-count offset
  Matrix points;      // dim x entities, first `num_typed` are type members
  Matrix words;       // generating word vectors
  Vector center;
  Matrix basis;       // dim x subspace_dim, orthonormal
  int num_typed = 100;
  TrainingData data;
  ModelShape shape;
};
// `num_typed` members of type "t" plus `num_held_out` further entities drawn
// from the same subspace but not asserted to the type.
LowRankFixture MakeLowRankFixture(uint64_t seed, int num_typed = 100,
                                  int num_held_out = 0, int num_words = 40);
// Starts from the generating points and words, with anchors centered on the
// type's centroid.
void WarmStart(const LowRankFixture &f, Parameters *params);

// One article per entity. The word "big" occurs round(exp(a)) times in the
// article of an entity with hidden attribute a ~ U(0, 4); filler words occur
// a random number of times.
struct AttributeCorpus {
  std::vector<Document> docs;
  std::map<std::string, double> attribute;
};
AttributeCorpus MakeAttributeCorpus(uint64_t seed, int num_entities = 100,
                                    int num_fillers = 20);

// Entities on a translation-consistent graph: p_f = p_e + r_k for every
// triple. With `num_words` > 0, adds an entity-word table generated from the
// same hidden points.
struct TranslationGraph {
  TrainingData data;
  ModelShape shape;
  Matrix points;
  Matrix relations;
};
TranslationGraph MakeTranslationGraph(uint64_t seed, int num_entities = 20,
                                      int dim = 8, int num_words = 0);

// Writes the micro corpus and its companion files into `dir`:
//   corpus.jsonl, instances.tsv, subclass.tsv, triples.tsv,
//   ranking.json, induction.json, analogy.json,
//   link_valid.tsv, link_test.tsv (labeled).
void WriteMicroCorpus(const std::string &dir, uint64_t seed = 7);

}  // namespace eecs::testing

#endif  // EECS_TESTS_SUPPORT_FIXTURES_H_
