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

#ifndef EECS_HYPERPARAMS_H_
#define EECS_HYPERPARAMS_H_

#include <cstdint>
#include <string>
#include <vector>

namespace eecs {

// Model variants. kFull uses every component; the others drop or replace
// components as listed in VariantSpec.
enum class Variant {
  kFull,
  kNoRel,
  kNoType,
  kNoNuclearNorm,
  kText,
  kRelDim,
  kRelDist,
  kTypeComb,
  kTypeDist,
};

// Which objective components a variant switches on.
struct VariantSpec {
  bool type = false;        // subspace fit of entities to their types
  bool type_comb = false;   // anchor-to-centroid distance penalty
  bool rel_dim = false;     // subspace fit of relation groups
  bool rel_dist = false;    // translation distance
  bool reg_types = false;   // nuclear norm of type anchor matrices
  bool reg_groups = false;  // nuclear norm of relation group anchor matrices

  bool uses_relations() const { return rel_dim || rel_dist; }
};

VariantSpec SpecOf(Variant v);
std::string VariantName(Variant v);
// Accepts the names returned by VariantName. Throws ValidationError.
Variant ParseVariant(const std::string &name);
const std::vector<Variant> &AllVariants();

struct Hyperparams {
  int dim = 300;
  double alpha = 0.5;     // text weight; structure terms get 1 - alpha
  double beta = 300.0;    // nuclear norm weight
  double x_max = 100.0;   // co-occurrence weighting cutoff
  double weight_exp = 0.75;
  int epochs = 20;
  double learn_rate = 0.05;
  Variant variant = Variant::kFull;
  double rank_eps = 1e-3;
  uint64_t seed = 1;

  // Throws ValidationError when a field is out of range.
  void Validate() const;
};

}  // namespace eecs

#endif  // EECS_HYPERPARAMS_H_
