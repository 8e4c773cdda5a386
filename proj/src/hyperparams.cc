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

#include "eecs/hyperparams.h"

#include <cmath>

#include "eecs/errors.h"

namespace eecs {

VariantSpec SpecOf(Variant v) {
  //             type   comb   rdim   rdist  reg1   reg2
  switch (v) {
    case Variant::kFull:
      return {true, false, true, true, true, true};
    case Variant::kNoRel:
      return {true, false, false, false, true, false};
    case Variant::kNoType:
      return {false, false, true, true, false, true};
    case Variant::kNoNuclearNorm:
      return {true, false, true, true, false, false};
    case Variant::kText:
      return {false, false, false, false, false, false};
    case Variant::kRelDim:
      return {true, false, true, false, true, true};
    case Variant::kRelDist:
      return {true, false, false, true, true, false};
    case Variant::kTypeComb:
      return {true, true, true, true, true, true};
    case Variant::kTypeDist:
      return {true, true, true, true, false, true};
  }
  return {};
}

std::string VariantName(Variant v) {
  switch (v) {
    case Variant::kFull: return "full";
    case Variant::kNoRel: return "no_rel";
    case Variant::kNoType: return "no_type";
    case Variant::kNoNuclearNorm: return "no_nn";
    case Variant::kText: return "text";
    case Variant::kRelDim: return "rel_dim";
    case Variant::kRelDist: return "rel_dist";
    case Variant::kTypeComb: return "type_comb";
    case Variant::kTypeDist: return "type_dist";
  }
  return "?";
}

const std::vector<Variant> &AllVariants() {
  static const std::vector<Variant> kAll = {
      Variant::kFull,    Variant::kNoRel,   Variant::kNoType,
      Variant::kNoNuclearNorm, Variant::kText, Variant::kRelDim,
      Variant::kRelDist, Variant::kTypeComb, Variant::kTypeDist};
  return kAll;
}

Variant ParseVariant(const std::string &name) {
  for (Variant v : AllVariants()) {
    if (VariantName(v) == name) return v;
  }
  std::string valid;
  for (Variant v : AllVariants()) valid += (valid.empty() ? "" : ", ") + VariantName(v);
  throw ValidationError("unknown variant '" + name + "' (valid: " + valid + ")");
}

void Hyperparams::Validate() const {
  if (dim < 1) throw ValidationError("dim must be at least 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ValidationError("beta must be non-negative");
  }
  if (!(x_max > 0.0)) throw ValidationError("x_max must be positive");
  if (!(weight_exp > 0.0 && weight_exp <= 1.0)) {
    throw ValidationError("weight exponent must lie in (0, 1]");
  }
  if (epochs < 0) throw ValidationError("epochs must be non-negative");
  if (!(learn_rate > 0.0)) throw ValidationError("learning rate must be positive");
  if (!(rank_eps > 0.0)) throw ValidationError("rank_eps must be positive");
}

}  // namespace eecs
