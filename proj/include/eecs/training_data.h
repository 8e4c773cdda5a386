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

#ifndef EECS_TRAINING_DATA_H_
#define EECS_TRAINING_DATA_H_

#include "eecs/cooccurrence.h"
#include "eecs/triple_store.h"
#include "eecs/type_system.h"

namespace eecs {

// Everything the objective is evaluated on besides the parameters.
struct TrainingData {
  CooccurrenceTable word_word{CooccurrenceKind::kWordWord};
  CooccurrenceTable entity_word{CooccurrenceKind::kEntityWord};
  TypeSystem types;
  TripleStore triples;
};

}  // namespace eecs

#endif  // EECS_TRAINING_DATA_H_
