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

#ifndef EECS_PIPELINE_H_
#define EECS_PIPELINE_H_

#include <string>
#include <utility>
#include <vector>

#include "eecs/corpus.h"
#include "eecs/training_data.h"
#include "eecs/vocabulary.h"

namespace eecs {

struct IngestOptions {
  std::string corpus;
  std::string instances;  // optional
  std::string subclass;   // optional
  std::string triples;    // optional
  int window = 10;
  int64_t min_count = 10;
  int64_t min_doc_mentions = 10;
  bool expand_mentions = true;
  // (relation, target) pairs whose triples (., relation, target) are held
  // out of training.
  std::vector<std::pair<std::string, std::string>> omit;
};

struct Dataset {
  Vocabulary vocab;
  EntityCatalog catalog;
  TrainingData data;
};

// Loads the corpus and the optional type and triple files and builds the
// vocabulary, catalog, co-occurrence tables, type system and triple store.
Dataset Ingest(const IngestOptions &options);

// Same, starting from documents already in memory.
Dataset BuildDataset(const std::vector<Document> &docs,
                     const IngestOptions &options);

}  // namespace eecs

#endif  // EECS_PIPELINE_H_
