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

#include "eecs/pipeline.h"

#include <spdlog/spdlog.h>

#include "eecs/cooccurrence.h"
#include "eecs/errors.h"
#include "eecs/triple_store.h"
#include "eecs/type_system.h"

namespace eecs {

Dataset Ingest(const IngestOptions &options) {
  if (options.corpus.empty()) throw ValidationError("--corpus is required");
  return BuildDataset(LoadCorpus(options.corpus), options);
}

Dataset BuildDataset(const std::vector<Document> &input,
                     const IngestOptions &options) {
  if (options.window < 1) throw ValidationError("window must be at least 1");
  std::vector<Document> docs;
  docs.reserve(input.size());
  for (const Document &doc : input) {
    docs.push_back(options.expand_mentions
                       ? ExpandAnchorMentions(doc, CollectSurfaceForms(doc))
                       : doc);
  }
  auto [vocab, catalog] =
      BuildVocabAndCatalog(docs, options.min_count, options.min_doc_mentions);
  Dataset out{std::move(vocab), std::move(catalog), TrainingData{}};
  out.data.word_word = CountWordWord(docs, out.vocab, options.window);
  out.data.entity_word =
      CountEntityWord(docs, out.vocab, out.catalog, options.window);

  if (!options.instances.empty()) {
    TypeLoadStats stats;
    out.data.types = LoadTypeSystem(options.instances, options.subclass,
                                    out.catalog, &stats);
    if (stats.unknown_entities > 0) {
      spdlog::warn("skipped {} type assertions about unknown entities",
                   stats.unknown_entities);
    }
  } else if (!options.subclass.empty()) {
    throw ValidationError("--subclass requires --instances");
  }

  if (!options.triples.empty()) {
    TripleLoadStats stats;
    TripleStore store = LoadTriples(options.triples, out.catalog, &stats);
    for (const auto &[relation, target] : options.omit) {
      const int k = store.FindRelation(relation);
      const int f = out.catalog.Find(target);
      if (k < 0 || f < 0) {
        spdlog::warn("nothing to omit for ({}, {})", relation, target);
        continue;
      }
      store = store.Without(k, f);
    }
    out.data.triples = std::move(store);
  }
  return out;
}

}  // namespace eecs
