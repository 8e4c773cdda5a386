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

#ifndef EECS_COOCCURRENCE_H_
#define EECS_COOCCURRENCE_H_

#include <cstdint>
#include <vector>

#include "eecs/corpus.h"
#include "eecs/vocabulary.h"

namespace eecs {

enum class CooccurrenceKind { kWordWord, kEntityWord };

struct CooccurrenceEntry {
  int32_t row = 0;
  int32_t col = 0;
  double weight = 0.0;
};

// Sparse table of strictly positive weights, sorted by (row, col). Rows index
// words for kWordWord tables and entities for kEntityWord tables; columns
// always index words.
class CooccurrenceTable {
 public:
  explicit CooccurrenceTable(CooccurrenceKind kind = CooccurrenceKind::kWordWord)
      : kind_(kind) {}
  // Sorts and merges duplicate (row, col) entries by summation. Entries with
  // non-positive or non-finite weight are rejected.
  CooccurrenceTable(CooccurrenceKind kind,
                    std::vector<CooccurrenceEntry> entries);

  CooccurrenceKind kind() const { return kind_; }
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const CooccurrenceEntry &operator[](size_t i) const { return entries_[i]; }
  const std::vector<CooccurrenceEntry> &entries() const { return entries_; }

  // Weight of (row, col), or 0 if absent.
  double Get(int32_t row, int32_t col) const;
  double TotalWeight() const;

 private:
  CooccurrenceKind kind_;
  std::vector<CooccurrenceEntry> entries_;
};

// Word-word co-occurrence within `window` tokens of the same sentence; a pair
// at distance d contributes 1/d to both (i, j) and (j, i). Distances are
// measured in the original token positions, including out-of-vocabulary
// tokens.
CooccurrenceTable CountWordWord(const std::vector<Document> &docs,
                                const Vocabulary &vocab, int window);

// Entity-word co-occurrence. Every vocabulary token within `window` tokens of
// a mention, in the same sentence and outside the mention's own span, adds 1
// to (entity, word). Every vocabulary token of an entity's own article adds 1
// as well.
CooccurrenceTable CountEntityWord(const std::vector<Document> &docs,
                                  const Vocabulary &vocab,
                                  const EntityCatalog &catalog, int window);

}  // namespace eecs

#endif  // EECS_COOCCURRENCE_H_
