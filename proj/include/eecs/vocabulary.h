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

#ifndef EECS_VOCABULARY_H_
#define EECS_VOCABULARY_H_

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "eecs/corpus.h"

namespace eecs {

// Dense bijection between string ids and indices 0..size-1, with a count per
// id. Indices are ordered by descending count, ties by ascending id.
class IdIndex {
 public:
  static constexpr int kAbsent = -1;

  IdIndex() = default;
  // Keeps every id whose count is at least `min_count`.
  IdIndex(const std::unordered_map<std::string, int64_t> &counts,
          int64_t min_count);
  // Ids in index order with their counts, taken as-is.
  explicit IdIndex(std::vector<std::pair<std::string, int64_t>> ordered);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  int Find(const std::string &id) const;
  bool Contains(const std::string &id) const { return Find(id) != kAbsent; }
  const std::string &id(int index) const { return ids_[index]; }
  int64_t count(int index) const { return counts_[index]; }
  const std::vector<std::string> &ids() const { return ids_; }
  int64_t min_count() const { return min_count_; }

 private:
  std::vector<std::string> ids_;
  std::vector<int64_t> counts_;
  std::unordered_map<std::string, int> index_;
  int64_t min_count_ = 0;
};

// Words with corpus frequency at least min_count.
class Vocabulary : public IdIndex {
 public:
  using IdIndex::IdIndex;
  int64_t frequency(int index) const { return count(index); }
};

// Entities mentioned in at least min_doc_mentions distinct documents.
class EntityCatalog : public IdIndex {
 public:
  using IdIndex::IdIndex;
  int64_t doc_mentions(int index) const { return count(index); }
};

// Builds the word vocabulary and entity catalog from a corpus. Entities
// named only by "article_of" are part of the universe with zero mention
// documents. Throws ValidationError if no word survives the threshold.
std::pair<Vocabulary, EntityCatalog> BuildVocabAndCatalog(
    const std::vector<Document> &docs, int64_t min_count,
    int64_t min_doc_mentions);

}  // namespace eecs

#endif  // EECS_VOCABULARY_H_
