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

#include "eecs/vocabulary.h"

#include <algorithm>
#include <set>

#include "eecs/errors.h"

namespace eecs {

IdIndex::IdIndex(const std::unordered_map<std::string, int64_t> &counts,
                 int64_t min_count)
    : min_count_(min_count) {
  std::vector<std::pair<std::string, int64_t>> kept;
  for (const auto &[id, count] : counts) {
    if (count >= min_count) kept.emplace_back(id, count);
  }
  std::sort(kept.begin(), kept.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  *this = IdIndex(std::move(kept));
  min_count_ = min_count;
}

IdIndex::IdIndex(std::vector<std::pair<std::string, int64_t>> ordered) {
  ids_.reserve(ordered.size());
  counts_.reserve(ordered.size());
  for (auto &[id, count] : ordered) {
    index_.emplace(id, static_cast<int>(ids_.size()));
    ids_.push_back(std::move(id));
    counts_.push_back(count);
  }
}

int IdIndex::Find(const std::string &id) const {
  auto it = index_.find(id);
  return it == index_.end() ? kAbsent : it->second;
}

std::pair<Vocabulary, EntityCatalog> BuildVocabAndCatalog(
    const std::vector<Document> &docs, int64_t min_count,
    int64_t min_doc_mentions) {
  std::unordered_map<std::string, int64_t> word_counts;
  std::unordered_map<std::string, int64_t> entity_docs;
  for (const Document &doc : docs) {
    for (const Sentence &s : doc.sentences) {
      for (const std::string &token : s) ++word_counts[token];
    }
    std::set<std::string> mentioned;
    for (const Mention &m : doc.mentions) mentioned.insert(m.entity);
    for (const std::string &e : mentioned) ++entity_docs[e];
    if (doc.article_of) entity_docs.try_emplace(*doc.article_of, 0);
  }
  Vocabulary vocab(word_counts, min_count);
  if (vocab.empty()) {
    throw ValidationError("empty vocabulary: no word occurs at least " +
                          std::to_string(min_count) + " times");
  }
  return {std::move(vocab), EntityCatalog(entity_docs, min_doc_mentions)};
}

}  // namespace eecs
