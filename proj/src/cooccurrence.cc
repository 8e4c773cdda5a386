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

#include "eecs/cooccurrence.h"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <unordered_map>

#include "eecs/errors.h"

namespace eecs {

namespace {

uint64_t Key(int32_t row, int32_t col) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(row)) << 32) |
         static_cast<uint32_t>(col);
}

CooccurrenceTable FromCounts(CooccurrenceKind kind,
                             const std::unordered_map<uint64_t, double> &counts) {
  std::vector<CooccurrenceEntry> entries;
  entries.reserve(counts.size());
  for (const auto &[key, weight] : counts) {
    entries.push_back(CooccurrenceEntry{static_cast<int32_t>(key >> 32),
                                        static_cast<int32_t>(key & 0xffffffffu),
                                        weight});
  }
  return CooccurrenceTable(kind, std::move(entries));
}

std::vector<int> Lookup(const Sentence &sentence, const Vocabulary &vocab) {
  std::vector<int> ids(sentence.size());
  for (size_t i = 0; i < sentence.size(); ++i) ids[i] = vocab.Find(sentence[i]);
  return ids;
}

}  // namespace

CooccurrenceTable::CooccurrenceTable(CooccurrenceKind kind,
                                     std::vector<CooccurrenceEntry> entries)
    : kind_(kind) {
  std::sort(entries.begin(), entries.end(),
            [](const CooccurrenceEntry &a, const CooccurrenceEntry &b) {
              return std::tie(a.row, a.col) < std::tie(b.row, b.col);
            });
  for (const CooccurrenceEntry &e : entries) {
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("co-occurrence weight must be positive and finite");
    }
    if (!entries_.empty() && entries_.back().row == e.row &&
        entries_.back().col == e.col) {
      entries_.back().weight += e.weight;
    } else {
      entries_.push_back(e);
    }
  }
}

double CooccurrenceTable::Get(int32_t row, int32_t col) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), std::make_pair(row, col),
      [](const CooccurrenceEntry &e, const std::pair<int32_t, int32_t> &k) {
        return std::tie(e.row, e.col) < std::tie(k.first, k.second);
      });
  if (it == entries_.end() || it->row != row || it->col != col) return 0.0;
  return it->weight;
}

double CooccurrenceTable::TotalWeight() const {
  double total = 0.0;
  for (const CooccurrenceEntry &e : entries_) total += e.weight;
  return total;
}

CooccurrenceTable CountWordWord(const std::vector<Document> &docs,
                                const Vocabulary &vocab, int window) {
  if (window < 1) throw ValidationError("window must be at least 1");
  std::unordered_map<uint64_t, double> counts;
  for (const Document &doc : docs) {
    for (const Sentence &sentence : doc.sentences) {
      const std::vector<int> ids = Lookup(sentence, vocab);
      const int length = static_cast<int>(ids.size());
      for (int p = 0; p < length; ++p) {
        if (ids[p] == IdIndex::kAbsent) continue;
        for (int q = p + 1; q < length && q - p <= window; ++q) {
          if (ids[q] == IdIndex::kAbsent) continue;
          const double w = 1.0 / (q - p);
          counts[Key(ids[p], ids[q])] += w;
          counts[Key(ids[q], ids[p])] += w;
        }
      }
    }
  }
  return FromCounts(CooccurrenceKind::kWordWord, counts);
}

CooccurrenceTable CountEntityWord(const std::vector<Document> &docs,
                                  const Vocabulary &vocab,
                                  const EntityCatalog &catalog, int window) {
  if (window < 1) throw ValidationError("window must be at least 1");
  std::unordered_map<uint64_t, double> counts;
  for (const Document &doc : docs) {
    std::vector<std::vector<int>> ids;
    ids.reserve(doc.sentences.size());
    for (const Sentence &s : doc.sentences) ids.push_back(Lookup(s, vocab));

    for (const Mention &m : doc.mentions) {
      const int entity = catalog.Find(m.entity);
      if (entity == IdIndex::kAbsent) continue;
      const std::vector<int> &tokens = ids[m.sentence];
      const int length = static_cast<int>(tokens.size());
      const int lo = std::max(0, m.begin - window);
      const int hi = std::min(length, m.end + window);
      for (int p = lo; p < hi; ++p) {
        if (p >= m.begin && p < m.end) continue;
        if (tokens[p] == IdIndex::kAbsent) continue;
        counts[Key(entity, tokens[p])] += 1.0;
      }
    }

    if (doc.article_of) {
      const int entity = catalog.Find(*doc.article_of);
      if (entity == IdIndex::kAbsent) continue;
      for (const std::vector<int> &tokens : ids) {
        for (int word : tokens) {
          if (word != IdIndex::kAbsent) counts[Key(entity, word)] += 1.0;
        }
      }
    }
  }
  return FromCounts(CooccurrenceKind::kEntityWord, counts);
}

}  // namespace eecs
