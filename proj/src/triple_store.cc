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

#include "eecs/triple_store.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "eecs/errors.h"
#include "eecs/tsv.h"
#include "spdlog/spdlog.h"

namespace eecs {

TripleStore::TripleStore(std::vector<std::string> relation_ids,
                         std::vector<Triple> triples)
    : relations_(std::move(relation_ids)), triples_(std::move(triples)) {
  std::sort(triples_.begin(), triples_.end());
  triples_.erase(std::unique(triples_.begin(), triples_.end()), triples_.end());
  for (const Triple &t : triples_) {
    if (t.relation < 0 || t.relation >= num_relations()) {
      throw ValidationError("triple refers to unknown relation index " +
                            std::to_string(t.relation));
    }
    rhs_[{t.head, t.relation}].push_back(t.tail);
    lhs_[{t.relation, t.tail}].push_back(t.head);
  }
  // Triples are sorted by (head, relation, tail), so rhs lists are sorted;
  // lhs lists need sorting.
  for (auto &[key, heads] : lhs_) std::sort(heads.begin(), heads.end());
}

int TripleStore::FindRelation(const std::string &id) const {
  auto it = std::lower_bound(relations_.begin(), relations_.end(), id);
  if (it == relations_.end() || *it != id) return -1;
  return static_cast<int>(it - relations_.begin());
}

bool TripleStore::Contains(const Triple &t) const {
  return std::binary_search(triples_.begin(), triples_.end(), t);
}

const std::vector<int> &TripleStore::Rhs(int head, int relation) const {
  static const std::vector<int> kEmpty;
  auto it = rhs_.find({head, relation});
  return it == rhs_.end() ? kEmpty : it->second;
}

const std::vector<int> &TripleStore::Lhs(int relation, int tail) const {
  static const std::vector<int> kEmpty;
  auto it = lhs_.find({relation, tail});
  return it == lhs_.end() ? kEmpty : it->second;
}

TripleStore TripleStore::Without(int relation, int tail) const {
  std::vector<Triple> kept;
  for (const Triple &t : triples_) {
    if (t.relation != relation || t.tail != tail) kept.push_back(t);
  }
  return TripleStore(relations_, std::move(kept));
}

bool IsTypeRelation(const std::string &relation_id) {
  std::string key;
  for (char c : relation_id) {
    if (c == '_' || c == ' ' || c == '-') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return key == "instanceof" || key == "subclassof" || key == "p31" ||
         key == "p279";
}

TripleStore LoadTriples(const std::string &path, const EntityCatalog &catalog,
                        TripleLoadStats *stats) {
  struct Raw {
    int head;
    std::string relation;
    int tail;
  };
  std::vector<Raw> raw;
  TripleLoadStats local;
  ReadTsv(path, 3, [&](const std::vector<std::string> &fields, long) {
    if (IsTypeRelation(fields[1])) {
      ++local.excluded_relations;
      return;
    }
    const int head = catalog.Find(fields[0]);
    const int tail = catalog.Find(fields[2]);
    if (head == IdIndex::kAbsent || tail == IdIndex::kAbsent) {
      ++local.unknown_entities;
      return;
    }
    raw.push_back(Raw{head, fields[1], tail});
  });
  if (local.unknown_entities > 0) {
    spdlog::warn("{}: dropped {} triples with entities outside the catalog",
                 path, local.unknown_entities);
  }
  if (local.excluded_relations > 0) {
    spdlog::warn("{}: dropped {} instance-of/subclass-of triples", path,
                 local.excluded_relations);
  }
  std::set<std::string> names;
  for (const Raw &r : raw) names.insert(r.relation);
  std::vector<std::string> relations(names.begin(), names.end());
  std::vector<Triple> triples;
  triples.reserve(raw.size());
  for (const Raw &r : raw) {
    const int k = static_cast<int>(
        std::lower_bound(relations.begin(), relations.end(), r.relation) -
        relations.begin());
    triples.push_back(Triple{r.head, k, r.tail});
  }
  if (stats != nullptr) *stats = local;
  return TripleStore(std::move(relations), std::move(triples));
}

}  // namespace eecs
