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

#ifndef EECS_TRIPLE_STORE_H_
#define EECS_TRIPLE_STORE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eecs/vocabulary.h"

namespace eecs {

struct Triple {
  int head = 0;
  int relation = 0;
  int tail = 0;

  auto operator<=>(const Triple &) const = default;
};

// Set of (head, relation, tail) triples over catalog entities with the
// grouping indexes rhs(e, k) and lhs(k, f). Relations are indexed in
// lexicographic order of their ids.
class TripleStore {
 public:
  TripleStore() = default;
  TripleStore(std::vector<std::string> relation_ids,
              std::vector<Triple> triples);

  int num_relations() const { return static_cast<int>(relations_.size()); }
  const std::string &relation_id(int k) const { return relations_[k]; }
  const std::vector<std::string> &relation_ids() const { return relations_; }
  int FindRelation(const std::string &id) const;

  // Sorted and free of duplicates.
  const std::vector<Triple> &triples() const { return triples_; }
  size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }
  bool Contains(const Triple &t) const;

  // Keyed by (head, relation); values are sorted tails.
  const std::map<std::pair<int, int>, std::vector<int>> &rhs() const {
    return rhs_;
  }
  // Keyed by (relation, tail); values are sorted heads.
  const std::map<std::pair<int, int>, std::vector<int>> &lhs() const {
    return lhs_;
  }
  const std::vector<int> &Rhs(int head, int relation) const;
  const std::vector<int> &Lhs(int relation, int tail) const;

  // Copy without every triple of the form (., relation, tail).
  TripleStore Without(int relation, int tail) const;

 private:
  std::vector<std::string> relations_;
  std::vector<Triple> triples_;
  std::map<std::pair<int, int>, std::vector<int>> rhs_;
  std::map<std::pair<int, int>, std::vector<int>> lhs_;
};

struct TripleLoadStats {
  long unknown_entities = 0;
  long excluded_relations = 0;
};

// True for relation ids that encode the type system rather than a relation
// between entities ("instance_of", "subclass_of", P31, P279, ...).
bool IsTypeRelation(const std::string &relation_id);

// Reads a "head<TAB>relation<TAB>tail" file. Triples with an entity missing
// from the catalog, or with a type-system relation, are dropped and counted.
TripleStore LoadTriples(const std::string &path, const EntityCatalog &catalog,
                        TripleLoadStats *stats = nullptr);

}  // namespace eecs

#endif  // EECS_TRIPLE_STORE_H_
