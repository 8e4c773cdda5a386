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

#ifndef EECS_TYPE_SYSTEM_H_
#define EECS_TYPE_SYSTEM_H_

#include <string>
#include <utility>
#include <vector>

#include "eecs/vocabulary.h"

namespace eecs {

// Semantic types with a subclass hierarchy and instance sets closed under it:
// an entity asserted of type t belongs to E_s for every s with t below or
// equal to s. Only types with a non-empty instance set are kept. Types are
// indexed in lexicographic order of their ids.
class TypeSystem {
 public:
  TypeSystem() = default;
  // `assertions` are (entity index, type id) pairs; `edges` are
  // (child type id, parent type id) pairs. Throws ValidationError on a cycle.
  TypeSystem(const std::vector<std::pair<int, std::string>> &assertions,
             const std::vector<std::pair<std::string, std::string>> &edges);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const std::string &id(int type) const { return ids_[type]; }
  const std::vector<std::string> &ids() const { return ids_; }
  // Index of a type id, or -1.
  int Find(const std::string &type_id) const;

  // Sorted entity indices of E_s.
  const std::vector<int> &Instances(int type) const { return instances_[type]; }
  bool Contains(int type, int entity) const;

  // Reflexive-transitive subclass relation.
  bool IsSubtypeOf(int sub, int super) const;
  // Direct (child, parent) edges among kept types, by index.
  const std::vector<std::pair<int, int>> &edges() const { return edges_; }

 private:
  std::vector<std::string> ids_;
  std::vector<std::vector<int>> instances_;
  // ancestors_[t] holds every s with t below or equal to s, sorted.
  std::vector<std::vector<int>> ancestors_;
  std::vector<std::pair<int, int>> edges_;
};

struct TypeLoadStats {
  long unknown_entities = 0;
};

// Reads "entity<TAB>type" and "child<TAB>parent" TSV files. Assertions about
// entities missing from the catalog are skipped and counted.
TypeSystem LoadTypeSystem(const std::string &instances_path,
                          const std::string &subclass_path,
                          const EntityCatalog &catalog,
                          TypeLoadStats *stats = nullptr);

// Among the types whose instance set contains every entity, one that is
// minimal under the subclass relation; ties go to the smaller instance set,
// then to the lexicographically smaller id. Throws NotFoundError if no type
// contains all entities.
int MostSpecificCommonType(const std::vector<int> &entities,
                           const TypeSystem &types);

}  // namespace eecs

#endif  // EECS_TYPE_SYSTEM_H_
