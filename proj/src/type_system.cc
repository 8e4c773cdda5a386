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

#include "eecs/type_system.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "eecs/errors.h"
#include "eecs/tsv.h"

namespace eecs {

namespace {

// Depth-first cycle search over parent edges. Returns one cycle as a list of
// nodes (first node repeated at the end) or an empty list.
std::vector<int> FindCycle(const std::vector<std::vector<int>> &parents) {
  const int n = static_cast<int>(parents.size());
  std::vector<int> color(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<int> stack;
  std::vector<int> cycle;
  std::function<bool(int)> visit = [&](int v) {
    color[v] = 1;
    stack.push_back(v);
    for (int p : parents[v]) {
      if (color[p] == 1) {
        auto it = std::find(stack.begin(), stack.end(), p);
        cycle.assign(it, stack.end());
        cycle.push_back(p);
        return true;
      }
      if (color[p] == 0 && visit(p)) return true;
    }
    stack.pop_back();
    color[v] = 2;
    return false;
  };
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0 && visit(v)) return cycle;
  }
  return {};
}

}  // namespace

TypeSystem::TypeSystem(
    const std::vector<std::pair<int, std::string>> &assertions,
    const std::vector<std::pair<std::string, std::string>> &edges) {
  std::set<std::string> all_ids;
  for (const auto &[entity, type] : assertions) all_ids.insert(type);
  for (const auto &[child, parent] : edges) {
    all_ids.insert(child);
    all_ids.insert(parent);
  }
  const std::vector<std::string> names(all_ids.begin(), all_ids.end());
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;

  const int n = static_cast<int>(names.size());
  std::vector<std::vector<int>> parents(n);
  for (const auto &[child, parent] : edges) {
    parents[index[child]].push_back(index[parent]);
  }
  for (auto &p : parents) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  if (std::vector<int> cycle = FindCycle(parents); !cycle.empty()) {
    std::string path;
    for (size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) path += " -> ";
      path += names[cycle[i]];
    }
    throw ValidationError("subclass cycle: " + path);
  }

  std::vector<std::vector<int>> ancestors(n);
  std::vector<bool> done(n, false);
  std::function<void(int)> close = [&](int v) {
    if (done[v]) return;
    std::set<int> acc = {v};
    for (int p : parents[v]) {
      close(p);
      acc.insert(ancestors[p].begin(), ancestors[p].end());
    }
    ancestors[v].assign(acc.begin(), acc.end());
    done[v] = true;
  };
  for (int v = 0; v < n; ++v) close(v);

  std::vector<std::set<int>> members(n);
  for (const auto &[entity, type] : assertions) {
    for (int s : ancestors[index[type]]) members[s].insert(entity);
  }

  // Keep non-empty types; names are already sorted so indices stay ordered.
  std::vector<int> remap(n, -1);
  for (int v = 0; v < n; ++v) {
    if (members[v].empty()) continue;
    remap[v] = static_cast<int>(ids_.size());
    ids_.push_back(names[v]);
    instances_.emplace_back(members[v].begin(), members[v].end());
  }
  ancestors_.resize(ids_.size());
  for (int v = 0; v < n; ++v) {
    if (remap[v] < 0) continue;
    for (int a : ancestors[v]) {
      if (remap[a] >= 0) ancestors_[remap[v]].push_back(remap[a]);
    }
    for (int p : parents[v]) {
      if (remap[p] >= 0) edges_.emplace_back(remap[v], remap[p]);
    }
  }
}

int TypeSystem::Find(const std::string &type_id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), type_id);
  if (it == ids_.end() || *it != type_id) return -1;
  return static_cast<int>(it - ids_.begin());
}

bool TypeSystem::Contains(int type, int entity) const {
  return std::binary_search(instances_[type].begin(), instances_[type].end(),
                            entity);
}

bool TypeSystem::IsSubtypeOf(int sub, int super) const {
  return std::binary_search(ancestors_[sub].begin(), ancestors_[sub].end(),
                            super);
}

TypeSystem LoadTypeSystem(const std::string &instances_path,
                          const std::string &subclass_path,
                          const EntityCatalog &catalog, TypeLoadStats *stats) {
  std::vector<std::pair<int, std::string>> assertions;
  long unknown = 0;
  ReadTsv(instances_path, 2,
          [&](const std::vector<std::string> &fields, long) {
            const int entity = catalog.Find(fields[0]);
            if (entity == IdIndex::kAbsent) {
              ++unknown;
              return;
            }
            assertions.emplace_back(entity, fields[1]);
          });
  std::vector<std::pair<std::string, std::string>> edges;
  if (!subclass_path.empty()) {
    ReadTsv(subclass_path, 2,
            [&](const std::vector<std::string> &fields, long) {
              edges.emplace_back(fields[0], fields[1]);
            });
  }
  if (stats != nullptr) stats->unknown_entities = unknown;
  return TypeSystem(assertions, edges);
}

int MostSpecificCommonType(const std::vector<int> &entities,
                           const TypeSystem &types) {
  if (entities.empty()) {
    throw ValidationError("most specific common type of an empty set");
  }
  std::vector<int> containing;
  for (int s = 0; s < types.size(); ++s) {
    bool all = true;
    for (int e : entities) {
      if (!types.Contains(s, e)) {
        all = false;
        break;
      }
    }
    if (all) containing.push_back(s);
  }
  if (containing.empty()) {
    throw NotFoundError("no semantic type contains all " +
                        std::to_string(entities.size()) + " entities");
  }
  int best = -1;
  for (int s : containing) {
    bool minimal = true;
    for (int t : containing) {
      if (t != s && types.IsSubtypeOf(t, s)) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    if (best < 0 || types.Instances(s).size() < types.Instances(best).size()) {
      best = s;  // ids are sorted, so equal sizes keep the smaller id
    }
  }
  return best;
}

}  // namespace eecs
