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

#include "eecs/evaluation.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "eecs/errors.h"
#include "eecs/metrics.h"
#include "eecs/subspace.h"
#include "eecs/tsv.h"

namespace eecs {

using nlohmann::json;

Split MakeSplit(std::vector<std::string> ids, double train_fraction,
                double valid_fraction, uint64_t seed) {
  std::sort(ids.begin(), ids.end());
  std::mt19937_64 rng(seed);
  std::shuffle(ids.begin(), ids.end(), rng);
  const size_t n = ids.size();
  const size_t n_train = static_cast<size_t>(std::llround(train_fraction * n));
  const size_t n_valid =
      std::min(n - n_train, static_cast<size_t>(std::llround(valid_fraction * n)));
  Split s;
  s.train.assign(ids.begin(), ids.begin() + n_train);
  s.valid.assign(ids.begin() + n_train, ids.begin() + n_train + n_valid);
  s.test.assign(ids.begin() + n_train + n_valid, ids.end());
  return s;
}

namespace {

std::vector<json> ReadJsonObjects(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open problem file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<json> out;
  try {
    json whole = json::parse(text);
    if (whole.is_array()) {
      for (json &j : whole) out.push_back(std::move(j));
    } else {
      out.push_back(std::move(whole));
    }
    return out;
  } catch (const json::parse_error &) {
    // Fall through to one object per line.
  }
  std::istringstream lines(text);
  std::string line;
  long number = 0;
  while (std::getline(lines, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(json::parse(line));
    } catch (const json::parse_error &e) {
      throw ParseError(path, number, e.what());
    }
  }
  return out;
}

std::vector<std::string> Strings(const json &j, const char *key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const json &v : j.at(key)) out.push_back(v.get<std::string>());
  return out;
}

Split ReadSplit(const json &j) {
  Split s;
  s.train = Strings(j, "train");
  s.valid = Strings(j, "valid");
  s.test = Strings(j, "test");
  return s;
}

void CheckDisjoint(const Split &s, const std::string &what) {
  std::set<std::string> seen;
  for (const auto *part : {&s.train, &s.valid, &s.test}) {
    for (const std::string &id : *part) {
      if (!seen.insert(id).second) {
        throw ValidationError(what + ": " + id + " appears in two split parts");
      }
    }
  }
}

template <typename F>
auto WithContext(const std::string &path, size_t index, F &&f) {
  try {
    return f();
  } catch (const json::exception &e) {
    throw FormatError(path + ": problem " + std::to_string(index) + ": " + e.what());
  }
}

}  // namespace

std::vector<RankingProblem> LoadRankingProblems(const std::string &path,
                                                uint64_t seed) {
  std::vector<RankingProblem> out;
  const std::vector<json> objects = ReadJsonObjects(path);
  for (size_t i = 0; i < objects.size(); ++i) {
    const json &j = objects[i];
    RankingProblem p = WithContext(path, i, [&] {
      RankingProblem p;
      p.type_id = j.value("type", "");
      p.attribute = j.at("attribute").get<std::string>();
      for (const auto &[id, value] : j.at("values").items()) {
        p.values[id] = value.get<double>();
      }
      if (j.contains("split")) p.split = ReadSplit(j.at("split"));
      return p;
    });
    const std::string name = p.type_id + "/" + p.attribute;
    if (p.values.size() < kMinRankingEntities) {
      throw ValidationError("ranking problem " + name + " has " +
                            std::to_string(p.values.size()) + " entities; at least " +
                            std::to_string(kMinRankingEntities) + " are required");
    }
    if (p.split.train.empty() && p.split.valid.empty() && p.split.test.empty()) {
      std::vector<std::string> ids;
      for (const auto &[id, v] : p.values) ids.push_back(id);
      p.split = MakeSplit(ids, 0.6, 0.2, seed);
    }
    CheckDisjoint(p.split, "ranking problem " + name);
    const size_t covered = p.split.train.size() + p.split.valid.size() + p.split.test.size();
    if (covered != p.values.size()) {
      throw ValidationError("ranking problem " + name +
                            ": split does not cover every entity exactly once");
    }
    for (const auto *part : {&p.split.train, &p.split.valid, &p.split.test}) {
      for (const std::string &id : *part) {
        if (!p.values.count(id)) {
          throw ValidationError("ranking problem " + name + ": split entity " + id +
                                " has no value");
        }
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<InductionProblem> LoadInductionProblems(const std::string &path,
                                                    uint64_t seed) {
  std::vector<InductionProblem> out;
  const std::vector<json> objects = ReadJsonObjects(path);
  for (size_t i = 0; i < objects.size(); ++i) {
    const json &j = objects[i];
    InductionProblem p = WithContext(path, i, [&] {
      InductionProblem p;
      p.relation = j.at("relation").get<std::string>();
      p.target = j.at("target").get<std::string>();
      if (j.contains("split")) {
        p.split = ReadSplit(j.at("split"));
      } else {
        p.split = MakeSplit(Strings(j, "positives"), 0.6, 0.2, seed);
      }
      return p;
    });
    CheckDisjoint(p.split, "induction problem " + p.relation + "/" + p.target);
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<AnalogyProblem> LoadAnalogyProblems(const std::string &path,
                                                uint64_t seed) {
  std::vector<AnalogyProblem> out;
  const std::vector<json> objects = ReadJsonObjects(path);
  for (size_t i = 0; i < objects.size(); ++i) {
    const json &j = objects[i];
    AnalogyProblem p = WithContext(path, i, [&] {
      AnalogyProblem p;
      for (const json &q : j.at("quads")) {
        if (q.size() != 4) throw FormatError("analogy quads need 4 entities");
        p.quads.push_back({q[0].get<std::string>(), q[1].get<std::string>(),
                           q[2].get<std::string>(), q[3].get<std::string>()});
      }
      if (j.contains("split")) {
        const json &s = j.at("split");
        if (s.contains("tune")) p.tune = s.at("tune").get<std::vector<size_t>>();
        if (s.contains("test")) p.test = s.at("test").get<std::vector<size_t>>();
      }
      return p;
    });
    if (p.tune.empty() && p.test.empty()) {
      std::vector<size_t> idx(p.quads.size());
      for (size_t q = 0; q < idx.size(); ++q) idx[q] = q;
      std::mt19937_64 rng(seed);
      std::shuffle(idx.begin(), idx.end(), rng);
      const size_t n_tune = static_cast<size_t>(std::llround(0.25 * idx.size()));
      p.tune.assign(idx.begin(), idx.begin() + n_tune);
      p.test.assign(idx.begin() + n_tune, idx.end());
    }
    std::set<size_t> seen;
    for (size_t q : p.tune) seen.insert(q);
    for (size_t q : p.test) {
      if (!seen.insert(q).second) {
        throw ValidationError("analogy problem: quad in both tune and test");
      }
    }
    for (size_t q : seen) {
      if (q >= p.quads.size()) throw ValidationError("analogy split index out of range");
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<LabeledTriple> LoadLabeledTriples(const std::string &path) {
  std::vector<LabeledTriple> out;
  ReadTsv(path, 3, [&](const std::vector<std::string> &f, long line) {
    LabeledTriple t{f[0], f[1], f[2], true};
    if (f.size() >= 4) {
      const std::string &label = f[3];
      if (label == "1" || label == "+1" || label == "true") {
        t.positive = true;
      } else if (label == "0" || label == "-1" || label == "false") {
        t.positive = false;
      } else {
        throw ParseError(path, line, "bad label '" + label + "'");
      }
    }
    out.push_back(std::move(t));
  });
  return out;
}

std::string TaskResult::ToJson() const {
  json j;
  j["task"] = task;
  j["aggregate"] = aggregate;
  j["problems"] = json::array();
  for (const ProblemResult &p : problems) {
    json pj;
    pj["name"] = p.name;
    pj["metrics"] = p.metrics;
    pj["skipped"] = p.skipped;
    if (!p.note.empty()) pj["note"] = p.note;
    j["problems"].push_back(std::move(pj));
  }
  return j.dump(2);
}

namespace {

class EntityLookup {
 public:
  explicit EntityLookup(const EmbeddingModel &model) {
    for (int e = 0; e < model.num_entities(); ++e) index_[model.entity_ids[e]] = e;
  }
  int Find(const std::string &id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  std::unordered_map<std::string, int> index_;
};

int FindRelation(const RelationParams &rels, const std::string &id) {
  auto it = std::find(rels.relation_ids.begin(), rels.relation_ids.end(), id);
  return it == rels.relation_ids.end()
             ? -1
             : static_cast<int>(it - rels.relation_ids.begin());
}

void CountScored(TaskResult *result) {
  int scored = 0;
  for (const ProblemResult &p : result->problems) scored += !p.skipped;
  result->aggregate["num_problems"] = scored;
}

}  // namespace

TaskResult EvalRanking(const std::vector<RankingProblem> &problems,
                       const EmbeddingModel &model, const RankerOptions &options) {
  TaskResult result;
  result.task = "ranking";
  const EntityLookup lookup(model);
  std::vector<double> rhos;
  for (const RankingProblem &p : problems) {
    ProblemResult pr;
    pr.name = p.type_id + "/" + p.attribute;
    auto gather = [&](const std::vector<std::string> &ids, std::vector<Vector> *pts,
                      std::vector<double> *vals) {
      for (const std::string &id : ids) {
        const int e = lookup.Find(id);
        if (e < 0) continue;
        pts->push_back(model.entities.col(e));
        vals->push_back(p.values.at(id));
      }
    };
    std::vector<Vector> tr, va, te;
    std::vector<double> trv, vav, tev;
    gather(p.split.train, &tr, &trv);
    gather(p.split.valid, &va, &vav);
    gather(p.split.test, &te, &tev);
    try {
      if (te.size() < 2) throw ValidationError("fewer than 2 embedded test entities");
      const RankingDirection dir = FitRankingDirection(tr, trv, va, vav, options);
      std::vector<double> scores;
      for (const Vector &x : te) scores.push_back(Score(dir, x));
      const double rho = Spearman(scores, tev);
      pr.metrics["spearman_rho"] = rho;
      pr.metrics["c"] = dir.c;
      rhos.push_back(rho);
    } catch (const ValidationError &e) {
      spdlog::warn("ranking problem {} skipped: {}", pr.name, e.what());
      pr.skipped = true;
      pr.note = e.what();
    }
    result.problems.push_back(std::move(pr));
  }
  if (!rhos.empty()) result.aggregate["fisher_rho"] = FisherMean(rhos);
  CountScored(&result);
  return result;
}

TaskResult EvalInduction(const std::vector<InductionProblem> &problems,
                         const EmbeddingModel &model, const TypeSystem &types,
                         bool exclude_valid) {
  TaskResult result;
  result.task = "induction";
  const EntityLookup lookup(model);
  for (const InductionProblem &p : problems) {
    ProblemResult pr;
    pr.name = p.relation + "/" + p.target;
    auto resolve = [&](const std::vector<std::string> &ids) {
      std::vector<int> out;
      for (const std::string &id : ids) {
        const int e = lookup.Find(id);
        if (e >= 0) out.push_back(e);
      }
      return out;
    };
    const std::vector<int> train = resolve(p.split.train);
    const std::vector<int> valid = resolve(p.split.valid);
    const std::vector<int> test = resolve(p.split.test);
    if (train.empty()) {
      throw ValidationError("induction problem " + pr.name +
                            " has no embedded training positives");
    }
    if (test.empty()) {
      throw ValidationError("induction problem " + pr.name +
                            " has no embedded test positives");
    }
    std::vector<int> all = train;
    all.insert(all.end(), valid.begin(), valid.end());
    all.insert(all.end(), test.begin(), test.end());
    std::vector<int> pool;
    try {
      pool = types.Instances(MostSpecificCommonType(all, types));
    } catch (const NotFoundError &) {
      spdlog::warn("induction problem {}: positives share no type; using all entities",
                   pr.name);
      for (int e = 0; e < model.num_entities(); ++e) pool.push_back(e);
    }
    const std::set<int> excluded(
        all.begin(), all.begin() + train.size() + (exclude_valid ? valid.size() : 0));
    const std::set<int> relevant(test.begin(), test.end());
    std::vector<Vector> train_points;
    for (int e : train) train_points.push_back(model.entities.col(e));
    const Vector center = Centroid(train_points);
    std::vector<std::pair<double, int>> ranked;
    for (int e : pool) {
      if (excluded.count(e)) continue;
      ranked.push_back({(model.entities.col(e) - center).norm(), e});
    }
    std::sort(ranked.begin(), ranked.end());
    std::vector<bool> flags;
    for (const auto &[d, e] : ranked) flags.push_back(relevant.count(e) > 0);
    if (flags.size() < 5) {
      spdlog::warn("induction problem {}: only {} candidates; P@5 uses all of them",
                   pr.name, flags.size());
    }
    pr.metrics["ap"] = AveragePrecision(flags, static_cast<int>(relevant.size()));
    pr.metrics["p_at_5"] = PrecisionAtK(flags, 5);
    pr.metrics["rr"] = ReciprocalRank(flags);
    pr.metrics["num_candidates"] = static_cast<double>(flags.size());
    result.problems.push_back(std::move(pr));
  }
  double map = 0.0, p5 = 0.0, mrr = 0.0;
  for (const ProblemResult &pr : result.problems) {
    map += pr.metrics.at("ap");
    p5 += pr.metrics.at("p_at_5");
    mrr += pr.metrics.at("rr");
  }
  if (!result.problems.empty()) {
    const double n = static_cast<double>(result.problems.size());
    result.aggregate["map"] = map / n;
    result.aggregate["p_at_5"] = p5 / n;
    result.aggregate["mrr"] = mrr / n;
  }
  CountScored(&result);
  return result;
}

TaskResult EvalAnalogy(const std::vector<AnalogyProblem> &problems,
                       const EmbeddingModel &model, const TypeSystem &types) {
  TaskResult result;
  result.task = "analogy";
  const EntityLookup lookup(model);
  int correct_total = 0, scored_total = 0;
  for (size_t pi = 0; pi < problems.size(); ++pi) {
    const AnalogyProblem &p = problems[pi];
    ProblemResult pr;
    pr.name = "analogy_" + std::to_string(pi);
    std::vector<int> answers;
    for (const auto &q : p.quads) {
      const int d = lookup.Find(q[3]);
      if (d >= 0) answers.push_back(d);
    }
    std::vector<int> pool;
    if (!answers.empty()) {
      try {
        pool = types.Instances(MostSpecificCommonType(answers, types));
      } catch (const NotFoundError &) {
      }
    }
    if (pool.empty()) {
      for (int e = 0; e < model.num_entities(); ++e) pool.push_back(e);
    }
    int correct = 0, scored = 0, missing = 0;
    for (size_t qi : p.test) {
      const auto &q = p.quads[qi];
      const int a = lookup.Find(q[0]), b = lookup.Find(q[1]), c = lookup.Find(q[2]),
                d = lookup.Find(q[3]);
      if (a < 0 || b < 0 || c < 0 || d < 0) {
        ++missing;
        continue;
      }
      const Vector target =
          model.entities.col(b) - model.entities.col(a) + model.entities.col(c);
      const double tn = target.norm();
      int best = -1;
      double best_cos = -2.0;
      for (int e : pool) {
        if (e == a || e == b || e == c) continue;
        const double en = model.entities.col(e).norm();
        const double cos =
            (tn > 0.0 && en > 0.0) ? target.dot(model.entities.col(e)) / (tn * en) : 0.0;
        if (cos > best_cos || (cos == best_cos && e < best)) {
          best_cos = cos;
          best = e;
        }
      }
      ++scored;
      correct += best == d;
    }
    if (missing > 0) {
      spdlog::warn("{}: skipped {} quads with unknown entities", pr.name, missing);
    }
    pr.metrics["skipped_quads"] = missing;
    if (scored == 0) {
      pr.skipped = true;
      pr.note = "no scorable test quads";
    } else {
      pr.metrics["accuracy"] = static_cast<double>(correct) / scored;
      if (pool.size() <= 4) pr.note = "degenerate candidate pool";
    }
    correct_total += correct;
    scored_total += scored;
    result.problems.push_back(std::move(pr));
  }
  if (scored_total > 0) {
    result.aggregate["accuracy"] = static_cast<double>(correct_total) / scored_total;
  }
  CountScored(&result);
  return result;
}

TaskResult EvalLinkPrediction(const std::vector<LabeledTriple> &test,
                              const EmbeddingModel &model,
                              const RelationParams &rels) {
  TaskResult result;
  result.task = "link";
  const EntityLookup lookup(model);
  std::vector<int> ranks;
  long skipped = 0;
  const int n = model.num_entities();
  for (const LabeledTriple &t : test) {
    if (!t.positive) continue;
    const int e = lookup.Find(t.head), f = lookup.Find(t.tail);
    const int k = FindRelation(rels, t.relation);
    if (e < 0 || f < 0 || k < 0) {
      ++skipped;
      continue;
    }
    const Vector moved = model.entities.col(e) + rels.relations.col(k);
    const Vector back = model.entities.col(f) - rels.relations.col(k);
    // Tail query: candidates f' scored by |p_f' - (p_e + r_k)|.
    const double tail_d = (model.entities.col(f) - moved).norm();
    const double head_d = (back - model.entities.col(e)).norm();
    int tail_rank = 1, head_rank = 1;
    for (int x = 0; x < n; ++x) {
      const double dt = (model.entities.col(x) - moved).norm();
      if (dt < tail_d || (dt == tail_d && x < f)) ++tail_rank;
      const double dh = (back - model.entities.col(x)).norm();
      if (dh < head_d || (dh == head_d && x < e)) ++head_rank;
    }
    ranks.push_back(tail_rank);
    ranks.push_back(head_rank);
  }
  if (skipped > 0) spdlog::warn("link prediction skipped {} test triples", skipped);
  ProblemResult pr;
  pr.name = "link";
  pr.metrics["skipped_triples"] = static_cast<double>(skipped);
  if (ranks.empty()) {
    pr.skipped = true;
    pr.note = "no scorable test triples";
  } else {
    pr.metrics["mean_rank"] = MeanRank(ranks);
    pr.metrics["hits_at_10"] = HitsAtK(ranks, 10);
    result.aggregate["mean_rank"] = pr.metrics["mean_rank"];
    result.aggregate["hits_at_10"] = pr.metrics["hits_at_10"];
  }
  result.problems.push_back(std::move(pr));
  CountScored(&result);
  return result;
}

double BestThreshold(const std::vector<double> &scores,
                     const std::vector<bool> &labels) {
  if (scores.empty() || scores.size() != labels.size()) {
    throw ValidationError("threshold selection needs labeled scores");
  }
  std::vector<double> distinct = scores;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<double> candidates;
  candidates.push_back(distinct.front() - 1.0);
  for (size_t i = 0; i + 1 < distinct.size(); ++i) {
    candidates.push_back((distinct[i] + distinct[i + 1]) / 2.0);
  }
  candidates.push_back(distinct.back() + 1.0);
  double best = candidates.front();
  size_t best_correct = 0;
  bool first = true;
  for (double delta : candidates) {
    size_t correct = 0;
    for (size_t i = 0; i < scores.size(); ++i) correct += (scores[i] > delta) == labels[i];
    if (first || correct > best_correct) {
      best = delta;
      best_correct = correct;
      first = false;
    }
  }
  return best;
}

TaskResult EvalTripleClassification(const std::vector<LabeledTriple> &valid,
                                    const std::vector<LabeledTriple> &test,
                                    const EmbeddingModel &model,
                                    const RelationParams &rels) {
  TaskResult result;
  result.task = "classification";
  const EntityLookup lookup(model);
  long skipped = 0;
  struct Scored {
    int relation;
    double score;
    bool label;
  };
  auto score_all = [&](const std::vector<LabeledTriple> &triples) {
    std::vector<Scored> out;
    for (const LabeledTriple &t : triples) {
      const int e = lookup.Find(t.head), f = lookup.Find(t.tail);
      const int k = FindRelation(rels, t.relation);
      if (e < 0 || f < 0 || k < 0) {
        ++skipped;
        continue;
      }
      const double d =
          (model.entities.col(f) - model.entities.col(e) - rels.relations.col(k)).norm();
      out.push_back({k, -d, t.positive});
    }
    return out;
  };
  const std::vector<Scored> val = score_all(valid);
  const std::vector<Scored> tst = score_all(test);
  if (skipped > 0) spdlog::warn("triple classification skipped {} triples", skipped);
  if (val.empty() || tst.empty()) {
    throw ValidationError("triple classification needs scorable validation and test triples");
  }
  std::vector<double> all_scores;
  std::vector<bool> all_labels;
  std::map<int, std::pair<std::vector<double>, std::vector<bool>>> by_relation;
  for (const Scored &s : val) {
    all_scores.push_back(s.score);
    all_labels.push_back(s.label);
    by_relation[s.relation].first.push_back(s.score);
    by_relation[s.relation].second.push_back(s.label);
  }
  const double global = BestThreshold(all_scores, all_labels);
  std::map<int, double> thresholds;
  for (const auto &[k, data] : by_relation) {
    thresholds[k] = BestThreshold(data.first, data.second);
  }
  std::vector<bool> predicted, truth;
  std::set<int> fallback;
  for (const Scored &s : tst) {
    auto it = thresholds.find(s.relation);
    double delta = global;
    if (it != thresholds.end()) {
      delta = it->second;
    } else {
      fallback.insert(s.relation);
    }
    predicted.push_back(s.score > delta);
    truth.push_back(s.label);
  }
  for (int k : fallback) {
    spdlog::warn("relation {} absent from validation; using the global threshold",
                 rels.relation_ids[k]);
  }
  ProblemResult pr;
  pr.name = "classification";
  pr.metrics["accuracy"] = Accuracy(predicted, truth);
  pr.metrics["global_threshold"] = global;
  pr.metrics["skipped_triples"] = static_cast<double>(skipped);
  result.aggregate["accuracy"] = pr.metrics["accuracy"];
  result.problems.push_back(std::move(pr));
  CountScored(&result);
  return result;
}

std::vector<LabeledTriple> CorruptTriples(const std::vector<LabeledTriple> &positives,
                                          const TripleStore &known,
                                          const std::vector<std::string> &entity_ids,
                                          uint64_t seed) {
  if (entity_ids.size() < 2) throw ValidationError("corruption needs two entities");
  std::unordered_map<std::string, int> index;
  for (size_t e = 0; e < entity_ids.size(); ++e) index[entity_ids[e]] = static_cast<int>(e);
  // Average tails per head and heads per tail for every relation.
  std::vector<double> tph(known.num_relations(), 0.0), hpt(known.num_relations(), 0.0);
  std::vector<int> heads(known.num_relations(), 0), tails(known.num_relations(), 0);
  for (const auto &[key, v] : known.rhs()) {
    tph[key.second] += static_cast<double>(v.size());
    ++heads[key.second];
  }
  for (const auto &[key, v] : known.lhs()) {
    hpt[key.first] += static_cast<double>(v.size());
    ++tails[key.first];
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<size_t> pick(0, entity_ids.size() - 1);
  std::vector<LabeledTriple> out;
  for (const LabeledTriple &t : positives) {
    const int k = known.FindRelation(t.relation);
    double p_head = 0.5;
    if (k >= 0 && heads[k] > 0 && tails[k] > 0) {
      const double a = tph[k] / heads[k], b = hpt[k] / tails[k];
      p_head = a / (a + b);
    }
    const bool replace_head = coin(rng) < p_head;
    LabeledTriple neg = t;
    neg.positive = false;
    for (int attempt = 0; attempt < 100; ++attempt) {
      const std::string &other = entity_ids[pick(rng)];
      (replace_head ? neg.head : neg.tail) = other;
      if ((replace_head ? other == t.head : other == t.tail)) continue;
      const auto h = index.find(neg.head), f = index.find(neg.tail);
      if (k >= 0 && h != index.end() && f != index.end() &&
          known.Contains(Triple{h->second, k, f->second})) {
        continue;
      }
      break;
    }
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace eecs
