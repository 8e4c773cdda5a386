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

#include "fixtures.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "eecs/vocabulary.h"

namespace eecs::testing {

namespace fs = std::filesystem;

TempDir::TempDir() {
  std::string tmpl = (fs::temp_directory_path() / "eecs_test_XXXXXX").string();
  if (!mkdtemp(tmpl.data())) throw std::runtime_error("mkdtemp failed");
  path_ = tmpl;
}

TempDir::~TempDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

std::string TempDir::File(const std::string &name) const {
  return (fs::path(path_) / name).string();
}

void WriteFile(const std::string &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

namespace {

std::vector<std::pair<std::string, int64_t>> Numbered(const std::string &prefix,
                                                      int n) {
  std::vector<std::pair<std::string, int64_t>> out;
  for (int i = 0; i < n; ++i) out.emplace_back(prefix + std::to_string(i), 1);
  return out;
}

Matrix Gaussian(int rows, int cols, double scale, std::mt19937_64 &rng) {
  std::normal_distribution<double> normal(0.0, scale);
  return Matrix::NullaryExpr(rows, cols, [&] { return normal(rng); });
}

}  // namespace

RandomProblem MakeRandomProblem(uint64_t seed, int dim) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 150.0);
  const int num_words = 4, num_entities = 6;
  const EntityCatalog catalog(Numbered("e", num_entities));
  const Vocabulary vocab(Numbered("w", num_words));

  RandomProblem p;
  std::vector<CooccurrenceEntry> ww, ew;
  for (int i = 0; i < num_words; ++i) {
    for (int j = 0; j < num_words; ++j) {
      if (rng() % 3 != 0) ww.push_back({i, j, weight(rng)});
    }
  }
  for (int e = 0; e < num_entities; ++e) {
    for (int j = 0; j < num_words; ++j) {
      if (rng() % 2 == 0) ew.push_back({e, j, weight(rng)});
    }
  }
  p.data.word_word = CooccurrenceTable(CooccurrenceKind::kWordWord, ww);
  p.data.entity_word = CooccurrenceTable(CooccurrenceKind::kEntityWord, ew);
  p.data.types = TypeSystem({{0, "small"}, {1, "small"}, {2, "big"}, {3, "big"}},
                            {{"small", "big"}});
  // One self-loop, shared heads and shared tails.
  p.data.triples = TripleStore({"r0", "r1"}, {{0, 0, 1}, {0, 0, 2}, {3, 0, 1},
                                              {2, 1, 4}, {5, 1, 5}, {4, 1, 0}});
  p.shape = ModelShape::FromData(catalog, vocab, p.data.types, p.data.triples,
                                 Variant::kTypeComb);
  Hyperparams hp;
  hp.dim = dim;
  p.params = InitParameters(p.shape, hp, seed);

  EmbeddingModel &m = p.params.model;
  m.entities = Gaussian(dim, num_entities, 0.5, rng);
  m.words = Gaussian(dim, num_words, 0.5, rng);
  m.contexts = Gaussian(dim, num_words, 0.5, rng);
  m.entity_bias = Gaussian(num_entities, 1, 0.5, rng);
  m.word_bias = Gaussian(num_words, 1, 0.5, rng);
  m.context_bias = Gaussian(num_words, 1, 0.5, rng);
  p.params.relations.relations =
      Gaussian(dim, static_cast<int>(p.params.relations.relations.cols()), 0.5, rng);
  std::uniform_real_distribution<double> positive(0.1, 1.0);
  auto simplex = [&](Matrix *c) {
    for (int j = 0; j < c->cols(); ++j) {
      for (int i = 0; i < c->rows(); ++i) (*c)(i, j) = positive(rng);
      c->col(j) /= c->col(j).sum();
    }
  };
  for (TypeSubspace &t : p.params.types.types) {
    t.anchors = Gaussian(dim, dim + 1, 1.0, rng);
    simplex(&t.coefficients);
  }
  for (RelationGroup &g : p.params.relations.groups) {
    g.anchors = Gaussian(dim, dim + 1, 1.0, rng);
    simplex(&g.coefficients);
  }
  return p;
}

LowRankFixture MakeLowRankFixture(uint64_t seed, int num_typed, int num_held_out,
                                  int num_words) {
  LowRankFixture f;
  f.num_typed = num_typed;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const int n = f.dim, d = f.subspace_dim, total = num_typed + num_held_out;
  const Eigen::HouseholderQR<Matrix> qr(Gaussian(n, d, 1.0, rng));
  f.basis = qr.householderQ() * Matrix::Identity(n, d);
  f.center = Gaussian(n, 1, 0.5, rng);
  f.points.resize(n, total);
  for (int e = 0; e < total; ++e) {
    f.points.col(e) = f.center + f.basis * Gaussian(d, 1, 1.0, rng) +
                      Gaussian(n, 1, f.noise, rng);
  }
  f.words = Gaussian(n, num_words, 0.3, rng);

  std::vector<CooccurrenceEntry> entries;
  for (int e = 0; e < total; ++e) {
    for (int j = 0; j < num_words; ++j) {
      entries.push_back({e, j, std::exp(f.base + f.points.col(e).dot(f.words.col(j)))});
    }
  }
  f.data.entity_word = CooccurrenceTable(CooccurrenceKind::kEntityWord, entries);
  std::vector<std::pair<int, std::string>> assertions;
  for (int e = 0; e < num_typed; ++e) assertions.emplace_back(e, "t");
  f.data.types = TypeSystem(assertions, {});
  const EntityCatalog catalog(Numbered("e", total));
  const Vocabulary vocab(Numbered("w", num_words));
  f.shape = ModelShape::FromData(catalog, vocab, f.data.types, f.data.triples,
                                 Variant::kNoRel);
  return f;
}

void WarmStart(const LowRankFixture &f, Parameters *params) {
  EmbeddingModel &m = params->model;
  m.entities = f.points;
  m.words = f.words;
  m.entity_bias.setConstant(f.base / 2);
  m.word_bias.setConstant(f.base / 2);
  for (TypeSubspace &t : params->types.types) {
    Vector mean = Vector::Zero(f.dim);
    for (int e : t.members) mean += f.points.col(e);
    mean /= static_cast<double>(t.members.size());
    const Vector shift = mean - t.anchors.rowwise().mean();
    t.anchors.colwise() += shift;
  }
}

AttributeCorpus MakeAttributeCorpus(uint64_t seed, int num_entities, int num_fillers) {
  AttributeCorpus c;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> attribute(0.0, 4.0);
  std::uniform_int_distribution<int> filler_count(1, 8);
  for (int e = 0; e < num_entities; ++e) {
    char id[16];
    std::snprintf(id, sizeof(id), "ent%03d", e);
    const double a = attribute(rng);
    c.attribute[id] = a;
    Sentence tokens(static_cast<size_t>(std::lround(std::exp(a))), "big");
    for (int w = 0; w < num_fillers; ++w) {
      tokens.insert(tokens.end(), filler_count(rng), "filler" + std::to_string(w));
    }
    std::shuffle(tokens.begin(), tokens.end(), rng);
    Document doc;
    doc.doc_id = std::string("article_") + id;
    doc.article_of = id;
    doc.sentences.push_back(std::move(tokens));
    c.docs.push_back(std::move(doc));
  }
  return c;
}

TranslationGraph MakeTranslationGraph(uint64_t seed, int num_entities, int dim,
                                      int num_words) {
  TranslationGraph g;
  std::mt19937_64 rng(seed);
  const int num_relations = 3;
  g.relations = Gaussian(dim, num_relations, 1.0, rng);
  g.points = Matrix::Zero(dim, num_entities);
  std::vector<Triple> triples;
  // Blocks of four: a root, root + r0, root + r1, (root + r0) + r2.
  for (int b = 0; b + 3 < num_entities; b += 4) {
    g.points.col(b) = Gaussian(dim, 1, 1.0, rng);
    g.points.col(b + 1) = g.points.col(b) + g.relations.col(0);
    g.points.col(b + 2) = g.points.col(b) + g.relations.col(1);
    g.points.col(b + 3) = g.points.col(b + 1) + g.relations.col(2);
    triples.push_back({b, 0, b + 1});
    triples.push_back({b, 1, b + 2});
    triples.push_back({b + 1, 2, b + 3});
  }
  for (int e = num_entities / 4 * 4; e < num_entities; ++e) {
    g.points.col(e) = Gaussian(dim, 1, 1.0, rng);
  }
  g.data.triples = TripleStore({"r0", "r1", "r2"}, triples);
  const Matrix words = Gaussian(dim, num_words, 0.3, rng);
  std::vector<CooccurrenceEntry> entries;
  for (int e = 0; e < num_entities; ++e) {
    for (int j = 0; j < num_words; ++j) {
      entries.push_back({e, j, std::exp(4.0 + g.points.col(e).dot(words.col(j)))});
    }
  }
  g.data.entity_word = CooccurrenceTable(CooccurrenceKind::kEntityWord, entries);
  const EntityCatalog catalog(Numbered("e", num_entities));
  const Vocabulary vocab(Numbered("w", std::max(num_words, 1)));
  g.shape = ModelShape::FromData(catalog, vocab, g.data.types, g.data.triples,
                                 Variant::kRelDist);
  return g;
}

namespace {

struct MicroWorld {
  std::vector<std::string> persons, cities, regions, orgs;
  std::map<std::string, std::string> born_in, works_for, located_in;
  std::map<std::string, double> fame;
};

std::string Pad(const std::string &prefix, int i) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%s%02d", prefix.c_str(), i);
  return buf;
}

void AddSentence(Document *doc, const std::vector<std::string> &tokens,
                 const std::set<std::string> &entities) {
  const int s = static_cast<int>(doc->sentences.size());
  doc->sentences.push_back(tokens);
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    if (entities.count(tokens[i])) doc->mentions.push_back({tokens[i], s, i, i + 1});
  }
}

}  // namespace

void WriteMicroCorpus(const std::string &dir, uint64_t seed) {
  fs::create_directories(dir);
  std::mt19937_64 rng(seed);
  auto pick = [&](const std::vector<std::string> &from) {
    return from[rng() % from.size()];
  };
  MicroWorld w;
  for (int i = 0; i < 30; ++i) w.persons.push_back(Pad("person", i));
  for (int i = 0; i < 8; ++i) w.cities.push_back(Pad("city", i));
  for (int i = 0; i < 4; ++i) w.regions.push_back(Pad("region", i));
  for (int i = 0; i < 8; ++i) w.orgs.push_back(Pad("org", i));
  std::set<std::string> entities;
  for (const auto *group : {&w.persons, &w.cities, &w.regions, &w.orgs}) {
    entities.insert(group->begin(), group->end());
  }
  std::uniform_real_distribution<double> fame(0.0, 3.0);
  for (int i = 0; i < 30; ++i) {
    const std::string &p = w.persons[i];
    w.born_in[p] = i < 10 ? w.cities[0] : i < 18 ? w.cities[1]
                                                  : w.cities[2 + rng() % 6];
    w.works_for[p] = i < 8 ? w.orgs[0] : w.orgs[1 + rng() % 7];
    w.fame[p] = fame(rng);
  }
  for (int i = 0; i < 8; ++i) w.located_in[w.cities[i]] = w.regions[i % 4];
  for (int i = 0; i < 8; ++i) w.located_in[w.orgs[i]] = w.cities[i];

  std::vector<Document> docs;
  const std::vector<std::string> science = {"physics", "research", "theory",
                                            "laboratory", "experiment"};
  const std::vector<std::string> city_words = {"streets", "river", "market", "mayor",
                                               "harbor"};
  const std::vector<std::string> region_words = {"mountains", "valley", "coast",
                                                 "province"};
  const std::vector<std::string> org_words = {"company", "staff", "founded",
                                              "headquarters", "products"};
  const std::vector<std::string> filler = {"the", "and", "of", "was", "with",
                                           "also", "many", "known"};
  auto article = [&](const std::string &id) {
    Document d;
    d.doc_id = "article_" + id;
    d.article_of = id;
    return d;
  };
  for (int i = 0; i < 30; ++i) {
    const std::string &p = w.persons[i];
    Document d = article(p);
    AddSentence(&d, {p, "is", "a", "person"}, entities);
    AddSentence(&d, {p, "was", "born", "in", w.born_in[p]}, entities);
    AddSentence(&d, {p, "works", "for", w.works_for[p]}, entities);
    if (i < 12) {
      std::vector<std::string> s = {p, "studies"};
      for (int k = 0; k < 4; ++k) s.push_back(pick(science));
      AddSentence(&d, s, entities);
    }
    std::vector<std::string> famous(static_cast<size_t>(std::lround(std::exp(w.fame[p]))),
                                    "famous");
    famous.insert(famous.begin(), p);
    AddSentence(&d, famous, entities);
    docs.push_back(std::move(d));
  }
  for (const std::string &c : w.cities) {
    Document d = article(c);
    AddSentence(&d, {c, "is", "a", "city", "in", w.located_in[c]}, entities);
    AddSentence(&d, {c, pick(city_words), pick(city_words), pick(filler)}, entities);
    docs.push_back(std::move(d));
  }
  for (const std::string &r : w.regions) {
    Document d = article(r);
    AddSentence(&d, {r, "is", "a", "region"}, entities);
    AddSentence(&d, {r, pick(region_words), pick(region_words)}, entities);
    docs.push_back(std::move(d));
  }
  for (const std::string &o : w.orgs) {
    Document d = article(o);
    AddSentence(&d, {o, "is", "an", "organization", "in", w.located_in[o]}, entities);
    AddSentence(&d, {o, pick(org_words), pick(org_words), pick(filler)}, entities);
    docs.push_back(std::move(d));
  }
  for (int n = 0; docs.size() < 200; ++n) {
    Document d;
    d.doc_id = Pad("news", n);
    for (int s = 0; s < 3; ++s) {
      const std::string p = pick(w.persons);
      switch (rng() % 3) {
        case 0:
          AddSentence(&d, {pick(filler), p, "visited", w.born_in[p], "where", p, "was",
                           "born"},
                      entities);
          break;
        case 1:
          AddSentence(&d, {p, "joined", w.works_for[p], pick(filler), pick(org_words)},
                      entities);
          break;
        default: {
          const std::string c = pick(w.cities);
          AddSentence(&d, {c, "in", w.located_in[c], pick(filler), pick(city_words)},
                      entities);
        }
      }
    }
    docs.push_back(std::move(d));
  }
  SaveCorpus((fs::path(dir) / "corpus.jsonl").string(), docs);

  std::ostringstream instances, subclass, triples;
  for (int i = 0; i < 30; ++i) {
    instances << w.persons[i] << "\t" << (i < 12 ? "scientist" : "person") << "\n";
  }
  for (const std::string &c : w.cities) instances << c << "\tcity\n";
  for (const std::string &r : w.regions) instances << r << "\tplace\n";
  for (const std::string &o : w.orgs) instances << o << "\torganization\n";
  subclass << "scientist\tperson\ncity\tplace\n";
  std::vector<std::array<std::string, 3>> all;
  for (const auto &[p, c] : w.born_in) all.push_back({p, "born_in", c});
  for (const auto &[p, o] : w.works_for) all.push_back({p, "works_for", o});
  for (const auto &[x, y] : w.located_in) all.push_back({x, "located_in", y});
  for (const auto &t : all) triples << t[0] << "\t" << t[1] << "\t" << t[2] << "\n";
  WriteFile((fs::path(dir) / "instances.tsv").string(), instances.str());
  WriteFile((fs::path(dir) / "subclass.tsv").string(), subclass.str());
  WriteFile((fs::path(dir) / "triples.tsv").string(), triples.str());

  nlohmann::json ranking;
  ranking["type"] = "person";
  ranking["attribute"] = "fame";
  for (const auto &[p, v] : w.fame) ranking["values"][p] = v;
  WriteFile((fs::path(dir) / "ranking.json").string(), ranking.dump() + "\n");

  std::ostringstream induction;
  auto positives = [&](const std::map<std::string, std::string> &rel,
                       const std::string &target) {
    std::vector<std::string> out;
    for (const auto &[x, y] : rel) {
      if (y == target) out.push_back(x);
    }
    return out;
  };
  for (const auto &[rel, target, map] :
       {std::tuple{"born_in", w.cities[0], &w.born_in},
        std::tuple{"works_for", w.orgs[0], &w.works_for}}) {
    const std::vector<std::string> pos = positives(*map, target);
    nlohmann::json j;
    j["relation"] = rel;
    j["target"] = target;
    const size_t train = pos.size() * 6 / 10, valid = (pos.size() - train) / 2;
    j["split"]["train"] = std::vector<std::string>(pos.begin(), pos.begin() + train);
    j["split"]["valid"] =
        std::vector<std::string>(pos.begin() + train, pos.begin() + train + valid);
    j["split"]["test"] = std::vector<std::string>(pos.begin() + train + valid, pos.end());
    induction << j.dump() << "\n";
  }
  WriteFile((fs::path(dir) / "induction.json").string(), induction.str());

  nlohmann::json analogy;
  analogy["quads"] = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) {
    const std::string &a = w.persons[i * 2], &c = w.persons[29 - i * 2];
    analogy["quads"].push_back({a, w.born_in[a], c, w.born_in[c]});
  }
  analogy["split"]["tune"] = {0, 1};
  analogy["split"]["test"] = {2, 3, 4, 5, 6, 7};
  WriteFile((fs::path(dir) / "analogy.json").string(), analogy.dump() + "\n");

  std::shuffle(all.begin(), all.end(), rng);
  std::set<std::array<std::string, 3>> known(all.begin(), all.end());
  auto labeled = [&](size_t from, size_t to) {
    std::ostringstream out;
    for (size_t i = from; i < to; ++i) {
      const auto &t = all[i];
      out << t[0] << "\t" << t[1] << "\t" << t[2] << "\t1\n";
      const std::vector<std::string> &pool =
          t[1] == "born_in" ? w.cities : t[1] == "works_for" ? w.orgs
                                                             : w.regions;
      std::array<std::string, 3> neg = t;
      do {
        neg[2] = pick(t[1] == "located_in" && t[0].rfind("org", 0) == 0 ? w.cities : pool);
      } while (known.count(neg));
      out << neg[0] << "\t" << neg[1] << "\t" << neg[2] << "\t0\n";
    }
    return out.str();
  };
  WriteFile((fs::path(dir) / "link_valid.tsv").string(), labeled(0, 12));
  WriteFile((fs::path(dir) / "link_test.tsv").string(), labeled(12, 24));
}

}  // namespace eecs::testing
