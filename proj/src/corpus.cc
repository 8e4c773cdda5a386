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

#include "eecs/corpus.h"

#include <algorithm>
#include <cctype>
#include <tuple>
#include <fstream>
#include <set>

#include "eecs/errors.h"
#include <nlohmann/json.hpp>

namespace eecs {

namespace {

std::string Lowercase(std::string s) {
  for (char &c : s) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return s;
}

Document ParseDocument(const nlohmann::json &j) {
  Document doc;
  doc.doc_id = j.at("doc_id").get<std::string>();
  if (j.contains("article_of") && !j.at("article_of").is_null()) {
    doc.article_of = j.at("article_of").get<std::string>();
  }
  for (const auto &sentence : j.at("sentences")) {
    Sentence tokens;
    tokens.reserve(sentence.size());
    for (const auto &token : sentence) {
      tokens.push_back(Lowercase(token.get<std::string>()));
    }
    doc.sentences.push_back(std::move(tokens));
  }
  if (j.contains("mentions")) {
    for (const auto &m : j.at("mentions")) {
      const auto &span = m.at("span");
      if (!span.is_array() || span.size() != 2) {
        throw std::invalid_argument("span must be [start, end]");
      }
      doc.mentions.push_back(Mention{m.at("entity").get<std::string>(),
                                     m.at("sentence").get<int>(),
                                     span[0].get<int>(), span[1].get<int>()});
    }
  }
  return doc;
}

}  // namespace

void ValidateDocument(const Document &doc) {
  const int num_sentences = static_cast<int>(doc.sentences.size());
  for (const Mention &m : doc.mentions) {
    if (m.sentence < 0 || m.sentence >= num_sentences) {
      throw ValidationError("document " + doc.doc_id + ": mention of " +
                            m.entity + " addresses sentence " +
                            std::to_string(m.sentence) + " of " +
                            std::to_string(num_sentences));
    }
    const int length = static_cast<int>(doc.sentences[m.sentence].size());
    if (m.begin < 0 || m.end <= m.begin || m.end > length) {
      throw ValidationError("document " + doc.doc_id + ": mention of " +
                            m.entity + " has span [" +
                            std::to_string(m.begin) + ", " +
                            std::to_string(m.end) + ") outside sentence of " +
                            std::to_string(length) + " tokens");
    }
  }
  std::vector<const Mention *> sorted;
  for (const Mention &m : doc.mentions) sorted.push_back(&m);
  std::sort(sorted.begin(), sorted.end(), [](const Mention *a, const Mention *b) {
    return std::tie(a->sentence, a->begin) < std::tie(b->sentence, b->begin);
  });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i - 1]->Overlaps(*sorted[i])) {
      throw ValidationError("document " + doc.doc_id +
                            ": overlapping mentions of " +
                            sorted[i - 1]->entity + " and " +
                            sorted[i]->entity + " in sentence " +
                            std::to_string(sorted[i]->sentence));
    }
  }
}

std::vector<Document> LoadCorpus(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open corpus file " + path);
  std::vector<Document> docs;
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Document doc;
    try {
      doc = ParseDocument(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      throw ParseError(path, line_number, e.what());
    } catch (const std::invalid_argument &e) {
      throw ParseError(path, line_number, e.what());
    }
    ValidateDocument(doc);
    docs.push_back(std::move(doc));
  }
  return docs;
}

void SaveCorpus(const std::string &path, const std::vector<Document> &docs) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write corpus file " + path);
  for (const Document &doc : docs) {
    nlohmann::json j;
    j["doc_id"] = doc.doc_id;
    j["article_of"] = doc.article_of ? nlohmann::json(*doc.article_of)
                                     : nlohmann::json(nullptr);
    j["sentences"] = doc.sentences;
    j["mentions"] = nlohmann::json::array();
    for (const Mention &m : doc.mentions) {
      j["mentions"].push_back({{"entity", m.entity},
                               {"sentence", m.sentence},
                               {"span", {m.begin, m.end}}});
    }
    out << j.dump() << '\n';
  }
}

std::map<std::string, Sentence> CollectSurfaceForms(const Document &doc) {
  std::map<std::string, Sentence> forms;
  for (const Mention &m : doc.mentions) {
    if (forms.count(m.entity)) continue;
    const Sentence &s = doc.sentences[m.sentence];
    forms.emplace(m.entity, Sentence(s.begin() + m.begin, s.begin() + m.end));
  }
  return forms;
}

Document ExpandAnchorMentions(
    const Document &doc,
    const std::map<std::string, Sentence> &surface_forms) {
  // Candidate (entity, lowercased surface) pairs, longest first.
  std::set<std::string> mentioned;
  for (const Mention &m : doc.mentions) mentioned.insert(m.entity);
  std::vector<std::pair<std::string, Sentence>> candidates;
  for (const std::string &entity : mentioned) {
    auto it = surface_forms.find(entity);
    if (it == surface_forms.end() || it->second.empty()) continue;
    Sentence lowered;
    for (const std::string &t : it->second) lowered.push_back(Lowercase(t));
    candidates.emplace_back(entity, std::move(lowered));
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto &a, const auto &b) {
                     return a.second.size() > b.second.size();
                   });

  Document result = doc;
  if (candidates.empty()) return result;
  for (int s = 0; s < static_cast<int>(doc.sentences.size()); ++s) {
    const Sentence &tokens = doc.sentences[s];
    const int length = static_cast<int>(tokens.size());
    std::vector<bool> covered(length, false);
    for (const Mention &m : doc.mentions) {
      if (m.sentence != s) continue;
      for (int i = m.begin; i < m.end; ++i) covered[i] = true;
    }
    int pos = 0;
    while (pos < length) {
      if (covered[pos]) {
        ++pos;
        continue;
      }
      int matched = 0;
      for (const auto &[entity, surface] : candidates) {
        const int n = static_cast<int>(surface.size());
        if (pos + n > length) continue;
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          ok = !covered[pos + i] && Lowercase(tokens[pos + i]) == surface[i];
        }
        if (!ok) continue;
        result.mentions.push_back(Mention{entity, s, pos, pos + n});
        for (int i = 0; i < n; ++i) covered[pos + i] = true;
        matched = n;
        break;
      }
      pos += matched > 0 ? matched : 1;
    }
  }
  return result;
}

}  // namespace eecs
