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

#ifndef EECS_CORPUS_H_
#define EECS_CORPUS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eecs {

using Sentence = std::vector<std::string>;

// An annotated occurrence of an entity: tokens [begin, end) of one sentence.
struct Mention {
  std::string entity;
  int sentence = 0;
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool Overlaps(const Mention &other) const {
    return sentence == other.sentence && begin < other.end &&
           other.begin < end;
  }
  bool operator==(const Mention &) const = default;
};

struct Document {
  std::string doc_id;
  // Entity whose article this document is, if any.
  std::optional<std::string> article_of;
  std::vector<Sentence> sentences;
  std::vector<Mention> mentions;
};

// Checks the mention invariants of a document: every mention addresses an
// existing sentence, has a non-empty in-bounds span, and mentions in the same
// sentence do not overlap. Throws ValidationError naming the document.
void ValidateDocument(const Document &doc);

// Reads a JSON-lines corpus. Tokens are lowercased. Mentions of entities
// unknown to any catalog are kept; filtering happens when counting.
std::vector<Document> LoadCorpus(const std::string &path);

// Writes documents in the format read by LoadCorpus.
void SaveCorpus(const std::string &path, const std::vector<Document> &docs);

// Anchor token sequence of every entity mentioned in `doc`, taken from its
// first mention.
std::map<std::string, Sentence> CollectSurfaceForms(const Document &doc);

// Adds a mention at every case-insensitive occurrence of the surface form of
// an entity that is already mentioned in `doc`. Matching scans each sentence
// left to right and never overlaps an existing or newly added mention. At a
// given position longer surface forms are tried first.
Document ExpandAnchorMentions(
    const Document &doc, const std::map<std::string, Sentence> &surface_forms);

}  // namespace eecs

#endif  // EECS_CORPUS_H_
