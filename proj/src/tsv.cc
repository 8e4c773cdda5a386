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

#include "eecs/tsv.h"

#include <fstream>

#include "eecs/errors.h"

namespace eecs {

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

void ReadTsv(const std::string &path, size_t min_fields,
             const std::function<void(const std::vector<std::string> &,
                                      long)> &row) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::string line;
  long line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = SplitTabs(line);
    if (fields.size() < min_fields) {
      throw ParseError(path, line_number,
                       "expected " + std::to_string(min_fields) +
                           " tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    for (size_t i = 0; i < min_fields; ++i) {
      if (fields[i].empty()) {
        throw ParseError(path, line_number,
                         "empty field " + std::to_string(i + 1));
      }
    }
    row(fields, line_number);
  }
}

}  // namespace eecs
