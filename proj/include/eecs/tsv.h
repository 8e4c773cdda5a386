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

#ifndef EECS_TSV_H_
#define EECS_TSV_H_

#include <functional>
#include <string>
#include <vector>

namespace eecs {

std::vector<std::string> SplitTabs(const std::string &line);

// Calls `row` with the fields and 1-based line number of every line that is
// neither blank nor a '#' comment. Lines with fewer than `min_fields` fields
// raise ParseError. Trailing carriage returns are stripped.
void ReadTsv(const std::string &path, size_t min_fields,
             const std::function<void(const std::vector<std::string> &,
                                      long)> &row);

}  // namespace eecs

#endif  // EECS_TSV_H_
