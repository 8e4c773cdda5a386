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

// Regenerates the bundled micro corpus: make_micro_corpus <dir> [seed]
#include <cstdlib>
#include <iostream>

#include "fixtures.h"

int main(int argc, char **argv) {
  if (argc < 2) {
    std::cerr << "usage: make_micro_corpus <dir> [seed]\n";
    return 1;
  }
  eecs::testing::WriteMicroCorpus(argv[1], argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7);
  return 0;
}
