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

#ifndef EECS_MODEL_IO_H_
#define EECS_MODEL_IO_H_

#include <string>

#include "eecs/hyperparams.h"
#include "eecs/parameters.h"

namespace eecs {

inline constexpr char kModelMagic[8] = {'E', 'E', 'C', 'S', 'M', 'O', 'D', 'L'};
inline constexpr uint32_t kModelMajorVersion = 1;
inline constexpr uint32_t kModelMinorVersion = 0;

struct SavedModel {
  Parameters params;
  Hyperparams hp;
};

// Binary model file: magic, major/minor version, hyperparameters, counts,
// id tables, every parameter block as little-endian float64, and a trailing
// CRC-32 of all preceding bytes. Round trips are exact.
std::string SerializeModel(const Parameters &params, const Hyperparams &hp);
SavedModel DeserializeModel(const std::string &bytes);

void SaveModel(const std::string &path, const Parameters &params,
               const Hyperparams &hp);
// Throws FormatError for a foreign or incompatible file and IntegrityError
// for a truncated or corrupted one.
SavedModel LoadModel(const std::string &path);

// Writes "id v1 ... vn" lines, entities first, then words. Decimal and lossy.
void ExportText(const std::string &path, const EmbeddingModel &model,
                bool entities = true, bool words = true);

}  // namespace eecs

#endif  // EECS_MODEL_IO_H_
