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

#ifndef EECS_PROX_H_
#define EECS_PROX_H_

#include "eecs/parameters.h"

namespace eecs {

// Euclidean projection onto the probability simplex (sort-based).
Vector ProjectToSimplex(const Vector &v);

// argmin_X 0.5 |X - M|_F^2 + tau |X|_*, by singular value soft thresholding.
Matrix ProxNuclear(const Matrix &m, double tau);

}  // namespace eecs

#endif  // EECS_PROX_H_
