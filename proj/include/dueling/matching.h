// Copyright 2026 The Dueling Algorithms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef DUELING_MATCHING_H_
#define DUELING_MATCHING_H_

#include <vector>

#include "dueling/scalar.h"

namespace dueling {

// Maximum-weight perfect matching of a square weight table (Hungarian
// method with potentials, O(n^3)). Returns assignment[row] = column.
template <typename S>
std::vector<int> MaxWeightAssignment(const Matrix<S>& weights, S* total = nullptr);

// Perfect matching in the bipartite graph with an edge (r, c) wherever
// allowed[r][c]; augmenting paths explored in index order. Returns
// assignment[row] = column, or an empty vector when none exists.
std::vector<int> PerfectMatching(const std::vector<std::vector<bool>>& allowed);

}  // namespace dueling

#endif  // DUELING_MATCHING_H_
