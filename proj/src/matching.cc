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


#include "dueling/matching.h"

#include <functional>

#include "dueling/errors.h"

namespace dueling {

template <typename S>
std::vector<int> MaxWeightAssignment(const Matrix<S>& weights, S* total) {
  const int n = weights.rows();
  if (weights.cols() != n) throw DimensionError("assignment needs a square table");
  if (n == 0) {
    if (total) *total = S(0);
    return {};
  }
  // Minimize cost = -weight. `big` exceeds any reduced cost.
  S big(1);
  for (const S& w : weights.data()) big += w < 0 ? S(-w) : w;
  big *= 4;
  auto cost = [&](int r, int c) -> S { return -weights(r, c); };

  // 1-based arrays; row 0 / column 0 are the virtual start.
  std::vector<S> u(n + 1, S(0)), v(n + 1, S(0));
  std::vector<int> match(n + 1, 0), way(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    match[0] = r;
    int c0 = 0;
    std::vector<S> minv(n + 1, big);
    std::vector<bool> used(n + 1, false);
    do {
      used[c0] = true;
      const int r0 = match[c0];
      S delta = big;
      int c1 = 0;
      for (int c = 1; c <= n; ++c) {
        if (used[c]) continue;
        S cur = cost(r0 - 1, c - 1) - u[r0] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = c0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          c1 = c;
        }
      }
      for (int c = 0; c <= n; ++c) {
        if (used[c]) {
          u[match[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      c0 = c1;
    } while (match[c0] != 0);
    do {
      const int c1 = way[c0];
      match[c0] = match[c1];
      c0 = c1;
    } while (c0 != 0);
  }
  std::vector<int> assignment(n, -1);
  for (int c = 1; c <= n; ++c) assignment[match[c] - 1] = c - 1;
  if (total) {
    *total = S(0);
    for (int r = 0; r < n; ++r) *total += weights(r, assignment[r]);
  }
  return assignment;
}

std::vector<int> PerfectMatching(const std::vector<std::vector<bool>>& allowed) {
  const int n = static_cast<int>(allowed.size());
  std::vector<int> row_of(n, -1);
  std::vector<bool> visited;
  std::function<bool(int)> augment = [&](int r) {
    for (int c = 0; c < n; ++c) {
      if (!allowed[r][c] || visited[c]) continue;
      visited[c] = true;
      if (row_of[c] < 0 || augment(row_of[c])) {
        row_of[c] = r;
        return true;
      }
    }
    return false;
  };
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(allowed[r].size()) != n) throw DimensionError("matching needs a square graph");
    visited.assign(n, false);
    if (!augment(r)) return {};
  }
  std::vector<int> assignment(n);
  for (int c = 0; c < n; ++c) assignment[row_of[c]] = c;
  return assignment;
}

template std::vector<int> MaxWeightAssignment(const Matrix<double>&, double*);
template std::vector<int> MaxWeightAssignment(const Matrix<Rational>&, Rational*);

}  // namespace dueling
