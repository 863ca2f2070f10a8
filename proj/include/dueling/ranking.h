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


#ifndef DUELING_RANKING_H_
#define DUELING_RANKING_H_

#include <utility>
#include <vector>

#include "dueling/bilinear.h"
#include "dueling/core.h"
#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {
namespace ranking {

// position[item] is the item's slot, 0 being the top of the list.
struct Ranking {
  std::vector<int> position;

  int size() const { return static_cast<int>(position.size()); }
  static Ranking FromOrder(const std::vector<int>& order);
  // order[slot] = item.
  std::vector<int> Order() const;
  bool IsValid() const;
  // Permutation matrix x with x(item, slot) = 1.
  template <typename S>
  Matrix<S> ToMatrix() const;
  bool operator==(const Ranking&) const = default;
};

// Items by decreasing probability, ties to the smaller index.
template <typename S>
Ranking GreedyRanking(const std::vector<S>& p);

// Row/column index of the pair (item i, slot j) in the n^2 encoding.
inline int PairIndex(int n, int i, int j) { return i * n + j; }

// M[(i,j),(i,k)] = p_i (1/2 [j = k] + [k > j]); zero across items.
template <typename S>
Matrix<S> RankingPayoffMatrix(const std::vector<S>& p);

// Payoff x^T M x' evaluated directly in O(n^2).
template <typename S>
S RankingPayoff(const Matrix<S>& x, const Matrix<S>& xprime, const std::vector<S>& p);

// Row and column sums one, entries nonnegative, over the n^2 coordinates.
template <typename S>
Polytope<S> DoublyStochasticPolytope(int n);

template <typename S>
BilinearDuel<S> RankingBilinearDuel(const std::vector<S>& p);

inline constexpr int kRankingCap = 50;

template <typename S>
struct RankingSolution {
  S value = S(0);
  Matrix<S> x;        // player one's minmax doubly stochastic matrix
  Matrix<S> x_prime;  // player two's
  BilinearEquilibrium<S> equilibrium;
};

template <typename S>
RankingSolution<S> SolveRankingDuel(const std::vector<S>& p, const SimplexOptions& options = {});

template <typename S>
Matrix<S> UnflattenSquare(const std::vector<S>& v, int n);
template <typename S>
std::vector<S> FlattenSquare(const Matrix<S>& m);

bool IsDoublyStochastic(const Matrix<double>& x, double tol = 1e-9);

struct BvnTerm {
  double weight = 0.0;
  Ranking ranking;
};

// Birkhoff-von Neumann decomposition by repeated perfect matchings on the
// positive support; entries below 1e-9 are treated as zero.
std::vector<BvnTerm> BirkhoffDecompose(const Matrix<double>& x);

// Draws rankings from a fixed decomposition.
class RankingSampler {
 public:
  explicit RankingSampler(const Matrix<double>& x);
  Ranking Sample(CounterRng& rng) const;
  const std::vector<BvnTerm>& terms() const { return terms_; }

 private:
  std::vector<BvnTerm> terms_;
  std::vector<double> weights_;
};

Ranking SampleRanking(const Matrix<double>& x, CounterRng& rng);

// Exact best pure response to an opponent's doubly stochastic matrix and
// its payoff, via maximum-weight assignment of items to slots.
template <typename S>
std::pair<Ranking, S> BestResponseRanking(const Matrix<S>& opponent, const std::vector<S>& p);

// Every ranking of n items in lexicographic order of Order().
std::vector<Ranking> AllRankings(int n);

// Enumerated duel: strategies are all n! rankings, cost = slot of the item.
template <typename S>
FiniteDuel<S> RankingFiniteDuel(const std::vector<S>& p);

}  // namespace ranking
}  // namespace dueling

#endif  // DUELING_RANKING_H_
