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


#include "dueling/ranking.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "dueling/errors.h"
#include "dueling/matching.h"

namespace dueling {
namespace ranking {

Ranking Ranking::FromOrder(const std::vector<int>& order) {
  Ranking r;
  r.position.assign(order.size(), -1);
  for (int slot = 0; slot < static_cast<int>(order.size()); ++slot) {
    const int item = order[slot];
    if (item < 0 || item >= static_cast<int>(order.size()) || r.position[item] >= 0)
      throw DomainError("order is not a permutation");
    r.position[item] = slot;
  }
  return r;
}

std::vector<int> Ranking::Order() const {
  std::vector<int> order(position.size());
  for (int item = 0; item < size(); ++item) order[position[item]] = item;
  return order;
}

bool Ranking::IsValid() const {
  std::vector<bool> seen(position.size(), false);
  for (int slot : position) {
    if (slot < 0 || slot >= size() || seen[slot]) return false;
    seen[slot] = true;
  }
  return true;
}

template <typename S>
Matrix<S> Ranking::ToMatrix() const {
  Matrix<S> m(size(), size());
  for (int item = 0; item < size(); ++item) m(item, position[item]) = S(1);
  return m;
}

template <typename S>
Ranking GreedyRanking(const std::vector<S>& p) {
  if (p.empty()) throw DomainError("ranking needs at least one item");
  std::vector<int> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p[a] > p[b]; });
  return Ranking::FromOrder(order);
}

template <typename S>
Matrix<S> RankingPayoffMatrix(const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  Matrix<S> m(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m(PairIndex(n, i, j), PairIndex(n, i, j)) = p[i] * Half<S>();
      for (int k = j + 1; k < n; ++k) m(PairIndex(n, i, j), PairIndex(n, i, k)) = p[i];
    }
  return m;
}

template <typename S>
S RankingPayoff(const Matrix<S>& x, const Matrix<S>& xprime, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (x.rows() != n || x.cols() != n || xprime.rows() != n || xprime.cols() != n)
    throw DimensionError("ranking matrices must be n x n");
  S total(0);
  for (int i = 0; i < n; ++i) {
    S below(0);  // sum_{k > j} x'_ik
    S item(0);
    for (int j = n - 1; j >= 0; --j) {
      item += x(i, j) * (Half<S>() * xprime(i, j) + below);
      below += xprime(i, j);
    }
    total += p[i] * item;
  }
  return total;
}

template <typename S>
Polytope<S> DoublyStochasticPolytope(int n) {
  Polytope<S> poly(n * n);
  poly.AddNonNegativity();
  for (int i = 0; i < n; ++i) {
    std::vector<S> w(n * n, S(0));
    for (int j = 0; j < n; ++j) w[PairIndex(n, i, j)] = S(1);
    poly.AddEquality(std::move(w), S(1));
  }
  for (int j = 0; j < n; ++j) {
    std::vector<S> w(n * n, S(0));
    for (int i = 0; i < n; ++i) w[PairIndex(n, i, j)] = S(1);
    poly.AddEquality(std::move(w), S(1));
  }
  poly.bound = 1.0;
  return poly;
}

template <typename S>
BilinearDuel<S> RankingBilinearDuel(const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  BilinearDuel<S> duel;
  duel.K = DoublyStochasticPolytope<S>(n);
  duel.Kprime = duel.K;
  duel.M = RankingPayoffMatrix(p);
  duel.payoff2 = duel.M;
  return duel;
}

template <typename S>
Matrix<S> UnflattenSquare(const std::vector<S>& v, int n) {
  if (static_cast<int>(v.size()) != n * n) throw DimensionError("vector is not n^2 long");
  Matrix<S> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = v[PairIndex(n, i, j)];
  return m;
}

template <typename S>
std::vector<S> FlattenSquare(const Matrix<S>& m) {
  return m.data();
}

template <typename S>
RankingSolution<S> SolveRankingDuel(const std::vector<S>& p, const SimplexOptions& options) {
  const int n = static_cast<int>(p.size());
  if (n > kRankingCap) throw SizeError("ranking duel above the size cap");
  DiscreteDistribution<S>::FromProbs(p).Validate();
  RankingSolution<S> s;
  s.equilibrium = SolveBilinearDuel(RankingBilinearDuel(p), options);
  s.value = s.equilibrium.player1.value;
  s.x = UnflattenSquare(s.equilibrium.player1.x, n);
  s.x_prime = UnflattenSquare(s.equilibrium.player2.x, n);
  return s;
}

bool IsDoublyStochastic(const Matrix<double>& x, double tol) {
  const int n = x.rows();
  if (x.cols() != n) return false;
  for (int i = 0; i < n; ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < n; ++j) {
      if (x(i, j) < -tol || x(j, i) < -tol) return false;
      row += x(i, j);
      col += x(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

std::vector<BvnTerm> BirkhoffDecompose(const Matrix<double>& x) {
  constexpr double kZero = 1e-9;
  if (!IsDoublyStochastic(x, 1e-7)) throw DomainError("matrix is not doubly stochastic");
  const int n = x.rows();
  Matrix<double> rest = x;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rest(i, j) < kZero) rest(i, j) = 0.0;
  std::vector<BvnTerm> terms;
  double remaining = 1.0;
  while (remaining > kZero && static_cast<int>(terms.size()) <= (n - 1) * (n - 1)) {
    std::vector<std::vector<bool>> support(n, std::vector<bool>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) support[i][j] = rest(i, j) > 0.0;
    std::vector<int> match = PerfectMatching(support);
    if (match.empty()) break;
    double w = 1.0;
    for (int i = 0; i < n; ++i) w = std::min(w, rest(i, match[i]));
    for (int i = 0; i < n; ++i) {
      double& e = rest(i, match[i]);
      e -= w;
      if (e < kZero) e = 0.0;
    }
    remaining -= w;
    terms.push_back({w, Ranking{match}});
  }
  if (terms.empty()) throw DomainError("doubly stochastic matrix has no perfect matching");
  return terms;
}

RankingSampler::RankingSampler(const Matrix<double>& x) : terms_(BirkhoffDecompose(x)) {
  for (const auto& t : terms_) weights_.push_back(t.weight);
}

Ranking RankingSampler::Sample(CounterRng& rng) const {
  return terms_[rng.Categorical(weights_)].ranking;
}

Ranking SampleRanking(const Matrix<double>& x, CounterRng& rng) {
  return RankingSampler(x).Sample(rng);
}

template <typename S>
std::pair<Ranking, S> BestResponseRanking(const Matrix<S>& opponent, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (opponent.rows() != n || opponent.cols() != n)
    throw DimensionError("opponent matrix must be n x n");
  Matrix<S> gain(n, n);
  for (int i = 0; i < n; ++i) {
    S below(0);
    for (int j = n - 1; j >= 0; --j) {
      gain(i, j) = p[i] * (Half<S>() * opponent(i, j) + below);
      below += opponent(i, j);
    }
  }
  S total(0);
  std::vector<int> slot = MaxWeightAssignment(gain, &total);
  return {Ranking{slot}, total};
}

std::vector<Ranking> AllRankings(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> all;
  do {
    all.push_back(Ranking::FromOrder(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return all;
}

template <typename S>
FiniteDuel<S> RankingFiniteDuel(const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<std::string> labels;
  std::vector<std::vector<Cost<S>>> costs;
  for (const Ranking& r : AllRankings(n)) {
    std::string label;
    for (int item : r.Order()) label += (label.empty() ? "" : "-") + std::to_string(item + 1);
    labels.push_back(label);
    std::vector<Cost<S>> row(n);
    for (int i = 0; i < n; ++i) row[i] = Cost<S>::Of(S(r.position[i]));
    costs.push_back(std::move(row));
  }
  return FiniteDuel<S>::Symmetric(labels, costs, DiscreteDistribution<S>::FromProbs(p));
}

#define DUELING_INSTANTIATE_RANKING(S)                                                         \
  template Matrix<S> Ranking::ToMatrix<S>() const;                                             \
  template Ranking GreedyRanking(const std::vector<S>&);                                       \
  template Matrix<S> RankingPayoffMatrix(const std::vector<S>&);                               \
  template S RankingPayoff(const Matrix<S>&, const Matrix<S>&, const std::vector<S>&);         \
  template Polytope<S> DoublyStochasticPolytope(int);                                          \
  template BilinearDuel<S> RankingBilinearDuel(const std::vector<S>&);                         \
  template Matrix<S> UnflattenSquare(const std::vector<S>&, int);                              \
  template std::vector<S> FlattenSquare(const Matrix<S>&);                                     \
  template RankingSolution<S> SolveRankingDuel(const std::vector<S>&, const SimplexOptions&);  \
  template std::pair<Ranking, S> BestResponseRanking(const Matrix<S>&, const std::vector<S>&); \
  template FiniteDuel<S> RankingFiniteDuel(const std::vector<S>&);

DUELING_INSTANTIATE_RANKING(double)
DUELING_INSTANTIATE_RANKING(Rational)

}  // namespace ranking
}  // namespace dueling
