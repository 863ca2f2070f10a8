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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "doctest.h"
#include "dueling/distributions.h"
#include "dueling/errors.h"

namespace dueling {
namespace ranking {
namespace {

Matrix<double> RandomDoublyStochastic(int n, CounterRng& rng, int mix = 4) {
  Matrix<double> x(n, n);
  std::vector<double> w(mix);
  double total = 0;
  for (double& v : w) total += (v = rng.Uniform() + 0.05);
  for (int t = 0; t < mix; ++t) {
    std::vector<int> perm = rng.Permutation(n);
    for (int i = 0; i < n; ++i) x(i, perm[i]) += w[t] / total;
  }
  return x;
}

std::vector<double> RandomP(int n, CounterRng& rng) { return ToDoubles(RandomProbs(n, rng)); }

TEST_CASE("greedy ranking") {
  CHECK(GreedyRanking<double>({0.5, 0.3, 0.2}).Order() == std::vector<int>{0, 1, 2});
  CHECK(GreedyRanking<double>({0.25, 0.25, 0.25, 0.25}).Order() == std::vector<int>{0, 1, 2, 3});
  CHECK(GreedyRanking<double>({0.2, 0.3, 0.5}).Order() == std::vector<int>{2, 1, 0});
}

TEST_CASE("payoff matrix") {
  auto one = RankingPayoffMatrix<Rational>({1});
  CHECK(one.rows() == 1);
  CHECK(one(0, 0) == Rational(1, 2));
  auto two = RankingPayoffMatrix(UniformProbs(2));
  CHECK(two(PairIndex(2, 0, 0), PairIndex(2, 0, 1)) == Rational(1, 2));
  CHECK(two(PairIndex(2, 0, 0), PairIndex(2, 0, 0)) == Rational(1, 4));
  CHECK(two(PairIndex(2, 0, 1), PairIndex(2, 0, 0)) == 0);
  CHECK(two(PairIndex(2, 0, 0), PairIndex(2, 1, 1)) == 0);
}

TEST_CASE("self-play is one half") {
  CounterRng rng(4);
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + static_cast<int>(rng.UniformInt(6));
    auto p = RandomP(n, rng);
    auto x = RandomDoublyStochastic(n, rng);
    CHECK(std::abs(RankingPayoff(x, x, p) - 0.5) < 1e-12);
    auto flat = FlattenSquare(x);
    CHECK(std::abs(BilinearValue(flat, RankingPayoffMatrix(p), flat) - 0.5) < 1e-12);
  }
}

TEST_CASE("duel solutions") {
  auto a = SolveRankingDuel<Rational>({Rational(9, 10), Rational(1, 10)});
  CHECK(a.value == Rational(1, 2));

  auto b = SolveRankingDuel(UniformProbs(3));
  CHECK(b.value == Rational(1, 2));
  auto duel = RankingBilinearDuel(UniformProbs(3));
  CHECK(VerifyMinmax(FlattenSquare(b.x), duel, Rational(1, 2)).ok);
  CHECK(b.equilibrium.player2.value == Rational(1, 2));

  // n = 4 random p against the enumeration oracle over all 24 rankings.
  CounterRng rng(8);
  for (int t = 0; t < 3; ++t) {
    auto p = RandomProbs(4, rng);
    auto s = SolveRankingDuel(p);
    auto oracle = SolveMatrixGame(DuelToMatrix(RankingFiniteDuel(p)));
    CHECK(s.value == oracle.value);
    CHECK(s.value == Rational(1, 2));
    auto br = BestResponseRanking(s.x, p);
    CHECK(br.second <= Rational(1, 2));
  }
}

TEST_CASE("greedy can be beaten") {
  auto p = UniformProbs(3);
  auto greedy = GreedyRanking(p);
  auto v = VerifyMinmax(FlattenSquare(greedy.ToMatrix<Rational>()), RankingBilinearDuel(p),
                        Rational(1, 2));
  CHECK_FALSE(v.ok);
  CHECK(v.worst_value == Rational(1, 3));

  auto q = PerturbedUniformProbs(4, Rational(1, 10000));
  auto br = BestResponseRanking(GreedyRanking(q).ToMatrix<Rational>(), q);
  CHECK(br.second == 1 - q[3]);
  CHECK(br.second == q[0] + q[1] + q[2]);
}

TEST_CASE("best response matches enumeration") {
  CounterRng rng(12);
  for (int t = 0; t < 30; ++t) {
    const int n = 1 + static_cast<int>(rng.UniformInt(5));
    auto p = RandomP(n, rng);
    auto x = RandomDoublyStochastic(n, rng);
    auto br = BestResponseRanking(x, p);
    double best = -1;
    for (const auto& r : AllRankings(n))
      best = std::max(best, RankingPayoff(r.ToMatrix<double>(), x, p));
    CHECK(br.second == doctest::Approx(best).epsilon(1e-12));
    CHECK(RankingPayoff(br.first.ToMatrix<double>(), x, p) ==
          doctest::Approx(br.second).epsilon(1e-12));
  }
  Matrix<double> uniform(3, 3, 1.0 / 3);
  // Against the uniform matrix every ranking earns one half when p is uniform.
  CHECK(BestResponseRanking(uniform, {1.0 / 3, 1.0 / 3, 1.0 / 3}).second == doctest::Approx(0.5));
}

TEST_CASE("Birkhoff decomposition") {
  auto perm = Ranking::FromOrder({2, 0, 1});
  auto single = BirkhoffDecompose(perm.ToMatrix<double>());
  REQUIRE(single.size() == 1);
  CHECK(single[0].weight == 1.0);
  CHECK(single[0].ranking == perm);

  Matrix<double> half(2, 2, 0.5);
  auto two = BirkhoffDecompose(half);
  REQUIRE(two.size() == 2);
  CHECK(two[0].weight == 0.5);
  CHECK(two[1].weight == 0.5);

  CounterRng rng(99);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng.UniformInt(4));
    auto x = RandomDoublyStochastic(n, rng, 6);
    auto terms = BirkhoffDecompose(x);
    CHECK(static_cast<int>(terms.size()) <= (n - 1) * (n - 1) + 1);
    Matrix<double> back(n, n);
    double total = 0;
    for (const auto& term : terms) {
      CHECK(term.weight > 0);
      total += term.weight;
      for (int i = 0; i < n; ++i) back(i, term.ranking.position[i]) += term.weight;
    }
    CHECK(std::abs(total - 1) < 1e-6);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(std::abs(back(i, j) - x(i, j)) < 1e-6);
  }
  Matrix<double> bad(2, 2, 0.7);
  CHECK_THROWS_AS(BirkhoffDecompose(bad), DomainError);
}

TEST_CASE("sampler marginals and goodness of fit") {
  Matrix<double> uniform(3, 3, 1.0 / 3);
  CounterRng rng(5);
  RankingSampler sampler(uniform);
  Matrix<double> counts(3, 3);
  const int draws = 100000;
  for (int s = 0; s < draws; ++s) {
    auto r = sampler.Sample(rng);
    CHECK_UNARY(r.IsValid());
    for (int i = 0; i < 3; ++i) counts(i, r.position[i]) += 1.0 / draws;
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(std::abs(counts(i, j) - 1.0 / 3) < 0.01);

  // Chi-square test of term frequencies against decomposition weights.
  for (int n : {3, 4}) {
    auto x = RandomDoublyStochastic(n, rng, 5);
    RankingSampler s(x);
    std::vector<double> hits(s.terms().size(), 0);
    for (int d = 0; d < draws; ++d) {
      auto r = s.Sample(rng);
      for (size_t k = 0; k < s.terms().size(); ++k)
        if (s.terms()[k].ranking == r) {
          hits[k] += 1;
          break;
        }
    }
    double stat = 0;
    for (size_t k = 0; k < hits.size(); ++k) {
      const double expected = draws * s.terms()[k].weight;
      stat += (hits[k] - expected) * (hits[k] - expected) / expected;
    }
    if (hits.size() > 1) {
      boost::math::chi_squared dist(static_cast<double>(hits.size() - 1));
      CHECK(stat < boost::math::quantile(boost::math::complement(dist, 1e-3)));
    }
  }
}

}  // namespace
}  // namespace ranking
}  // namespace dueling
