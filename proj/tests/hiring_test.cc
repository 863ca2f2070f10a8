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


#include "dueling/hiring.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "dueling/errors.h"

namespace dueling {
namespace hiring {
namespace {

// Counts, over every order of n candidates, how often the i-th candidate is
// j-th best so far and has overall rank r.
Matrix<Rational> EnumeratedPosterior(int n, int i) {
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  Matrix<Rational> counts(i + 1, n + 1);
  std::vector<long> totals(i + 1, 0);
  do {
    int j = 1;
    for (int t = 0; t < i - 1; ++t)
      if (rank[t] < rank[i - 1]) ++j;
    counts(j, rank[i - 1]) += 1;
    ++totals[j];
  } while (std::next_permutation(rank.begin(), rank.end()));
  for (int j = 1; j <= i; ++j)
    for (int r = 1; r <= n; ++r) counts(j, r) /= totals[j];
  return counts;
}

TEST_CASE("posterior rows normalize up to the size cap") {
  for (int n = 1; n <= kHiringCap; ++n)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= i; ++j) {
        double row = 0.0;
        for (int r = 1; r <= n; ++r) row += RankPosterior<double>(n, i, j, r);
        CHECK(std::abs(row - 1.0) < 1e-9);
      }
}

TEST_CASE("posterior edge cases") {
  for (int n = 1; n <= 7; ++n) {
    for (int j = 1; j <= n; ++j) CHECK(RankPosterior<Rational>(n, n, j, j) == 1);
    for (int r = 1; r <= n; ++r) CHECK(RankPosterior<Rational>(n, 1, 1, r) == Rational(1, n));
  }
  CHECK(RankPosterior<Rational>(5, 3, 2, 1) == 0);  // r < j is impossible
  CHECK_THROWS_AS(RankPosterior<double>(5, 3, 4, 1), DomainError);
}

TEST_CASE("posterior matches exhaustive enumeration") {
  for (int n : {4, 5})
    for (int i = 1; i <= n; ++i) {
      const Matrix<Rational> oracle = EnumeratedPosterior(n, i);
      for (int j = 1; j <= i; ++j)
        for (int r = 1; r <= n; ++r) CHECK(RankPosterior<Rational>(n, i, j, r) == oracle(j, r));
    }
}

TEST_CASE("alternative middle binomial fails to normalize") {
  Rational row(0);
  for (int r = 1; r <= 5; ++r) row += RankPosteriorAlternative(5, 5, 2, r);
  CHECK(row != 1);
}

TEST_CASE("payoff tensor") {
  const int n = 3;
  const Matrix<Rational> m = HiringPayoffTensor<Rational>(n);
  const int d = NoHireIndex(n) + 1;
  REQUIRE(m.rows() == d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) CHECK(m(a, b) + m(b, a) == 1);
  CHECK(m(FlowIndex(n, 1), FlowIndex(n, 1)) == Rational(1, 2));
  CHECK(m(FlowIndex(1, 1), NoHireIndex(n)) == 1);

  // Oracle: two independent orders, hire the i-th candidate of one and the
  // i'-th of the other, tally by projected ranks.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::vector<std::vector<int>> orders;
  do orders.push_back(order);
  while (std::next_permutation(order.begin(), order.end()));
  auto projected = [](const std::vector<int>& o, int i) {
    int j = 1;
    for (int t = 0; t < i - 1; ++t)
      if (o[t] < o[i - 1]) ++j;
    return j;
  };
  for (int i = 1; i <= n; ++i)
    for (int ip = 1; ip <= n; ++ip) {
      Matrix<Rational> score(n + 1, n + 1), count(n + 1, n + 1);
      for (const auto& a : orders)
        for (const auto& b : orders) {
          const int j = projected(a, i), jp = projected(b, ip);
          const int ra = a[i - 1], rb = b[ip - 1];
          score(j, jp) += ra < rb ? Rational(1) : (ra == rb ? Rational(1, 2) : Rational(0));
          count(j, jp) += 1;
        }
      for (int j = 1; j <= i; ++j)
        for (int jp = 1; jp <= ip; ++jp)
          CHECK(m(FlowIndex(i, j), FlowIndex(ip, jp)) == score(j, jp) / count(j, jp));
    }
}

TEST_CASE("tensor size cap") {
  CHECK_THROWS_AS(HiringPayoffTensor<double>(kHiringCap + 1), SizeError);
}

TEST_CASE("independent duel is symmetric") {
  const HiringSolution<Rational> one = SolveIndependentHiring<Rational>(1);
  CHECK(one.value == Rational(1, 2));
  CHECK(one.flow.p[0][0] == 1);

  for (int n = 2; n <= 4; ++n) {
    const HiringSolution<Rational> s = SolveIndependentHiring<Rational>(n);
    CHECK(s.value == Rational(1, 2));
    CHECK(s.flow.Violation() <= 0.0);
    const Verification<Rational> v =
        VerifyMinmax(s.flow.ToVector(), HiringBilinearDuel<Rational>(n), s.value);
    CHECK(v.ok);
    CHECK(v.worst_value == Rational(1, 2));
  }
  const HiringSolution<double> six = SolveIndependentHiring<double>(6);
  CHECK(std::abs(six.value - 0.5) < 1e-6);
  CHECK(six.flow.Violation() < 1e-9);
}

TEST_CASE("common equilibrium thresholds") {
  // Frozen from exact binomials at n = 4: hire iff 2 C(i,j) >= C(4,j).
  const CommonDuelPolicy eq = CommonEquilibrium(4);
  const std::vector<std::vector<double>> expected = {
      {0.0}, {1.0, 0.0}, {1.0, 1.0, 0.0}, {1.0, 1.0, 1.0, 1.0}};
  CHECK(eq.pre.pi == expected);
  CHECK(eq.react);
  for (int n = 1; n <= 12; ++n) {
    const CommonDuelPolicy e = CommonEquilibrium(n);
    for (int i = 1; i <= n; ++i) CHECK((e.pre.at(i, 1) == 1.0) == (2 * i >= n));
    for (int j = 1; j <= n; ++j) CHECK(e.pre.at(n, j) == 1.0);
  }
}

TEST_CASE("classical secretary") {
  const CommonDuelPolicy c3 = ClassicalSecretary(3);
  CHECK_FALSE(c3.react);
  CHECK(c3.pre.at(1, 1) == 0.0);
  CHECK(c3.pre.at(2, 1) == 1.0);
  CHECK(c3.pre.at(2, 2) == 0.0);
  CHECK(c3.pre.at(3, 3) == 1.0);
  CHECK(ClassicalSecretary(1).pre.at(1, 1) == 1.0);

  const PolicySimulation sim = SimulatePolicy(ClassicalSecretary(200).pre, 200, 200000,
                                              CounterRng(11));
  CHECK(std::abs(sim.hire_rank[0] - std::exp(-1.0)) < 0.01);
  CHECK(sim.no_hire == 0.0);
}

TEST_CASE("common duel simulation") {
  const CounterRng rng(5);
  const CommonDuelPolicy eq = CommonEquilibrium(20);
  const SimulationResult self = SimulateCommonDuel(eq, eq, 20, 20000, rng);
  CHECK(std::abs(self.mean - 0.5) < 1e-12);  // identical deterministic play always ties

  const CommonDuelPolicy cl = ClassicalSecretary(20);
  const SimulationResult vs = SimulateCommonDuel(eq, cl, 20, 20000, rng);
  const SimulationResult back = SimulateCommonDuel(cl, eq, 20, 20000, rng);
  CHECK(std::abs(vs.mean + back.mean - 1.0) < 1e-12);  // same orders, mirrored scores
  CHECK(vs.mean > 0.5);
  CHECK(vs.ci99 > 0.0);
  CHECK(SimulateCommonDuel(eq, cl, 20, 100, rng).mean ==
        SimulateCommonDuel(eq, cl, 20, 100, rng).mean);
}

TEST_CASE("exact common payoff agrees with permutation enumeration") {
  CounterRng rng(17);
  for (int n = 1; n <= 7; ++n) {
    const CommonDuelPolicy eq = CommonEquilibrium(n);
    CHECK(CommonDuelExactPayoff(eq, eq, n) == Rational(1, 2));
    for (int sample = 0; sample < 6; ++sample) {
      std::vector<int> t(n);
      for (int i = 1; i <= n; ++i) t[i - 1] = static_cast<int>(rng.UniformInt(i + 1));
      const CommonDuelPolicy dev = ThresholdPolicy(t);
      CHECK(CommonDuelExactPayoff(dev, eq, n) == CommonDuelEnumeratedPayoff(dev, eq, n));
      CHECK(CommonDuelExactPayoff(eq, dev, n) == CommonDuelEnumeratedPayoff(eq, dev, n));
    }
  }
}

TEST_CASE("no threshold deviation beats the equilibrium") {
  for (int n = 1; n <= 7; ++n) {
    const DeviationScan scan = ScanThresholdDeviations(n);
    long expected = 1;
    for (int k = 2; k <= n + 1; ++k) expected *= k;
    CHECK(scan.deviations == expected);
    CHECK(scan.best_payoff == Rational(1, 2));
    CHECK(CommonDuelExactPayoff(ThresholdPolicy(scan.best_thresholds), CommonEquilibrium(n), n) ==
          scan.best_payoff);
  }
}

TEST_CASE("policy and flow are inverse") {
  HiringPolicy now = HiringPolicy::Never(4);
  now.pi[0][0] = 1.0;
  const HiringFlow<double> f = PolicyToFlow(now);
  CHECK(f.p[0][0] == 1.0);
  for (int i = 2; i <= 4; ++i)
    for (double v : f.p[i - 1]) CHECK(v == 0.0);
  CHECK(FlowToPolicy(f).at(3, 2) == 0.0);  // unreachable round maps to zero

  CounterRng rng(3);
  HiringPolicy pi = HiringPolicy::Never(5);
  for (auto& row : pi.pi)
    for (double& v : row) v = rng.Uniform(0.05, 0.6);
  const HiringFlow<double> flow = PolicyToFlow(pi);
  CHECK(flow.Violation() < 1e-12);
  const HiringPolicy back = FlowToPolicy(flow);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= i; ++j) CHECK(std::abs(back.at(i, j) - pi.at(i, j)) < 1e-9);
  const HiringFlow<double> again = PolicyToFlow(back);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= i; ++j) CHECK(std::abs(again.p[i - 1][j - 1] - flow.p[i - 1][j - 1]) < 1e-9);

  const PolicySimulation sim = SimulatePolicy(pi, 5, 1000000, CounterRng(9));
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= i; ++j) CHECK(std::abs(sim.p[i - 1][j - 1] - flow.p[i - 1][j - 1]) < 0.005);
  CHECK(std::abs(sim.no_hire - flow.q[5]) < 0.005);

  HiringFlow<double> bad = flow;
  bad.p[1][0] = flow.q[1];  // exceeds q_2 / 2
  CHECK_THROWS_AS(FlowToPolicy(bad), DomainError);
}

TEST_CASE("never-hire policy") {
  const PolicySimulation sim = SimulatePolicy(HiringPolicy::Never(6), 6, 1000, CounterRng(1));
  CHECK(sim.no_hire == 1.0);
  CHECK(sim.ToCsv().rfind("kind,i,j,value\n", 0) == 0);
}

}  // namespace
}  // namespace hiring
}  // namespace dueling
