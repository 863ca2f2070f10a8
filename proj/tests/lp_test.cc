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


#include "dueling/lp.h"

#include "doctest.h"
#include "dueling/errors.h"
#include "dueling/rng.h"

namespace dueling {
namespace {

template <typename S>
LinearConstraint<S> Row(std::vector<S> coeffs, Sense sense, S rhs) {
  LinearConstraint<S> c;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
    if (coeffs[i] != 0) c.Add(i, coeffs[i]);
  c.sense = sense;
  c.rhs = rhs;
  return c;
}

TEST_CASE("unit interval") {
  LinearProgram<double> lp(1);
  lp.objective = {1.0};
  lp.constraints.push_back(Row<double>({1.0}, Sense::kLessEqual, 1.0));
  auto r = SolveLp(lp);
  CHECK(r.status == LpStatus::kOptimal);
  CHECK(r.value == doctest::Approx(1.0));
}

TEST_CASE("simplex objective") {
  LinearProgram<Rational> lp(3);
  lp.objective = {1, 1, 0};
  lp.constraints.push_back(Row<Rational>({1, 1, 1}, Sense::kEqual, 1));
  auto r = SolveLp(lp);
  CHECK(r.status == LpStatus::kOptimal);
  CHECK(r.value == 1);
}

TEST_CASE("infeasible and unbounded") {
  LinearProgram<Rational> lp(1);
  lp.constraints.push_back(Row<Rational>({1}, Sense::kGreaterEqual, 2));
  lp.constraints.push_back(Row<Rational>({1}, Sense::kLessEqual, 1));
  auto r = SolveLp(lp);
  CHECK(r.status == LpStatus::kInfeasible);
  CHECK(r.infeasibility == 1);
  CHECK_THROWS_AS(SolveLpOrThrow(lp), InfeasibleError);

  LinearProgram<double> ub(2);
  ub.objective = {0.0, 1.0};
  ub.constraints.push_back(Row<double>({1.0, -1.0}, Sense::kLessEqual, 1.0));
  auto u = SolveLp(ub);
  CHECK(u.status == LpStatus::kUnbounded);
  CHECK(u.unbounded_variable == 1);
}

TEST_CASE("free variable and redundant equality") {
  // max -y s.t. y >= x - 3, y >= 1 - x, x + z = 2, 2x + 2z = 4, y free.
  LinearProgram<Rational> lp(3);
  lp.kinds[1] = VarKind::kFree;
  lp.objective = {0, -1, 0};
  lp.constraints.push_back(Row<Rational>({-1, 1, 0}, Sense::kGreaterEqual, -3));
  lp.constraints.push_back(Row<Rational>({1, 1, 0}, Sense::kGreaterEqual, 1));
  lp.constraints.push_back(Row<Rational>({1, 0, 1}, Sense::kEqual, 2));
  lp.constraints.push_back(Row<Rational>({2, 0, 2}, Sense::kEqual, 4));
  auto r = SolveLp(lp);
  REQUIRE(r.status == LpStatus::kOptimal);
  // y >= max(x - 3, 1 - x) with x in [0, 2]; minimized at x = 2, y = -1.
  CHECK(r.value == 1);
  CHECK(r.x[1] == -1);
}

TEST_CASE("degenerate program that cycles under the textbook rule") {
  // Beale's example; the most-negative rule with lowest-index ties cycles.
  for (PivotRule rule : {PivotRule::kBland, PivotRule::kDantzigThenBland}) {
    LinearProgram<double> lp(4);
    lp.objective = {0.75, -20.0, 0.5, -6.0};
    lp.constraints.push_back(Row<double>({0.25, -8.0, -1.0, 9.0}, Sense::kLessEqual, 0.0));
    lp.constraints.push_back(Row<double>({0.5, -12.0, -0.5, 3.0}, Sense::kLessEqual, 0.0));
    lp.constraints.push_back(Row<double>({0.0, 0.0, 1.0, 0.0}, Sense::kLessEqual, 1.0));
    SimplexOptions options;
    options.rule = rule;
    const auto r = SolveLp(lp, options);
    REQUIRE(r.status == LpStatus::kOptimal);
    CHECK(r.value == doctest::Approx(1.25));
  }
}

// Random bounded LPs: double solve agrees with the exact rational solve.
TEST_CASE("double matches rational on random programs") {
  CounterRng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.UniformInt(5));
    const int m = 1 + static_cast<int>(rng.UniformInt(6));
    LinearProgram<Rational> q(n);
    for (int j = 0; j < n; ++j) q.objective[j] = Rational(int(rng.UniformInt(11)) - 5, 3);
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> w(n);
      for (int j = 0; j < n; ++j) w[j] = Rational(int(rng.UniformInt(9)) - 4);
      Sense s = static_cast<Sense>(rng.UniformInt(3));
      q.constraints.push_back(Row<Rational>(w, s, Rational(int(rng.UniformInt(7)) - 2)));
    }
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> w(n, 0);
      w[j] = 1;
      q.constraints.push_back(Row<Rational>(w, Sense::kLessEqual, 4));
    }
    LinearProgram<double> d(n);
    for (int j = 0; j < n; ++j) d.objective[j] = ToDouble(q.objective[j]);
    for (const auto& c : q.constraints) {
      LinearConstraint<double> dc;
      dc.index = c.index;
      for (const auto& v : c.coeffs) dc.coeffs.push_back(ToDouble(v));
      dc.sense = c.sense;
      dc.rhs = ToDouble(c.rhs);
      d.constraints.push_back(dc);
    }
    auto exact = SolveLp(q);
    auto approx = SolveLp(d, {.rule = PivotRule::kDantzigThenBland});
    CAPTURE(trial);
    REQUIRE(exact.status == approx.status);
    if (exact.status == LpStatus::kOptimal) {
      CHECK(approx.value == doctest::Approx(ToDouble(exact.value)).epsilon(1e-9));
      // Exact optimum is feasible.
      for (const auto& c : q.constraints) {
        Rational lhs = 0;
        for (size_t k = 0; k < c.index.size(); ++k) lhs += c.coeffs[k] * exact.x[c.index[k]];
        if (c.sense == Sense::kLessEqual) CHECK(lhs <= c.rhs);
        if (c.sense == Sense::kGreaterEqual) CHECK(lhs >= c.rhs);
        if (c.sense == Sense::kEqual) CHECK(lhs == c.rhs);
      }
    }
  }
}

}  // namespace
}  // namespace dueling
