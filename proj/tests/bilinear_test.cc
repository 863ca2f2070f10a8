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


#include "dueling/bilinear.h"

#include "doctest.h"
#include "dueling/core.h"
#include "dueling/errors.h"
#include "dueling/rng.h"

namespace dueling {
namespace {

template <typename S>
BilinearDuel<S> SimplexDuel(const Matrix<S>& m) {
  BilinearDuel<S> d;
  d.K = Polytope<S>::Simplex(m.rows());
  d.Kprime = Polytope<S>::Simplex(m.cols());
  d.M = m;
  return d;
}

TEST_CASE("maximize over a polytope") {
  Polytope<Rational> box(1);
  box.AddNonNegativity();
  box.AddInequality({Rational(-1)}, Rational(-1));
  CHECK(MaximizeOver(box, {Rational(1)}).value == 1);
  CHECK(MaximizeOver(Polytope<Rational>::Simplex(3), {1, 1, 0}).value == 1);

  Polytope<Rational> empty(1);
  empty.AddInequality({Rational(1)}, Rational(2));
  empty.AddInequality({Rational(-1)}, Rational(-1));
  CHECK_THROWS_AS(empty.CheckNonempty(), InfeasibleError);
}

TEST_CASE("matching pennies") {
  Matrix<Rational> m(2, 2);
  m(0, 0) = m(1, 1) = 1;
  auto duel = SimplexDuel(m);
  auto eq = SolveBilinearDuel(duel);
  CHECK(eq.player1.value == Rational(1, 2));
  CHECK(eq.player2.value == Rational(1, 2));
  CHECK(VerifyMinmax(eq.player1.x, duel, eq.player1.value).ok);
  // A pure strategy is countered by the opposite vertex.
  auto v = VerifyMinmax(std::vector<Rational>{1, 0}, duel, Rational(1, 2));
  CHECK_FALSE(v.ok);
  CHECK(v.worst_value == 0);
  CHECK(v.worst_response == std::vector<Rational>{0, 1});
  CHECK_THROWS_AS(VerifyMinmax(std::vector<Rational>{1, 1}, duel, Rational(0)), DomainError);
}

TEST_CASE("agrees with the matrix-game oracle and reconstructs the dual") {
  CounterRng rng(17);
  for (int t = 0; t < 25; ++t) {
    const int r = 1 + static_cast<int>(rng.UniformInt(5));
    const int c = 1 + static_cast<int>(rng.UniformInt(5));
    Matrix<double> m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = rng.Uniform();
    auto duel = SimplexDuel(m);
    auto eq = SolveBilinearDuel(duel);
    auto oracle = SolveMatrixGame(m);
    CHECK(eq.player1.value == doctest::Approx(oracle.value).epsilon(1e-9));
    // Constant-sum: the two values add to one.
    CHECK(eq.player1.value + eq.player2.value == doctest::Approx(1.0).epsilon(1e-9));
    // x^T M = sum lambda_k w'_k + sum mu_k e'_k.
    auto row = LeftMultiply(eq.player1.x, m);
    for (int j = 0; j < c; ++j) {
      double rhs = 0;
      for (size_t k = 0; k < duel.Kprime.ineq.size(); ++k)
        rhs += eq.player1.lambda[k] * duel.Kprime.ineq[k].w[j];
      for (size_t k = 0; k < duel.Kprime.eq.size(); ++k)
        rhs += eq.player1.mu[k] * duel.Kprime.eq[k].w[j];
      CHECK(row[j] == doctest::Approx(rhs).epsilon(1e-8));
    }
    for (double l : eq.player1.lambda) CHECK(l >= -1e-12);
    CHECK(VerifyMinmax(eq.player1.x, duel, eq.player1.value).ok);
    CHECK(VerifyMinmax(eq.player2.x, duel.PlayerTwoView(), eq.player2.value).ok);
  }
}

TEST_CASE("exact rational solve of a 4x4 game") {
  CounterRng rng(23);
  Matrix<Rational> m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = Rational(int(rng.UniformInt(9)), 8);
  auto eq = SolveBilinearDuel(SimplexDuel(m));
  CHECK(eq.player1.value == SolveMatrixGame(m).value);
  CHECK(eq.player1.value + eq.player2.value == 1);
}

}  // namespace
}  // namespace dueling
