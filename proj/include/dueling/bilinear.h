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


#ifndef DUELING_BILINEAR_H_
#define DUELING_BILINEAR_H_

#include <optional>
#include <vector>

#include "dueling/lp.h"
#include "dueling/scalar.h"

namespace dueling {

// w . x >= b (or = b when stored among a polytope's equalities).
template <typename S>
struct Halfspace {
  std::vector<S> w;
  S b = S(0);
};

template <typename S>
struct Polytope {
  int dim = 0;
  std::vector<Halfspace<S>> ineq;
  std::vector<Halfspace<S>> eq;
  // Declared coordinate bound: the polytope lies in [0, bound]^dim.
  double bound = 1.0;

  explicit Polytope(int d = 0) : dim(d) {}

  // Probability simplex {x >= 0, sum x = 1}.
  static Polytope Simplex(int dim);

  void AddInequality(std::vector<S> w, S b);
  void AddEquality(std::vector<S> w, S b);
  // x_i >= 0 for every coordinate.
  void AddNonNegativity();

  int num_constraints() const { return static_cast<int>(ineq.size() + eq.size()); }

  // Maximum violation of any constraint at x (zero when feasible).
  S Violation(const std::vector<S>& x) const;
  bool Contains(const std::vector<S>& x, double tol = 1e-9) const;

  // Appends the constraints on variables [offset, offset + dim) to an LP.
  void AppendTo(LinearProgram<S>& lp, int offset) const;
  // LP with one variable per coordinate and every constraint of the
  // polytope. Coordinates that carry a unit nonnegativity halfspace become
  // nonnegative variables and the halfspace itself is dropped.
  LinearProgram<S> ToLinearProgram() const;

  // Throws InfeasibleError when the polytope is empty.
  void CheckNonempty(const SimplexOptions& options = {}) const;
};

// maximize objective . x over the polytope.
template <typename S>
LpResult<S> MaximizeOver(const Polytope<S>& polytope, const std::vector<S>& objective,
                         const SimplexOptions& options = {});

// Player one picks x in K, player two x' in K', player one receives
// x^T M x' + offset. Player two receives x'^T payoff2 x when `payoff2` is
// set; otherwise the duel is constant-sum and player two receives one minus
// player one's payoff.
template <typename S>
struct BilinearDuel {
  Polytope<S> K;
  Polytope<S> Kprime;
  Matrix<S> M;
  std::optional<Matrix<S>> payoff2;
  S offset = S(0);
  double bound = 1.0;

  void Validate() const;
  // The same game with the roles swapped, so player two's strategies can be
  // solved and verified with the player-one routines.
  BilinearDuel PlayerTwoView() const;
};

template <typename S>
struct MinmaxSolution {
  S value = S(0);
  std::vector<S> x;
  // Multipliers of Kprime's inequalities (>= 0) and equalities (free).
  std::vector<S> lambda;
  std::vector<S> mu;
};

// max_{x in K} min_{x' in K'} x^T M x' through the dual-multiplier LP:
// maximize sum lambda_k b'_k + sum mu_k e'_k subject to x in K and
// x^T M = sum lambda_k w'_k + sum mu_k e'_k, lambda >= 0.
template <typename S>
MinmaxSolution<S> MinmaxBilinear(const Polytope<S>& K, const Polytope<S>& Kprime,
                                 const Matrix<S>& M, const SimplexOptions& options = {});

template <typename S>
struct BilinearEquilibrium {
  MinmaxSolution<S> player1;
  // Player two's solution, with value expressed as player two's payoff.
  MinmaxSolution<S> player2;
};

template <typename S>
BilinearEquilibrium<S> SolveBilinearDuel(const BilinearDuel<S>& duel,
                                         const SimplexOptions& options = {});

template <typename S>
struct Verification {
  bool ok = false;
  // min_{x' in K'} x^T M x' and the minimizing x'.
  S worst_value = S(0);
  std::vector<S> worst_response;
  S margin = S(0);  // worst_value - claimed
};

inline constexpr double kVerifyTolerance = 1e-6;

// Checks that x guarantees `claimed` against every x' in K' by solving the
// opponent's response LP. Throws DomainError when x is not in K.
template <typename S>
Verification<S> VerifyMinmax(const std::vector<S>& x, const BilinearDuel<S>& duel,
                             const S& claimed, const SimplexOptions& options = {});

// x^T M y.
template <typename S>
S BilinearValue(const std::vector<S>& x, const Matrix<S>& M, const std::vector<S>& y);

// x^T M as a row vector, and M y as a column vector.
template <typename S>
std::vector<S> LeftMultiply(const std::vector<S>& x, const Matrix<S>& M);
template <typename S>
std::vector<S> RightMultiply(const Matrix<S>& M, const std::vector<S>& y);

}  // namespace dueling

#endif  // DUELING_BILINEAR_H_
