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


#include "dueling/core.h"

#include <cmath>

#include "dueling/errors.h"

namespace dueling {

std::string ToString(TieRule rule) {
  return rule == TieRule::kSymmetricHalf ? "symmetric-half" : "player1-wins";
}

TieRule TieRuleFromString(const std::string& name) {
  if (name == "symmetric-half") return TieRule::kSymmetricHalf;
  if (name == "player1-wins") return TieRule::kPlayerOneWins;
  throw DomainError("unknown tie rule: " + name);
}

template <typename S>
DiscreteDistribution<S> DiscreteDistribution<S>::FromProbs(std::vector<S> probs) {
  DiscreteDistribution d;
  for (size_t i = 0; i < probs.size(); ++i) d.outcomes.push_back("w" + std::to_string(i + 1));
  d.probs = std::move(probs);
  return d;
}

template <typename S>
DiscreteDistribution<S> DiscreteDistribution<S>::Uniform(int n) {
  if (n < 1) throw DomainError("distribution needs at least one outcome");
  return FromProbs(std::vector<S>(n, S(1) / S(n)));
}

template <typename S>
void DiscreteDistribution<S>::Validate() const {
  if (probs.empty()) throw DomainError("distribution has no outcomes");
  if (!outcomes.empty() && outcomes.size() != probs.size())
    throw DimensionError("outcome labels and probabilities differ in length");
  S total(0);
  for (const S& p : probs) {
    if (!ScalarTraits<S>::IsFinite(p) || p < 0)
      throw DomainError("probabilities must be finite and nonnegative");
    total += p;
  }
  if constexpr (ScalarTraits<S>::kExact) {
    if (total != 1) throw DomainError("probabilities sum to " + FormatRational(total));
  } else {
    if (std::abs(total - 1.0) > 1e-12)
      throw DomainError("probabilities sum to " + std::to_string(total));
  }
}

template <typename S>
S Payoff(const std::vector<Cost<S>>& costs1, const std::vector<Cost<S>>& costs2,
         const DiscreteDistribution<S>& dist, TieRule tie) {
  if (static_cast<int>(costs1.size()) != dist.size() ||
      static_cast<int>(costs2.size()) != dist.size())
    throw DimensionError("cost vectors must have one entry per outcome");
  const S tie_value = tie == TieRule::kSymmetricHalf ? Half<S>() : S(1);
  S total(0);
  for (int w = 0; w < dist.size(); ++w) {
    if (costs1[w] < costs2[w]) {
      total += dist.probs[w];
    } else if (costs1[w] == costs2[w]) {
      total += tie_value * dist.probs[w];
    }
  }
  return total;
}

template <typename S>
FiniteDuel<S> FiniteDuel<S>::Symmetric(std::vector<std::string> strategies,
                                       std::vector<std::vector<Cost<S>>> costs,
                                       DiscreteDistribution<S> dist, TieRule tie) {
  FiniteDuel duel;
  duel.strategies1 = strategies;
  duel.strategies2 = std::move(strategies);
  duel.costs1 = costs;
  duel.costs2 = std::move(costs);
  duel.dist = std::move(dist);
  duel.tie = tie;
  return duel;
}

template <typename S>
void FiniteDuel<S>::Validate() const {
  dist.Validate();
  if (costs1.size() != strategies1.size() || costs2.size() != strategies2.size())
    throw DimensionError("cost table must have one row per strategy");
  for (const auto* table : {&costs1, &costs2})
    for (const auto& row : *table)
      if (static_cast<int>(row.size()) != dist.size())
        throw DimensionError("cost row must have one entry per outcome");
}

template <typename S>
Matrix<S> DuelToMatrix(const FiniteDuel<S>& duel, long cap) {
  duel.Validate();
  const long entries =
      static_cast<long>(duel.costs1.size()) * static_cast<long>(duel.costs2.size());
  if (entries > cap)
    throw SizeError("payoff matrix would have " + std::to_string(entries) +
                    " entries, cap is " + std::to_string(cap));
  const int rows = static_cast<int>(duel.costs1.size());
  const int cols = static_cast<int>(duel.costs2.size());
  Matrix<S> m(rows, cols);
  for (int a = 0; a < rows; ++a)
    for (int b = 0; b < cols; ++b)
      m(a, b) = Payoff(duel.costs1[a], duel.costs2[b], duel.dist, duel.tie);
  return m;
}

template <typename S>
MatrixGameSolution<S> SolveMatrixGame(const Matrix<S>& payoff,
                                      const SimplexOptions& options) {
  const int rows = payoff.rows(), cols = payoff.cols();
  if (rows == 0 || cols == 0) throw DimensionError("empty payoff matrix");
  for (const S& v : payoff.data())
    if (!ScalarTraits<S>::IsFinite(v) || v < 0 || v > 1)
      throw DomainError("payoff entries must be finite and lie in [0, 1]");

  MatrixGameSolution<S> solution;
  {
    // max v  s.t.  sum_a x_a M(a, b) >= v for every b, x in the simplex.
    LinearProgram<S> lp(rows);
    const int v = lp.AddVariable(VarKind::kFree, S(1));
    for (int b = 0; b < cols; ++b) {
      LinearConstraint<S> c;
      for (int a = 0; a < rows; ++a)
        if (payoff(a, b) != 0) c.Add(a, payoff(a, b));
      c.Add(v, S(-1));
      c.sense = Sense::kGreaterEqual;
      lp.constraints.push_back(std::move(c));
    }
    LinearConstraint<S> simplex;
    for (int a = 0; a < rows; ++a) simplex.Add(a, S(1));
    simplex.sense = Sense::kEqual;
    simplex.rhs = S(1);
    lp.constraints.push_back(std::move(simplex));
    auto result = SolveLpOrThrow(lp, options);
    solution.value = result.value;
    solution.mixed1.assign(result.x.begin(), result.x.begin() + rows);
  }
  {
    // max -w  s.t.  sum_b M(a, b) y_b <= w for every a, y in the simplex.
    LinearProgram<S> lp(cols);
    const int w = lp.AddVariable(VarKind::kFree, S(-1));
    for (int a = 0; a < rows; ++a) {
      LinearConstraint<S> c;
      for (int b = 0; b < cols; ++b)
        if (payoff(a, b) != 0) c.Add(b, payoff(a, b));
      c.Add(w, S(-1));
      c.sense = Sense::kLessEqual;
      lp.constraints.push_back(std::move(c));
    }
    LinearConstraint<S> simplex;
    for (int b = 0; b < cols; ++b) simplex.Add(b, S(1));
    simplex.sense = Sense::kEqual;
    simplex.rhs = S(1);
    lp.constraints.push_back(std::move(simplex));
    auto result = SolveLpOrThrow(lp, options);
    solution.mixed2.assign(result.x.begin(), result.x.begin() + cols);
  }
  return solution;
}

MatrixGameSolution<double> SolveMatrixGameAuto(const Matrix<double>& payoff) {
  const long entries = static_cast<long>(payoff.rows()) * payoff.cols();
  if (entries > kExactMatrixEntries)
    return SolveMatrixGame(payoff, {.rule = PivotRule::kDantzigThenBland});
  Matrix<Rational> exact(payoff.rows(), payoff.cols());
  for (int a = 0; a < payoff.rows(); ++a)
    for (int b = 0; b < payoff.cols(); ++b) exact(a, b) = Rational(payoff(a, b));
  auto s = SolveMatrixGame(exact, {.rule = PivotRule::kDantzigThenBland});
  return {ToDouble(s.value), ToDoubles(s.mixed1), ToDoubles(s.mixed2)};
}

template <typename S>
void ValidateMixed(const std::vector<S>& v, const char* what) {
  S total(0);
  for (const S& x : v) {
    if (!ScalarTraits<S>::IsFinite(x) || x < -ScalarTraits<S>::Tolerance(1e-12))
      throw DomainError(std::string(what) + ": negative or non-finite weight");
    total += x;
  }
  const S slack = ScalarTraits<S>::Tolerance(1e-9);
  if (total - 1 > slack || 1 - total > slack)
    throw DomainError(std::string(what) + ": weights do not sum to one");
}

template <typename S>
S BeatabilityOf(const std::vector<S>& mixed, const Matrix<S>& payoff, int* best_response) {
  if (static_cast<int>(mixed.size()) != payoff.rows())
    throw DimensionError("mixed strategy length must match the matrix rows");
  ValidateMixed(mixed, "algorithm output");
  S best(0);
  int arg = -1;
  for (int b = 0; b < payoff.cols(); ++b) {
    S value(0);
    for (int a = 0; a < payoff.rows(); ++a)
      if (mixed[a] != 0) value += mixed[a] * (S(1) - payoff(a, b));
    if (arg < 0 || value > best) {
      best = value;
      arg = b;
    }
  }
  if (best_response) *best_response = arg;
  return best;
}

template <typename S>
S BeatabilityOf(const std::vector<S>& mixed, const FiniteDuel<S>& duel) {
  return BeatabilityOf(mixed, DuelToMatrix(duel));
}

#define DUELING_INSTANTIATE_CORE(S)                                                  \
  template struct DiscreteDistribution<S>;                                           \
  template struct FiniteDuel<S>;                                                     \
  template S Payoff(const std::vector<Cost<S>>&, const std::vector<Cost<S>>&,        \
                    const DiscreteDistribution<S>&, TieRule);                        \
  template Matrix<S> DuelToMatrix(const FiniteDuel<S>&, long);                       \
  template MatrixGameSolution<S> SolveMatrixGame(const Matrix<S>&,                   \
                                                 const SimplexOptions&);             \
  template void ValidateMixed(const std::vector<S>&, const char*);                   \
  template S BeatabilityOf(const std::vector<S>&, const Matrix<S>&, int*);           \
  template S BeatabilityOf(const std::vector<S>&, const FiniteDuel<S>&);

DUELING_INSTANTIATE_CORE(double)
DUELING_INSTANTIATE_CORE(Rational)

}  // namespace dueling
