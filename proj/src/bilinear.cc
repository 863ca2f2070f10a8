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

#include "dueling/errors.h"

namespace dueling {
namespace {

// Index of the single positive coefficient of a "w_c x_c >= 0" halfspace,
// or -1.
template <typename S>
int UnitNonNegativeCoordinate(const Halfspace<S>& h) {
  if (h.b != 0) return -1;
  int found = -1;
  for (int c = 0; c < static_cast<int>(h.w.size()); ++c) {
    if (h.w[c] == 0) continue;
    if (found >= 0 || h.w[c] < 0) return -1;
    found = c;
  }
  return found;
}

template <typename S>
LinearConstraint<S> ToConstraint(const Halfspace<S>& h, int offset, Sense sense) {
  LinearConstraint<S> c;
  for (int i = 0; i < static_cast<int>(h.w.size()); ++i)
    if (h.w[i] != 0) c.Add(offset + i, h.w[i]);
  c.sense = sense;
  c.rhs = h.b;
  return c;
}

// For each coordinate, the first inequality that is a unit nonnegativity
// constraint on it (-1 if none).
template <typename S>
std::vector<int> NonNegativityRows(const Polytope<S>& p) {
  std::vector<int> row(p.dim, -1);
  for (int k = 0; k < static_cast<int>(p.ineq.size()); ++k) {
    int c = UnitNonNegativeCoordinate(p.ineq[k]);
    if (c >= 0 && row[c] < 0) row[c] = k;
  }
  return row;
}

}  // namespace

template <typename S>
Polytope<S> Polytope<S>::Simplex(int dim) {
  Polytope p(dim);
  p.AddNonNegativity();
  p.AddEquality(std::vector<S>(dim, S(1)), S(1));
  return p;
}

template <typename S>
void Polytope<S>::AddInequality(std::vector<S> w, S b) {
  if (static_cast<int>(w.size()) != dim) throw DimensionError("halfspace dimension mismatch");
  ineq.push_back({std::move(w), std::move(b)});
}

template <typename S>
void Polytope<S>::AddEquality(std::vector<S> w, S b) {
  if (static_cast<int>(w.size()) != dim) throw DimensionError("equality dimension mismatch");
  eq.push_back({std::move(w), std::move(b)});
}

template <typename S>
void Polytope<S>::AddNonNegativity() {
  for (int i = 0; i < dim; ++i) {
    std::vector<S> w(dim, S(0));
    w[i] = S(1);
    AddInequality(std::move(w), S(0));
  }
}

template <typename S>
S Polytope<S>::Violation(const std::vector<S>& x) const {
  if (static_cast<int>(x.size()) != dim) throw DimensionError("point dimension mismatch");
  S worst(0);
  auto lhs = [&](const Halfspace<S>& h) {
    S v(0);
    for (int i = 0; i < dim; ++i)
      if (h.w[i] != 0) v += h.w[i] * x[i];
    return v;
  };
  for (const auto& h : ineq) {
    S gap = h.b - lhs(h);
    if (gap > worst) worst = gap;
  }
  for (const auto& h : eq) {
    S gap = h.b - lhs(h);
    if (gap < 0) gap = -gap;
    if (gap > worst) worst = gap;
  }
  return worst;
}

template <typename S>
bool Polytope<S>::Contains(const std::vector<S>& x, double tol) const {
  return !(Violation(x) > ScalarTraits<S>::Tolerance(tol));
}

template <typename S>
void Polytope<S>::AppendTo(LinearProgram<S>& lp, int offset) const {
  std::vector<int> nonneg = NonNegativityRows(*this);
  std::vector<bool> skip(ineq.size(), false);
  for (int c = 0; c < dim; ++c) {
    if (nonneg[c] >= 0) {
      lp.kinds[offset + c] = VarKind::kNonNegative;
      skip[nonneg[c]] = true;
    } else {
      lp.kinds[offset + c] = VarKind::kFree;
    }
  }
  for (size_t k = 0; k < ineq.size(); ++k)
    if (!skip[k]) lp.constraints.push_back(ToConstraint(ineq[k], offset, Sense::kGreaterEqual));
  for (const auto& h : eq) lp.constraints.push_back(ToConstraint(h, offset, Sense::kEqual));
}

template <typename S>
LinearProgram<S> Polytope<S>::ToLinearProgram() const {
  LinearProgram<S> lp(dim);
  AppendTo(lp, 0);
  return lp;
}

template <typename S>
void Polytope<S>::CheckNonempty(const SimplexOptions& options) const {
  LinearProgram<S> lp = ToLinearProgram();
  auto r = SolveLp(lp, options);
  if (r.status == LpStatus::kInfeasible)
    throw InfeasibleError("strategy polytope is empty (phase-one residual " +
                          std::to_string(ToDouble(r.infeasibility)) + ")");
}

template <typename S>
LpResult<S> MaximizeOver(const Polytope<S>& polytope, const std::vector<S>& objective,
                         const SimplexOptions& options) {
  if (static_cast<int>(objective.size()) != polytope.dim)
    throw DimensionError("objective dimension mismatch");
  LinearProgram<S> lp = polytope.ToLinearProgram();
  lp.objective = objective;
  return SolveLpOrThrow(lp, options);
}

template <typename S>
void BilinearDuel<S>::Validate() const {
  if (M.rows() != K.dim || M.cols() != Kprime.dim)
    throw DimensionError("payoff matrix shape must be dim(K) x dim(K')");
  if (payoff2 && (payoff2->rows() != Kprime.dim || payoff2->cols() != K.dim))
    throw DimensionError("player-two payoff matrix shape must be dim(K') x dim(K)");
}

template <typename S>
BilinearDuel<S> BilinearDuel<S>::PlayerTwoView() const {
  BilinearDuel view;
  view.K = Kprime;
  view.Kprime = K;
  view.bound = bound;
  if (payoff2) {
    view.M = *payoff2;
    view.payoff2 = M;
  } else {
    // 1 - (x^T M x' + offset) = x'^T (-M^T) x + (1 - offset).
    view.M = M.Transposed();
    for (int r = 0; r < view.M.rows(); ++r)
      for (int c = 0; c < view.M.cols(); ++c) view.M(r, c) = -view.M(r, c);
    view.offset = S(1) - offset;
  }
  return view;
}

template <typename S>
MinmaxSolution<S> MinmaxBilinear(const Polytope<S>& K, const Polytope<S>& Kprime,
                                 const Matrix<S>& M, const SimplexOptions& options) {
  if (M.rows() != K.dim || M.cols() != Kprime.dim)
    throw DimensionError("payoff matrix shape must be dim(K) x dim(K')");
  K.CheckNonempty(options);
  Kprime.CheckNonempty(options);

  const int n = K.dim, np = Kprime.dim;
  const int num_ineq = static_cast<int>(Kprime.ineq.size());
  const int num_eq = static_cast<int>(Kprime.eq.size());
  LinearProgram<S> lp(n);
  K.AppendTo(lp, 0);

  // A unit nonnegativity inequality on coordinate c of K' contributes only
  // to column c, so its multiplier is the slack of that column's row and
  // need not be a variable.
  std::vector<int> absorbed = NonNegativityRows(Kprime);
  std::vector<bool> is_absorbed(num_ineq, false);
  for (int c = 0; c < np; ++c)
    if (absorbed[c] >= 0) is_absorbed[absorbed[c]] = true;
  std::vector<int> lambda_var(num_ineq, -1), mu_var(num_eq);
  for (int k = 0; k < num_ineq; ++k)
    if (!is_absorbed[k]) lambda_var[k] = lp.AddVariable(VarKind::kNonNegative, Kprime.ineq[k].b);
  for (int k = 0; k < num_eq; ++k) mu_var[k] = lp.AddVariable(VarKind::kFree, Kprime.eq[k].b);

  const int first_column_row = static_cast<int>(lp.constraints.size());
  for (int c = 0; c < np; ++c) {
    LinearConstraint<S> row;
    for (int i = 0; i < n; ++i)
      if (M(i, c) != 0) row.Add(i, M(i, c));
    for (int k = 0; k < num_ineq; ++k)
      if (lambda_var[k] >= 0 && Kprime.ineq[k].w[c] != 0)
        row.Add(lambda_var[k], -Kprime.ineq[k].w[c]);
    for (int k = 0; k < num_eq; ++k)
      if (Kprime.eq[k].w[c] != 0) row.Add(mu_var[k], -Kprime.eq[k].w[c]);
    row.sense = absorbed[c] >= 0 ? Sense::kGreaterEqual : Sense::kEqual;
    lp.constraints.push_back(std::move(row));
  }

  auto result = SolveLpOrThrow(lp, options);
  MinmaxSolution<S> solution;
  solution.value = result.value;
  solution.x.assign(result.x.begin(), result.x.begin() + n);
  solution.lambda.assign(num_ineq, S(0));
  solution.mu.assign(num_eq, S(0));
  for (int k = 0; k < num_eq; ++k) solution.mu[k] = result.x[mu_var[k]];
  for (int k = 0; k < num_ineq; ++k)
    if (lambda_var[k] >= 0) solution.lambda[k] = result.x[lambda_var[k]];
  for (int c = 0; c < np; ++c) {
    if (absorbed[c] < 0) continue;
    const auto& row = lp.constraints[first_column_row + c];
    S slack(0);
    for (size_t t = 0; t < row.index.size(); ++t) slack += row.coeffs[t] * result.x[row.index[t]];
    if (slack < 0) slack = S(0);
    solution.lambda[absorbed[c]] = slack / Kprime.ineq[absorbed[c]].w[c];
  }
  return solution;
}

template <typename S>
BilinearEquilibrium<S> SolveBilinearDuel(const BilinearDuel<S>& duel,
                                         const SimplexOptions& options) {
  duel.Validate();
  BilinearEquilibrium<S> eq;
  eq.player1 = MinmaxBilinear(duel.K, duel.Kprime, duel.M, options);
  eq.player1.value += duel.offset;
  BilinearDuel<S> view = duel.PlayerTwoView();
  eq.player2 = MinmaxBilinear(view.K, view.Kprime, view.M, options);
  eq.player2.value += view.offset;
  return eq;
}

template <typename S>
Verification<S> VerifyMinmax(const std::vector<S>& x, const BilinearDuel<S>& duel,
                             const S& claimed, const SimplexOptions& options) {
  duel.Validate();
  if (!duel.K.Contains(x, 1e-7))
    throw DomainError("strategy violates its polytope by " +
                      std::to_string(ToDouble(duel.K.Violation(x))));
  std::vector<S> row = LeftMultiply(x, duel.M);
  for (S& v : row) v = -v;
  auto r = MaximizeOver(duel.Kprime, row, options);
  Verification<S> out;
  out.worst_value = -r.value + duel.offset;
  out.worst_response = r.x;
  out.margin = out.worst_value - claimed;
  out.ok = !(out.margin < -S(kVerifyTolerance));
  return out;
}

template <typename S>
std::vector<S> LeftMultiply(const std::vector<S>& x, const Matrix<S>& M) {
  if (static_cast<int>(x.size()) != M.rows()) throw DimensionError("x^T M shape mismatch");
  std::vector<S> out(M.cols(), S(0));
  for (int r = 0; r < M.rows(); ++r) {
    if (x[r] == 0) continue;
    for (int c = 0; c < M.cols(); ++c)
      if (M(r, c) != 0) out[c] += x[r] * M(r, c);
  }
  return out;
}

template <typename S>
std::vector<S> RightMultiply(const Matrix<S>& M, const std::vector<S>& y) {
  if (static_cast<int>(y.size()) != M.cols()) throw DimensionError("M y shape mismatch");
  std::vector<S> out(M.rows(), S(0));
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c)
      if (M(r, c) != 0 && y[c] != 0) out[r] += M(r, c) * y[c];
  return out;
}

template <typename S>
S BilinearValue(const std::vector<S>& x, const Matrix<S>& M, const std::vector<S>& y) {
  std::vector<S> row = LeftMultiply(x, M);
  if (row.size() != y.size()) throw DimensionError("x^T M y shape mismatch");
  S total(0);
  for (size_t c = 0; c < y.size(); ++c) total += row[c] * y[c];
  return total;
}

#define DUELING_INSTANTIATE_BILINEAR(S)                                                   \
  template struct Polytope<S>;                                                            \
  template struct BilinearDuel<S>;                                                        \
  template LpResult<S> MaximizeOver(const Polytope<S>&, const std::vector<S>&,            \
                                    const SimplexOptions&);                               \
  template MinmaxSolution<S> MinmaxBilinear(const Polytope<S>&, const Polytope<S>&,       \
                                            const Matrix<S>&, const SimplexOptions&);     \
  template BilinearEquilibrium<S> SolveBilinearDuel(const BilinearDuel<S>&,               \
                                                    const SimplexOptions&);               \
  template Verification<S> VerifyMinmax(const std::vector<S>&, const BilinearDuel<S>&,    \
                                        const S&, const SimplexOptions&);                 \
  template std::vector<S> LeftMultiply(const std::vector<S>&, const Matrix<S>&);          \
  template std::vector<S> RightMultiply(const Matrix<S>&, const std::vector<S>&);         \
  template S BilinearValue(const std::vector<S>&, const Matrix<S>&, const std::vector<S>&);

DUELING_INSTANTIATE_BILINEAR(double)
DUELING_INSTANTIATE_BILINEAR(Rational)

}  // namespace dueling
