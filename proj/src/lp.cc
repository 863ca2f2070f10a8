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

#include <cmath>
#include <limits>

#include "dueling/errors.h"

namespace dueling {

std::string ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

template <typename S>
S Abs(const S& x) {
  return x < 0 ? S(-x) : x;
}

// Tableau in canonical form for the columns [structural | slack | artificial].
template <typename S>
class Tableau {
 public:
  Tableau(const LinearProgram<S>& program, const SimplexOptions& options)
      : options_(options), tol_(ScalarTraits<S>::Tolerance(options.tolerance)) {
    const int n = program.num_vars();
    column_of_.resize(n);
    for (int v = 0; v < n; ++v) {
      column_of_[v] = num_structural_;
      num_structural_ += program.kinds[v] == VarKind::kFree ? 2 : 1;
    }
    const int m = static_cast<int>(program.constraints.size());
    int num_slack = 0, num_artificial = 0;
    std::vector<Sense> senses(m);
    std::vector<bool> flip(m);
    for (int i = 0; i < m; ++i) {
      const auto& con = program.constraints[i];
      if (con.index.size() != con.coeffs.size())
        throw DimensionError("constraint index/coefficient length mismatch");
      flip[i] = con.rhs < 0;
      Sense s = con.sense;
      if (flip[i] && s != Sense::kEqual)
        s = s == Sense::kLessEqual ? Sense::kGreaterEqual : Sense::kLessEqual;
      senses[i] = s;
      if (s != Sense::kEqual) ++num_slack;
      if (s != Sense::kLessEqual) ++num_artificial;
    }
    first_slack_ = num_structural_;
    first_artificial_ = first_slack_ + num_slack;
    num_cols_ = first_artificial_ + num_artificial;

    rows_.assign(m, std::vector<S>(num_cols_, S(0)));
    rhs_.assign(m, S(0));
    // Inexact scalars break ratio ties on a fixed positive perturbation of
    // the right-hand side, carried through every pivot. It keeps each basis
    // lexicographically feasible, so degenerate pivots cannot cycle under
    // rounding the way a tolerance-based Bland rule can.
    if constexpr (!ScalarTraits<S>::kExact) {
      perturbation_.resize(m);
      for (int i = 0; i < m; ++i) perturbation_[i] = 1.0 + std::fmod(0.6180339887498949 * (i + 1), 1.0);
    }
    basis_.assign(m, -1);
    int next_slack = first_slack_, next_artificial = first_artificial_;
    for (int i = 0; i < m; ++i) {
      const auto& con = program.constraints[i];
      const S sign = flip[i] ? S(-1) : S(1);
      auto& row = rows_[i];
      for (size_t k = 0; k < con.index.size(); ++k) {
        const int v = con.index[k];
        if (v < 0 || v >= n) throw DimensionError("constraint references unknown variable");
        const int c = column_of_[v];
        row[c] += sign * con.coeffs[k];
        if (program.kinds[v] == VarKind::kFree) row[c + 1] -= sign * con.coeffs[k];
      }
      rhs_[i] = sign * con.rhs;
      if (senses[i] == Sense::kLessEqual) {
        row[next_slack] = S(1);
        basis_[i] = next_slack++;
      } else {
        if (senses[i] == Sense::kGreaterEqual) row[next_slack++] = S(-1);
        row[next_artificial] = S(1);
        basis_[i] = next_artificial++;
      }
    }
    phase_two_costs_.assign(num_cols_, S(0));
    for (int v = 0; v < n; ++v) {
      phase_two_costs_[column_of_[v]] = program.objective[v];
      if (program.kinds[v] == VarKind::kFree)
        phase_two_costs_[column_of_[v] + 1] = -program.objective[v];
    }
    kinds_ = program.kinds;
  }

  LpResult<S> Solve() {
    LpResult<S> result;
    if (first_artificial_ < num_cols_) {
      std::vector<S> costs(num_cols_, S(0));
      for (int c = first_artificial_; c < num_cols_; ++c) costs[c] = S(-1);
      Price(costs);
      if (Iterate(/*allow_artificial=*/true) == LpStatus::kUnbounded)
        throw DuelError("phase one reported unbounded; tableau corrupted");
      result.infeasibility = -objective_value_;
      if (objective_value_ < -tol_ * 10) {
        result.status = LpStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      DriveOutArtificials();
    }
    Price(phase_two_costs_);
    result.status = Iterate(/*allow_artificial=*/false);
    result.pivots = pivots_;
    if (result.status == LpStatus::kUnbounded) {
      result.unbounded_variable = VariableOfColumn(unbounded_column_);
      return result;
    }
    result.value = objective_value_;
    std::vector<S> column_value(num_cols_, S(0));
    for (size_t i = 0; i < rows_.size(); ++i) column_value[basis_[i]] = rhs_[i];
    result.x.assign(kinds_.size(), S(0));
    for (size_t v = 0; v < kinds_.size(); ++v) {
      result.x[v] = column_value[column_of_[v]];
      if (kinds_[v] == VarKind::kFree) result.x[v] -= column_value[column_of_[v] + 1];
    }
    return result;
  }

 private:
  bool Positive(const S& x) const { return x > tol_; }
  bool Negative(const S& x) const { return x < -tol_; }

  int VariableOfColumn(int c) const {
    for (int v = static_cast<int>(column_of_.size()) - 1; v >= 0; --v)
      if (column_of_[v] <= c) return c < num_structural_ ? v : -1;
    return -1;
  }

  void Price(const std::vector<S>& costs) {
    costs_ = costs;
    reduced_.assign(num_cols_, S(0));
    for (int c = 0; c < num_cols_; ++c) reduced_[c] = -costs[c];
    objective_value_ = S(0);
    for (size_t i = 0; i < rows_.size(); ++i) {
      const S& cb = costs[basis_[i]];
      if (cb == 0) continue;
      for (int c = 0; c < num_cols_; ++c)
        if (rows_[i][c] != 0) reduced_[c] += cb * rows_[i][c];
      objective_value_ += cb * rhs_[i];
    }
  }

  LpStatus Iterate(bool allow_artificial) {
    const int limit = allow_artificial ? num_cols_ : first_artificial_;
    bool bland = options_.rule == PivotRule::kBland;
    int degenerate_run = 0;
    while (true) {
      int entering = -1;
      if (bland) {
        for (int c = 0; c < limit; ++c)
          if (Negative(reduced_[c])) {
            entering = c;
            break;
          }
      } else {
        S best = -tol_;
        for (int c = 0; c < limit; ++c)
          if (reduced_[c] < best) {
            best = reduced_[c];
            entering = c;
          }
      }
      if (entering < 0) return LpStatus::kOptimal;

      int leaving = -1;
      S best_ratio(0);
      for (size_t i = 0; i < rows_.size(); ++i) {
        const S& a = rows_[i][entering];
        if (!Positive(a)) continue;
        if constexpr (ScalarTraits<S>::kExact) {
          S ratio = rhs_[i] / a;
          if (leaving < 0 || ratio < best_ratio ||
              (ratio == best_ratio && basis_[i] < basis_[leaving])) {
            best_ratio = ratio;
            leaving = static_cast<int>(i);
          }
        } else {
          const double ratio = std::max(rhs_[i], 0.0) / a;
          if (leaving < 0 || ratio < best_ratio - tol_) {
            best_ratio = ratio;
            leaving = static_cast<int>(i);
          } else if (!(ratio > best_ratio + tol_)) {
            const double mine = perturbation_[i] / a;
            const double theirs = perturbation_[leaving] / rows_[leaving][entering];
            if (mine < theirs) {
              best_ratio = std::min(best_ratio, ratio);
              leaving = static_cast<int>(i);
            }
          }
        }
      }
      if (leaving < 0) {
        unbounded_column_ = entering;
        return LpStatus::kUnbounded;
      }
      // The perturbed ratio test already prevents cycling for inexact
      // scalars, where Bland's rule can stall for a very long time.
      if (!bland && ScalarTraits<S>::kExact) {
        degenerate_run = Positive(best_ratio) ? 0 : degenerate_run + 1;
        if (degenerate_run > 50) bland = true;
      }
      Pivot(leaving, entering);
      if (++pivots_ > options_.max_pivots) throw DuelError("simplex pivot limit exceeded");
    }
  }

  void Pivot(int r, int e) {
    auto& prow = rows_[r];
    const S inv = S(1) / prow[e];
    nonzero_.clear();
    for (int c = 0; c < num_cols_; ++c) {
      if (prow[c] == 0) continue;
      prow[c] *= inv;
      nonzero_.push_back(c);
    }
    prow[e] = S(1);
    rhs_[r] *= inv;
    if constexpr (!ScalarTraits<S>::kExact) perturbation_[r] *= inv;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      auto& row = rows_[i];
      if (row[e] == 0) continue;
      const S factor = row[e];
      for (int c : nonzero_) {
        row[c] -= factor * prow[c];
        Snap(row[c]);
      }
      row[e] = S(0);
      rhs_[i] -= factor * rhs_[r];
      Snap(rhs_[i]);
      if constexpr (!ScalarTraits<S>::kExact) perturbation_[i] -= factor * perturbation_[r];
    }
    if (reduced_[e] != 0) {
      const S factor = reduced_[e];
      for (int c : nonzero_) {
        reduced_[c] -= factor * prow[c];
        Snap(reduced_[c]);
      }
      reduced_[e] = S(0);
      objective_value_ -= factor * rhs_[r];
    }
    basis_[r] = e;
  }

  void Snap(S& x) const {
    if constexpr (!ScalarTraits<S>::kExact) {
      if (std::abs(x) < 1e-13) x = 0.0;
    }
  }

  // After phase one, artificial variables that remain basic sit at zero.
  // Pivot each out on any structural/slack column; a row with no such column
  // is a redundant equality and is dropped.
  void DriveOutArtificials() {
    for (size_t i = 0; i < rows_.size();) {
      if (basis_[i] < first_artificial_) {
        ++i;
        continue;
      }
      int best = -1;
      S best_abs(0);
      for (int c = 0; c < first_artificial_; ++c) {
        S a = Abs(rows_[i][c]);
        if (Positive(a) && (best < 0 || a > best_abs)) {
          best = c;
          best_abs = a;
        }
      }
      if (best >= 0) {
        Pivot(static_cast<int>(i), best);
        ++i;
      } else {
        rows_.erase(rows_.begin() + i);
        rhs_.erase(rhs_.begin() + i);
        if constexpr (!ScalarTraits<S>::kExact) perturbation_.erase(perturbation_.begin() + i);
        basis_.erase(basis_.begin() + i);
      }
    }
  }

  SimplexOptions options_;
  S tol_;
  std::vector<int> column_of_;
  std::vector<VarKind> kinds_;
  int num_structural_ = 0;
  int first_slack_ = 0;
  int first_artificial_ = 0;
  int num_cols_ = 0;
  std::vector<std::vector<S>> rows_;
  std::vector<S> rhs_;
  std::vector<double> perturbation_;
  std::vector<int> basis_;
  std::vector<S> costs_;
  std::vector<S> phase_two_costs_;
  std::vector<S> reduced_;
  std::vector<int> nonzero_;
  S objective_value_ = S(0);
  long pivots_ = 0;
  int unbounded_column_ = -1;
};

}  // namespace

template <typename S>
LpResult<S> SolveLp(const LinearProgram<S>& program, const SimplexOptions& options) {
  if (program.kinds.size() != program.objective.size())
    throw DimensionError("variable kinds and objective differ in length");
  Tableau<S> tableau(program, options);
  return tableau.Solve();
}

template <typename S>
LpResult<S> SolveLpOrThrow(const LinearProgram<S>& program,
                           const SimplexOptions& options) {
  LpResult<S> result = SolveLp(program, options);
  if (result.status == LpStatus::kInfeasible)
    throw InfeasibleError("linear program infeasible (phase-one residual " +
                          std::to_string(ToDouble(result.infeasibility)) + ")");
  if (result.status == LpStatus::kUnbounded)
    throw UnboundedError("linear program unbounded along variable " +
                         std::to_string(result.unbounded_variable));
  return result;
}

template LpResult<double> SolveLp(const LinearProgram<double>&, const SimplexOptions&);
template LpResult<Rational> SolveLp(const LinearProgram<Rational>&, const SimplexOptions&);
template LpResult<double> SolveLpOrThrow(const LinearProgram<double>&,
                                         const SimplexOptions&);
template LpResult<Rational> SolveLpOrThrow(const LinearProgram<Rational>&,
                                           const SimplexOptions&);

}  // namespace dueling
