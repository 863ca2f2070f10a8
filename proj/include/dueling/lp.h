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


#ifndef DUELING_LP_H_
#define DUELING_LP_H_

#include <string>
#include <vector>

#include "dueling/scalar.h"

namespace dueling {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

enum class VarKind { kNonNegative, kFree };

// Sparse row: coeffs[k] multiplies variable index[k].
template <typename S>
struct LinearConstraint {
  std::vector<int> index;
  std::vector<S> coeffs;
  Sense sense = Sense::kGreaterEqual;
  S rhs = S(0);

  void Add(int var, const S& coeff) {
    index.push_back(var);
    coeffs.push_back(coeff);
  }
};

// maximize objective . x subject to the constraints and variable kinds.
template <typename S>
struct LinearProgram {
  explicit LinearProgram(int num_vars = 0)
      : objective(num_vars, S(0)), kinds(num_vars, VarKind::kNonNegative) {}

  int num_vars() const { return static_cast<int>(objective.size()); }

  // Returns the index of the new variable.
  int AddVariable(VarKind kind, const S& cost = S(0)) {
    objective.push_back(cost);
    kinds.push_back(kind);
    return num_vars() - 1;
  }

  std::vector<S> objective;
  std::vector<VarKind> kinds;
  std::vector<LinearConstraint<S>> constraints;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(LpStatus status);

enum class PivotRule {
  // Smallest-index entering and leaving variables throughout.
  kBland,
  // Most negative reduced cost; drops to Bland's rule after a run of
  // degenerate pivots and stays there, so termination is still guaranteed.
  kDantzigThenBland,
};

struct SimplexOptions {
  // Pivot, feasibility and optimality tolerance. Ignored for rationals.
  double tolerance = 1e-9;
  PivotRule rule = PivotRule::kBland;
  long max_pivots = 5'000'000;
};

template <typename S>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  S value = S(0);
  std::vector<S> x;
  // Phase-one optimum: sum of artificial variables left over. Positive iff
  // the program is infeasible, so it doubles as the infeasibility witness.
  S infeasibility = S(0);
  // For kUnbounded: index of the structural variable whose ray is unbounded.
  int unbounded_variable = -1;
  long pivots = 0;
};

// Dense-tableau two-phase primal simplex.
template <typename S>
LpResult<S> SolveLp(const LinearProgram<S>& program,
                    const SimplexOptions& options = {});

// SolveLp that converts non-optimal statuses into InfeasibleError /
// UnboundedError.
template <typename S>
LpResult<S> SolveLpOrThrow(const LinearProgram<S>& program,
                           const SimplexOptions& options = {});

}  // namespace dueling

#endif  // DUELING_LP_H_
