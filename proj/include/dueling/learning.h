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


#ifndef DUELING_LEARNING_H_
#define DUELING_LEARNING_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "dueling/bilinear.h"
#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {
namespace learning {

// Approximate best response over one player's polytope. `respond` receives a
// nonnegative opponent vector already scaled to infinity-norm `bound` (or
// the zero vector) and returns a point of the polytope.
struct BestResponseOracle {
  std::function<std::vector<double>(const std::vector<double>&)> respond;
  int input_dim = 0;
  int output_dim = 0;
  double eps = 0.0;
  double bound = 1.0;
  // Optional membership test applied to every output; failures raise
  // ContractViolation.
  std::function<bool(const std::vector<double>&)> feasible;

  // Normalizes `opponent` and calls `respond`.
  std::vector<double> operator()(const std::vector<double>& opponent) const;
};

// Oracle for the probability simplex of dimension M.rows(): the vertex
// maximizing (M y)_i, ties to the smallest index. Exact (eps = 0).
BestResponseOracle SimplexOracle(const Matrix<double>& M);

// A bilinear duel known only through best-response oracles. Player one
// receives x^T M1 x', player two x'^T M2 x.
struct OracleDuel {
  Matrix<double> M1;
  Matrix<double> M2;
  BestResponseOracle oracle1;
  BestResponseOracle oracle2;
  int m1 = 1;  // halfspace counts of K and K'
  int m2 = 1;
  double bound = 1.0;
};

// Simplex duel with exact vertex oracles; player two receives one minus
// player one's payoff.
OracleDuel ConstantSumSimplexDuel(const Matrix<double>& M);

struct FelParams {
  long T = 1;
  double R = 0.0;
  long N = 1;
  double B = 1.0;
  double C = 1.0;
  double delta = 0.1;
  double eps = 0.1;

  std::string ToString() const;
};

// Schedule from the regret analysis: C = B^3 n n',
// T = ceil((4 C sqrt(max(m, m')) / (3 eps))^(2/3)) clamped to >= max(m, m'),
// R = B sqrt(max(m, m') T), N = ceil(ln(4 T C / delta) / (2 eps^2)).
FelParams FelParamsFrom(double eps, double delta, int m, int mprime, int n, int nprime,
                        double B);

// Halfspace count of a polytope, equalities counting as two halfspaces.
template <typename S>
int HalfspaceCount(const Polytope<S>& p) {
  return static_cast<int>(p.ineq.size() + 2 * p.eq.size());
}

// One FEL move: (1/N) sum_j O(r_j + history_sum), r_j uniform on
// [0, R]^input_dim. Sample j draws from rng.Split(j), so the result does not
// depend on evaluation order. `pure`, if given, receives the N oracle
// outputs.
std::vector<double> FelPlay(const BestResponseOracle& oracle,
                            const std::vector<double>& history_sum, const FelParams& params,
                            const CounterRng& rng,
                            std::vector<std::vector<double>>* pure = nullptr);

struct DuelTranscript {
  std::vector<std::vector<double>> plays1;
  std::vector<std::vector<double>> plays2;
  std::vector<double> payoffs1;  // x_t^T M1 x'_t
  std::vector<double> payoffs2;  // x'_t^T M2 x_t
  // Oracle outputs behind each averaged play, kept only on request.
  std::vector<std::vector<std::vector<double>>> pure1;
  std::vector<std::vector<std::vector<double>>> pure2;

  long rounds() const { return static_cast<long>(payoffs1.size()); }
  // Columns t, payoff, cumulative_payoff (player one).
  std::string ToCsv() const;
};

struct FelResult {
  std::vector<double> sigma;
  std::vector<double> sigma_prime;
  double value = 0.0;   // average player-one payoff
  double value2 = 0.0;  // average player-two payoff
  double regret1 = 0.0;
  double regret2 = 0.0;
  // 2 max(regret1, regret2, 0) / T: both averages are eps_prime-minmax.
  double eps_prime = 0.0;
  DuelTranscript transcript;
};

struct FelOptions {
  bool record_pure = false;
};

// T rounds of mutual FEL; round t of player k uses rng.Split(2 t + k).
FelResult FelSolve(const OracleDuel& duel, const FelParams& params, const CounterRng& rng,
                   const FelOptions& options = {});

// max_x sum_t v(x, y_t) - sum_t realized_t, with the maximizer taken from
// the oracle applied to sum_t y_t. `payoff` maps (own, opponent) plays.
double RegretOf(const std::vector<std::vector<double>>& opponent_plays,
                const std::vector<double>& realized, const BestResponseOracle& oracle,
                const Matrix<double>& payoff);

// Player-one regret of a transcript.
double RegretOf(const DuelTranscript& transcript, const OracleDuel& duel);

// "Be the leader" quantity for a fixed perturbation r:
// sum_t v(O(r + y_1 + ... + y_t), y_t).
double BeTheLeaderPayoff(const std::vector<std::vector<double>>& opponent_plays,
                         const std::vector<double>& r, const BestResponseOracle& oracle,
                         const Matrix<double>& payoff);

// Regret bound 4 C sqrt(max(m, m') T) + 3 T^2 eps.
double RegretBound(const FelParams& params, int m, int mprime);

}  // namespace learning
}  // namespace dueling

#endif  // DUELING_LEARNING_H_
