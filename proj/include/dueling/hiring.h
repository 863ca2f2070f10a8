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


#ifndef DUELING_HIRING_H_
#define DUELING_HIRING_H_

#include <string>
#include <vector>

#include "dueling/bilinear.h"
#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {
namespace hiring {

// Rounds i = 1..n and projected ranks j = 1..i are stored zero-based:
// pi[i-1][j-1] is the probability of an offer to a candidate who is j-th
// best of the first i seen.
struct HiringPolicy {
  int n = 0;
  std::vector<std::vector<double>> pi;

  static HiringPolicy Never(int n);
  double at(int i, int j) const { return pi[i - 1][j - 1]; }
  void Validate() const;
};

// Common-pool behaviour: `pre` applies while the opponent has not hired.
// With `react` set, once the opponent has hired the employer makes an offer
// exactly to candidates who beat the opponent's employee; without it the
// employer ignores the opponent.
struct CommonDuelPolicy {
  HiringPolicy pre;
  bool react = true;
  std::string name;
};

// Hire at round i on projected rank j iff C(i, j) / C(n, j) >= 1/2, i.e.
// the candidate is at least even odds to beat everyone still to come.
CommonDuelPolicy CommonEquilibrium(int n);

// Skip floor(n/e) candidates, then hire the first best-so-far; hire the last
// candidate if no best-so-far appeared. Ignores the opponent.
CommonDuelPolicy ClassicalSecretary(int n);

struct SimulationResult {
  double mean = 0.0;
  double ci99 = 0.0;  // half-width of the 99% normal confidence interval
  long trials = 0;
};

// Both employers interview the same random order; equal hires score one
// half for each. Trial k uses rng.Split(k).
SimulationResult SimulateCommonDuel(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n,
                                    long trials, const CounterRng& rng);

// Exact payoff of `a` against `b` in the common duel for threshold-type
// pre-policies (0/1 entries), using independence of projected ranks and
// Pr[j-th best of i beats all later] = C(i, j) / C(n, j).
Rational CommonDuelExactPayoff(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n);

// Same quantity by enumerating every interview order (n! of them).
Rational CommonDuelEnumeratedPayoff(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n);

struct DeviationScan {
  Rational best_payoff;
  std::vector<int> best_thresholds;  // t_i: hire iff projected rank <= t_i
  long deviations = 0;
};

// Every deterministic threshold pre-policy (t_i in 0..i per round, with the
// reaction rule) against the equilibrium, evaluated exactly.
DeviationScan ScanThresholdDeviations(int n);

// Threshold policy hiring iff projected rank <= t_i at round i.
CommonDuelPolicy ThresholdPolicy(const std::vector<int>& thresholds, bool react = true);

// Pr[overall rank r | the i-th candidate is j-th best of the first i]
//   = C(r-1, j-1) C(n-r, i-j) / C(n, i).
template <typename S>
S RankPosterior(int n, int i, int j, int r);

// The alternative form with C(n-r+1, i-j) in place of C(n-r, i-j), kept only
// to document that it fails to normalize.
Rational RankPosteriorAlternative(int n, int i, int j, int r);

// Zero-based coordinate of (i, j) among the n(n+1)/2 flow coordinates; the
// no-hire coordinate comes last, at n(n+1)/2.
inline int FlowIndex(int i, int j) { return (i - 1) * i / 2 + (j - 1); }
inline int NoHireIndex(int n) { return n * (n + 1) / 2; }

inline constexpr int kHiringCap = 30;

// Payoff of hire (i, j) against hire (i', j') in the independent duel, plus
// the no-hire outcome: a hire beats no hire, and no hire ties no hire.
template <typename S>
Matrix<S> HiringPayoffTensor(int n);

// p_ij >= 0, z >= 0, sum p + z = 1, and p_ij <= q_i / i with
// q_i = 1 - sum_{i' < i} sum_j p_i'j.
template <typename S>
Polytope<S> HiringFlowPolytope(int n);

template <typename S>
BilinearDuel<S> HiringBilinearDuel(int n);

template <typename S>
struct HiringFlow {
  int n = 0;
  std::vector<std::vector<S>> p;  // p[i-1][j-1]
  std::vector<S> q;               // q[i-1] for i = 1..n+1; q[n] is the no-hire mass

  // Rebuilds q from p.
  void RecomputeReach();
  // Flow coordinates followed by the no-hire mass.
  std::vector<S> ToVector() const;
  static HiringFlow FromVector(const std::vector<S>& v, int n);
  // Maximum violation of the flow constraints.
  double Violation() const;
};

template <typename S>
struct HiringSolution {
  S value = S(0);
  HiringFlow<S> flow;
  HiringFlow<S> flow2;
  BilinearEquilibrium<S> equilibrium;
};

template <typename S>
HiringSolution<S> SolveIndependentHiring(int n, const SimplexOptions& options = {});

// pi(i, j) = p_ij / (q_i / i); zero where q_i = 0. Throws DomainError when
// some p_ij exceeds q_i / i by more than 1e-9.
template <typename S>
HiringPolicy FlowToPolicy(const HiringFlow<S>& flow);

HiringFlow<double> PolicyToFlow(const HiringPolicy& policy);

struct PolicySimulation {
  std::vector<std::vector<double>> p;  // empirical hire frequencies by (round, projected rank)
  double no_hire = 0.0;
  std::vector<double> hire_rank;       // hire_rank[r-1]: frequency of hiring overall rank r
  long trials = 0;

  // Columns kind,i,j,value.
  std::string ToCsv() const;
};

PolicySimulation SimulatePolicy(const HiringPolicy& policy, int n, long trials,
                                const CounterRng& rng);

}  // namespace hiring
}  // namespace dueling

#endif  // DUELING_HIRING_H_
