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


#ifndef DUELING_CORE_H_
#define DUELING_CORE_H_

#include <string>
#include <vector>

#include "dueling/lp.h"
#include "dueling/scalar.h"

namespace dueling {

// How a tie on the realized state is scored for player one.
enum class TieRule {
  kSymmetricHalf,  // half a point each
  kPlayerOneWins,  // asymmetric variant: player one takes the whole point
};

std::string ToString(TieRule rule);
TieRule TieRuleFromString(const std::string& name);

// Extended-real cost. Infinity is a flag rather than a large number so that
// "never found" compares exactly: infinity ties infinity.
template <typename S>
struct Cost {
  S value = S(0);
  bool infinite = false;

  static Cost Of(const S& v) { return Cost{v, false}; }
  static Cost Infinity() { return Cost{S(0), true}; }

  bool operator<(const Cost& o) const {
    if (infinite) return false;
    if (o.infinite) return true;
    return value < o.value;
  }
  bool operator==(const Cost& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

template <typename S>
struct DiscreteDistribution {
  std::vector<std::string> outcomes;
  std::vector<S> probs;

  int size() const { return static_cast<int>(probs.size()); }

  // Outcomes labelled "w1".."wn".
  static DiscreteDistribution FromProbs(std::vector<S> probs);
  static DiscreteDistribution Uniform(int n);

  // Throws DomainError unless probabilities are nonnegative and sum to one
  // (within 1e-12 for doubles, exactly for rationals).
  void Validate() const;
};

// Probability that costs1 beats costs2 on a state drawn from dist, with ties
// scored by the tie rule.
template <typename S>
S Payoff(const std::vector<Cost<S>>& costs1, const std::vector<Cost<S>>& costs2,
         const DiscreteDistribution<S>& dist, TieRule tie = TieRule::kSymmetricHalf);

// Duel with enumerated pure strategies. costs1[a][w] is the cost of player
// one's strategy a on outcome w; costs2 likewise for player two.
template <typename S>
struct FiniteDuel {
  std::vector<std::string> strategies1;
  std::vector<std::string> strategies2;
  std::vector<std::vector<Cost<S>>> costs1;
  std::vector<std::vector<Cost<S>>> costs2;
  DiscreteDistribution<S> dist;
  TieRule tie = TieRule::kSymmetricHalf;

  // Both players share strategy set and cost table.
  static FiniteDuel Symmetric(std::vector<std::string> strategies,
                              std::vector<std::vector<Cost<S>>> costs,
                              DiscreteDistribution<S> dist,
                              TieRule tie = TieRule::kSymmetricHalf);

  void Validate() const;
};

inline constexpr long kDefaultMatrixCap = 10'000'000;

// Entry (a, b) is player one's payoff playing a against b.
template <typename S>
Matrix<S> DuelToMatrix(const FiniteDuel<S>& duel, long cap = kDefaultMatrixCap);

template <typename S>
struct MatrixGameSolution {
  S value = S(0);
  std::vector<S> mixed1;
  std::vector<S> mixed2;
};

// Value and optimal mixed strategies of the zero-sum matrix game where the
// row player receives M(a, b). Entries must lie in [0, 1].
template <typename S>
MatrixGameSolution<S> SolveMatrixGame(const Matrix<S>& payoff,
                                      const SimplexOptions& options = {});

// Matrix games up to this many entries are solved exactly by the automatic
// front end below.
inline constexpr long kExactMatrixEntries = 10'000;

// Solves exactly in rationals when the matrix is small, otherwise in doubles.
MatrixGameSolution<double> SolveMatrixGameAuto(const Matrix<double>& payoff);

// Best payoff an opponent can obtain against player one committing to the
// mixed strategy `mixed` over strategies1: max_b sum_a mixed[a] (1 - M(a, b)).
template <typename S>
S BeatabilityOf(const std::vector<S>& mixed, const FiniteDuel<S>& duel);

// Same quantity straight from a payoff matrix.
template <typename S>
S BeatabilityOf(const std::vector<S>& mixed, const Matrix<S>& payoff,
                int* best_response = nullptr);

// Throws DomainError unless v is a probability vector.
template <typename S>
void ValidateMixed(const std::vector<S>& v, const char* what);

}  // namespace dueling

#endif  // DUELING_CORE_H_
