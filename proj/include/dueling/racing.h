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


#ifndef DUELING_RACING_H_
#define DUELING_RACING_H_

#include <utility>
#include <vector>

#include "dueling/core.h"
#include "dueling/scalar.h"

namespace dueling {
namespace racing {

// One joint state of nature: its probability and the delay of every edge.
// An infinite delay means the edge never arrives.
template <typename S>
struct RaceState {
  S p = S(0);
  std::vector<Cost<S>> delays;
};

// Race between two nodes over parallel edges. States may be correlated
// across edges.
template <typename S>
struct ParallelRace {
  std::vector<RaceState<S>> states;

  int num_edges() const { return states.empty() ? 0 : static_cast<int>(states[0].delays.size()); }
  // Throws unless there is at least one edge and state, rows have equal
  // length, delays are nonnegative and probabilities form a distribution.
  void Validate() const;

  // Independent edges: each edge has its own finite (delay, probability)
  // list; states are the product support in lexicographic order.
  static ParallelRace Independent(const std::vector<std::vector<std::pair<S, S>>>& edges);
};

template <typename S>
std::vector<Cost<S>> ExpectedDelays(const ParallelRace<S>& race);

// argmin of expected delay, ties to the smallest index.
template <typename S>
int ShortestExpectedEdge(const ParallelRace<S>& race);

// Strategies are edges; an edge's cost in a state is its delay there.
template <typename S>
FiniteDuel<S> RaceDuel(const ParallelRace<S>& race, TieRule tie = TieRule::kSymmetricHalf);

// One edge per strategy, one state per outcome, delays equal to costs. The
// duel must be symmetric with nonnegative costs.
template <typename S>
ParallelRace<S> EncodeDuelAsRace(const FiniteDuel<S>& duel);

// Edge a costs eps/2 always; edge b costs 0 with probability 1 - eps and 1
// otherwise.
template <typename S>
ParallelRace<S> BeatableRace(const S& eps);

// Best opponent payoff against the shortest-expected-edge player.
template <typename S>
S ShortestEdgeBeatability(const ParallelRace<S>& race, TieRule tie = TieRule::kSymmetricHalf);

template <typename S>
struct PoaExample {
  ParallelRace<S> race;
  int dominant_edge = 1;
  S dominant_payoff = S(0);  // payoff of b against a
  S equilibrium_cost = S(0);
  S optimal_cost = S(0);
  S ratio = S(0);
};

// Edge a costs eps always; b costs 0 with probability 3/4 and 1 otherwise.
// Checks that b is strictly dominant in the duel and reports the ratio of
// the average cost at (b, b) to the best average cost over all pairs.
// Requires 0 < eps < 1/4.
template <typename S>
PoaExample<S> PoaExampleOf(const S& eps);

}  // namespace racing
}  // namespace dueling

#endif  // DUELING_RACING_H_
