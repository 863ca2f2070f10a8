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


#ifndef DUELING_SEARCH_H_
#define DUELING_SEARCH_H_

#include <string>
#include <utility>
#include <vector>

#include "dueling/bilinear.h"
#include "dueling/core.h"
#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {
namespace search {

// Items are 1..n in sorted order; state and action coordinates below use the
// same 1-based convention. Vectors indexed by item are zero-based.

// Binary search tree over items in in-order. depth[k-1] is the number of
// comparisons needed to find item k (the root has depth 1); left/right hold
// child items, 0 for none.
struct BstTree {
  std::vector<int> depth;
  std::vector<int> left;
  std::vector<int> right;
  int root = 0;

  int size() const { return static_cast<int>(depth.size()); }
  std::string ToString() const;  // depth vector, e.g. "2-1-2"
  bool operator==(const BstTree& o) const { return depth == o.depth; }
};

// Exactly one entry equals 1 and, recursively, both sides minus one are depth
// vectors. The empty vector qualifies.
bool DepthVectorCheck(const std::vector<int>& u);

// The unique tree realizing u. Throws DomainError when u is not a depth
// vector.
BstTree DepthVectorToTree(const std::vector<int>& u);

// |{j : u_j = s}| <= 2^(s-1) for every level s.
bool LevelBudgetHolds(const std::vector<int>& u);

// Root at the lower median, recursing on both sides.
BstTree MedianSearchTree(int n);

inline constexpr int kEnumerationCap = 10;

// All Catalan(n) trees, by root then left then right subtree.
std::vector<BstTree> AllBsts(int n);

template <typename S>
struct Splits {
  S left = S(0);
  S equal = S(0);
  S right = S(0);
};

// Probabilities that the target lies left of, at, or right of k given that
// it lies in [i, j]. A zero-mass interval splits by item count.
template <typename S>
Splits<S> ConditionalSplits(const std::vector<S>& p, int i, int j, int k);

// State (i, j, r): the target lies in [i, j] after r comparisons.
struct SearchState {
  int i = 1;
  int j = 1;
  int r = 0;
  std::vector<int> actions;  // ordered by queried item k = i..j
};

// Query item k from a state. Finding k ends at terminal (k, r + 1); the
// residual intervals lead to states `left` and `right` (-1 when empty).
struct SearchAction {
  int state = 0;
  int k = 1;
  int left = -1;
  int right = -1;
};

inline constexpr int kSearchCap = 31;

class StateActionGraph {
 public:
  StateActionGraph() = default;
  explicit StateActionGraph(int n);

  int n() const { return n_; }
  int start() const { return 0; }
  const std::vector<SearchState>& states() const { return states_; }
  const std::vector<SearchAction>& actions() const { return actions_; }
  // Index of state (i, j, r), or -1 when it is unreachable.
  int Find(int i, int j, int r) const;
  // Action querying k from state s.
  int ActionOf(int s, int k) const { return states_[s].actions[k - states_[s].i]; }
  int num_terminals() const;
  // State-to-action, action-to-terminal and action-to-state edges.
  long num_edges() const;

 private:
  int n_ = 0;
  std::vector<SearchState> states_;
  std::vector<SearchAction> actions_;
  std::vector<int> index_;
};

StateActionGraph BuildStateActionGraph(int n);

// A stateful flow is stored as the flow entering each action; edge flows
// follow from the splits.
template <typename S>
std::vector<Splits<S>> ActionSplits(const StateActionGraph& g, const std::vector<S>& p);

template <typename S>
std::vector<S> TreeToFlow(const StateActionGraph& g, const BstTree& tree, const std::vector<S>& p);

// Largest violation of nonnegativity, unit start outflow, or conservation.
template <typename S>
double FlowViolation(const StateActionGraph& g, const std::vector<S>& p, const std::vector<S>& y);

// Mass entering terminal (item j, depth i), stored at (i - 1, j - 1).
template <typename S>
Matrix<S> TerminalMass(const StateActionGraph& g, const std::vector<S>& p,
                       const std::vector<S>& y);

// V[i-1][j-1] = value of finding item j at time i against the opponent whose
// terminal masses are given: (x(j,i)/2 + sum_{i' > i} x(j,i')) / p_j.
// Zero-probability items get a constant 1/2 column.
template <typename S>
Matrix<S> ValueMatrixOf(const Matrix<S>& terminal_mass, const std::vector<S>& p);

// Pure-tree value matrix: 1 when the tree is slower than time i, 1/2 when
// equal, 0 when faster.
template <typename S>
Matrix<S> ValueMatrixOfTree(const BstTree& tree);

// I[i-1][j-1] = Pr[item j is found at time i | target j].
template <typename S>
Matrix<S> IndicatorOf(const BstTree& tree);
template <typename S>
Matrix<S> IndicatorOf(const Matrix<S>& terminal_mass, const std::vector<S>& p);

// sum_{i,j} I[i,j] V[i,j] p_j.
template <typename S>
S ExpectedValue(const Matrix<S>& indicator, const Matrix<S>& value, const std::vector<S>& p);

template <typename S>
Polytope<S> StatefulFlowPolytope(const StateActionGraph& g, const std::vector<S>& p);

// M[a, a'] = [k = k'] pE_a pE_a' w(d, d') / p_k with w = 1 when d < d',
// 1/2 when equal; zero for zero-probability items.
template <typename S>
Matrix<S> SearchPayoffMatrix(const StateActionGraph& g, const std::vector<S>& p);

template <typename S>
BilinearDuel<S> SearchBilinearDuel(const StateActionGraph& g, const std::vector<S>& p);

template <typename S>
struct BstSolution {
  S value = S(0);
  StateActionGraph graph;
  std::vector<S> flow;
  std::vector<S> flow2;
  BilinearEquilibrium<S> equilibrium;
};

template <typename S>
BstSolution<S> SolveBstDuel(const std::vector<S>& p, const SimplexOptions& options = {});

// Interval program best(i, j, r) = max_k p_k V[r, k] + best(i, k-1, r+1) +
// best(k+1, j, r+1); ties to the smallest k.
template <typename S>
std::pair<BstTree, S> BestResponseBst(const Matrix<S>& value, const std::vector<S>& p);

template <typename S>
std::pair<BstTree, S> BestResponseByEnumeration(const Matrix<S>& value, const std::vector<S>& p);

// Picks one action per reached state with probability proportional to its
// flow (uniform when the state carries none) and follows both residual
// intervals.
BstTree RoundFlow(const StateActionGraph& g, const std::vector<double>& y, CounterRng& rng);

// Strategies are all trees, cost = depth of the target.
template <typename S>
FiniteDuel<S> SearchFiniteDuel(const std::vector<S>& p);

struct MedianBeatability {
  int r = 0;
  Rational value;    // exact best response against median search, uniform p
  Rational formula;  // (2^(r-1) - 1 + 2^(r-3)) / (2^r - 1)
  BstTree response;
};

MedianBeatability MedianBeatabilityOf(int r);

// Budget-only relaxation of the best response to median search on 2^r - 1
// items: items labelled by median depth s on the left, 2^(s-1) depth slots
// labelled s on the right, weight 1 / 1/2 / 0 when the slot is shallower /
// equal / deeper. The dual puts 1 on right labels s <= r-2, 1/2 on right
// label r-1 and on left label r, 0 elsewhere.
struct DualCertificate {
  bool feasible = false;
  Rational dual_value;
  Rational matching_value;  // maximum-weight perfect matching
  Rational bound;           // 2^(r-1) - 1 + 2^(r-3)
};

DualCertificate MedianDualCertificate(int r);

}  // namespace search
}  // namespace dueling

#endif  // DUELING_SEARCH_H_
