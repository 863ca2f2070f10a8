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


#ifndef DUELING_COMPRESSION_H_
#define DUELING_COMPRESSION_H_

#include <string>
#include <utility>
#include <vector>

#include "dueling/core.h"
#include "dueling/learning.h"
#include "dueling/rng.h"
#include "dueling/scalar.h"

namespace dueling {
namespace compression {

// No-Fail: every item is a leaf of a full binary tree. Fail: items may be
// left out, and leaving an item out loses to any placement of it.
enum class Mode { kNoFail, kFail };

std::string ToString(Mode mode);
Mode ModeFromString(const std::string& name);  // "no-fail" or "fail"

// Depth of a left-out item.
inline constexpr int kAbsent = -1;

// Leaf depth per item; the root has depth 0. Depths never exceed n.
struct DepthProfile {
  std::vector<int> depths;

  int size() const { return static_cast<int>(depths.size()); }
  // Sum of 2^-d over present items.
  Rational KraftSum() const;
  bool IsValid(Mode mode) const;
  // Throws DomainError with the reason when invalid.
  void Validate(Mode mode) const;
  bool operator==(const DepthProfile&) const = default;
};

// Column of a depth-distribution matrix holding the left-out probability.
// Columns 0..n hold depths; the matrix has n + 2 columns.
inline int AbsentColumn(int n) { return n + 1; }
inline int DepthColumns(int n) { return n + 2; }

template <typename S>
Matrix<S> ProfileToMatrix(const DepthProfile& profile);

// Row-stochastic with a zero left-out column in No-Fail mode.
bool IsDepthMatrix(const Matrix<double>& x, Mode mode, double tol = 1e-9);

// Binary code tree. Leaves carry an item index, internal nodes carry -1.
struct CodeTree {
  std::vector<int> left;
  std::vector<int> right;
  std::vector<int> parent;
  std::vector<int> item;
  int root = 0;

  int size() const { return static_cast<int>(item.size()); }
  std::vector<int> NodeDepths() const;
  // Items not present in the tree are reported as kAbsent.
  DepthProfile Profile(int n) const;
};

// Huffman merge on the two lowest probabilities. Ties go to the node created
// most recently, so merged subtrees are preferred over leaves of equal
// probability. Leaves are nodes 0..n-1; merges create nodes n, n+1, ...
template <typename S>
CodeTree HuffmanTree(const std::vector<S>& p);

template <typename S>
DepthProfile Huffman(const std::vector<S>& p);

// Canonical code: items by (depth, index) receive consecutive codewords
// left to right. Throws DomainError when the Kraft inequality fails.
CodeTree KraftToTree(const DepthProfile& profile);

struct StructureCheck {
  bool ok = true;
  std::string rule;  // "depth-order", "sibling", "three-times"; empty when ok
  int first = -1;    // witness nodes
  int second = -1;
};

// Checks the depth-order and sibling facts on all node pairs and the
// 3x bound on same-depth pairs satisfying its hypothesis.
template <typename S>
StructureCheck VerifyHuffmanStructure(const CodeTree& tree, const std::vector<S>& p);

// Subtree probability of every node.
template <typename S>
std::vector<S> NodeWeights(const CodeTree& tree, const std::vector<S>& p);

// p_min(d) <= p(R) <= p_max(d) for an antichain R of weight 2^-d. Returns
// false when R is not an antichain, its weight is not 2^-d for an occupied
// level d, or the bound fails.
template <typename S>
bool CheckAntichainBound(const CodeTree& tree, const std::vector<S>& p,
                         const std::vector<int>& antichain);

template <typename S>
S CompressionPayoff(const DepthProfile& a, const DepthProfile& b, const std::vector<S>& p,
                    Mode mode);

// Multiple-choice knapsack with dyadic weights 2^-depth (zero for kAbsent)
// and capacity one.
template <typename S>
struct MckpItem {
  S value = S(0);
  int depth = 0;
};

template <typename S>
struct MckpInstance {
  std::vector<std::vector<MckpItem<S>>> lists;
  // Weights are integers in units of 2^-unit_depth; every depth must be at
  // most unit_depth.
  int unit_depth = 0;
  bool at_most_one = false;
};

template <typename S>
struct MckpSelection {
  std::vector<int> choice;  // index into each list, -1 for none
  S value = S(0);
  Rational weight;
};

// eps = 0: exact dynamic program over total weight. eps > 0: value-scaling
// program over lists keeping the least weight per scaled value, which is
// within a (1 - eps) factor of optimal. Value ties prefer less weight.
template <typename S>
MckpSelection<S> SolveMckp(const MckpInstance<S>& instance, double eps = 0.0);

// Every selection, for small instances.
template <typename S>
MckpSelection<S> BruteForceMckp(const MckpInstance<S>& instance);

// Value of placing item i at depth j (or leaving it out, j = n + 1) against
// a nonnegative n x (n+2) matrix y: p_i (y_ij / 2 + sum_{k > j} y_ik).
template <typename S>
Matrix<S> PlacementValues(const Matrix<S>& y, const std::vector<S>& p);

template <typename S>
struct CompressionResponse {
  DepthProfile profile;
  S value = S(0);
};

// Best response to an opponent depth matrix through the knapsack reduction.
// In No-Fail mode the deepest leaf is promoted until the Kraft sum is one.
template <typename S>
CompressionResponse<S> BestResponseCompression(const Matrix<S>& opponent, const std::vector<S>& p,
                                               double eps, Mode mode);

inline constexpr int kCompressionCap = 30;
inline constexpr int kEnumerationCap = 6;

// Every valid profile with depths in 0..n (left-out allowed in Fail mode),
// in lexicographic order.
std::vector<DepthProfile> EnumerateProfiles(int n, Mode mode);

template <typename S>
CompressionResponse<S> BestResponseByEnumeration(const Matrix<S>& opponent,
                                                 const std::vector<S>& p, Mode mode);

template <typename S>
FiniteDuel<S> CompressionFiniteDuel(const std::vector<S>& p, Mode mode);

// Exact best-response value against the Huffman profile.
template <typename S>
CompressionResponse<S> HuffmanBeatability(const std::vector<S>& p, Mode mode);

// Payoff matrix over flattened depth matrices, index i * (n + 2) + column.
Matrix<double> CompressionPayoffMatrix(const std::vector<double>& p);

// Halfspaces of the row-stochastic relaxation with expected Kraft sum at
// most one: n(n+2) sign constraints, n equalities, one Kraft row.
int DepthMatrixHalfspaceCount(int n);

learning::OracleDuel CompressionOracleDuel(const std::vector<double>& p, Mode mode,
                                           double oracle_eps = 0.0);

struct CompressionFelResult {
  Matrix<double> sigma;        // averaged depth matrix of player one
  Matrix<double> sigma_prime;  // and of player two
  double value = 0.0;
  double eps_prime = 0.0;
  learning::FelParams params;
  // Distinct pure profiles behind sigma with their weights, when recorded.
  std::vector<std::pair<DepthProfile, double>> mixture;
  learning::FelResult fel;
};

CompressionFelResult FelSolveCompression(const std::vector<double>& p, Mode mode,
                                         const learning::FelParams& params, const CounterRng& rng,
                                         const learning::FelOptions& options = {});

// Schedule from target eps and delta with this duel's dimensions.
learning::FelParams CompressionFelParams(int n, double eps, double delta);

}  // namespace compression
}  // namespace dueling

#endif  // DUELING_COMPRESSION_H_
