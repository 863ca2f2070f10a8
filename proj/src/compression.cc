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


#include "dueling/compression.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "dueling/errors.h"

namespace dueling {
namespace compression {
namespace {

constexpr int kExactDpDepth = 22;

Rational PowTwoInverse(int k) {
  Rational r(1);
  for (int i = 0; i < k; ++i) r /= 2;
  return r;
}

// Weight of a depth in units of 2^-unit_depth.
int64_t Units(int depth, int unit_depth) {
  return depth == kAbsent ? 0 : int64_t{1} << (unit_depth - depth);
}

template <typename S>
bool LessEq(const S& a, const S& b) {
  if constexpr (ScalarTraits<S>::kExact) {
    return a <= b;
  } else {
    return a <= b + 1e-12;
  }
}

template <typename S>
std::vector<Cost<S>> DepthCosts(const DepthProfile& profile) {
  std::vector<Cost<S>> costs;
  for (int d : profile.depths)
    costs.push_back(d == kAbsent ? Cost<S>::Infinity() : Cost<S>::Of(S(d)));
  return costs;
}

int Column(int depth, int n) { return depth == kAbsent ? AbsentColumn(n) : depth; }

// Raises the deepest leaf (largest index on ties) until the Kraft sum is one.
void Promote(DepthProfile& profile) {
  const int n = profile.size();
  auto units = [&] {
    int64_t s = 0;
    for (int d : profile.depths) s += Units(d, n);
    return s;
  };
  while (units() < (int64_t{1} << n)) {
    int deepest = -1;
    for (int i = 0; i < n; ++i)
      if (profile.depths[i] != kAbsent &&
          (deepest < 0 || profile.depths[i] >= profile.depths[deepest]))
        deepest = i;
    if (deepest < 0 || profile.depths[deepest] == 0)
      throw ContractViolation("cannot complete the Kraft sum");
    --profile.depths[deepest];
  }
}

}  // namespace

std::string ToString(Mode mode) { return mode == Mode::kNoFail ? "no-fail" : "fail"; }

Mode ModeFromString(const std::string& name) {
  if (name == "no-fail") return Mode::kNoFail;
  if (name == "fail") return Mode::kFail;
  throw DomainError("unknown compression mode: " + name);
}

Rational DepthProfile::KraftSum() const {
  Rational s(0);
  for (int d : depths)
    if (d != kAbsent) s += PowTwoInverse(d);
  return s;
}

void DepthProfile::Validate(Mode mode) const {
  if (depths.empty()) throw DomainError("profile has no items");
  for (int d : depths) {
    if (d == kAbsent) {
      if (mode == Mode::kNoFail) throw DomainError("No-Fail profiles place every item");
    } else if (d < 0 || d > size()) {
      throw DomainError("depths must lie in 0..n");
    }
  }
  const Rational k = KraftSum();
  if (mode == Mode::kNoFail && k != 1) throw DomainError("No-Fail profile must have Kraft sum 1");
  if (k > 1) throw DomainError("profile violates the Kraft inequality");
}

bool DepthProfile::IsValid(Mode mode) const {
  try {
    Validate(mode);
  } catch (const DomainError&) {
    return false;
  }
  return true;
}

template <typename S>
Matrix<S> ProfileToMatrix(const DepthProfile& profile) {
  const int n = profile.size();
  Matrix<S> x(n, DepthColumns(n));
  for (int i = 0; i < n; ++i) x(i, Column(profile.depths[i], n)) = S(1);
  return x;
}

bool IsDepthMatrix(const Matrix<double>& x, Mode mode, double tol) {
  const int n = x.rows();
  if (x.cols() != DepthColumns(n)) return false;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < x.cols(); ++j) {
      if (x(i, j) < -tol) return false;
      row += x(i, j);
    }
    if (std::abs(row - 1.0) > tol) return false;
    if (mode == Mode::kNoFail && std::abs(x(i, AbsentColumn(n))) > tol) return false;
  }
  return true;
}

std::vector<int> CodeTree::NodeDepths() const {
  std::vector<int> depth(size(), -1);
  if (size() == 0) return depth;
  std::vector<int> stack = {root};
  depth[root] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c : {left[v], right[v]})
      if (c >= 0) {
        depth[c] = depth[v] + 1;
        stack.push_back(c);
      }
  }
  return depth;
}

DepthProfile CodeTree::Profile(int n) const {
  DepthProfile profile{std::vector<int>(n, kAbsent)};
  const std::vector<int> depth = NodeDepths();
  for (int v = 0; v < size(); ++v)
    if (item[v] >= 0) {
      if (item[v] >= n) throw DimensionError("tree item index out of range");
      profile.depths[item[v]] = depth[v];
    }
  return profile;
}

template <typename S>
CodeTree HuffmanTree(const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw DomainError("Huffman needs at least one item");
  CodeTree t;
  std::vector<S> weight(p.begin(), p.end());
  for (int i = 0; i < n; ++i) {
    t.left.push_back(-1);
    t.right.push_back(-1);
    t.parent.push_back(-1);
    t.item.push_back(i);
  }
  std::vector<int> active(n);
  std::iota(active.begin(), active.end(), 0);
  auto before = [&](int a, int b) {
    return weight[a] < weight[b] || (weight[a] == weight[b] && a > b);
  };
  while (active.size() > 1) {
    std::sort(active.begin(), active.end(), before);
    const int a = active[0], b = active[1];
    const int v = t.size();
    t.left.push_back(a);
    t.right.push_back(b);
    t.parent.push_back(-1);
    t.item.push_back(-1);
    t.parent[a] = t.parent[b] = v;
    weight.push_back(weight[a] + weight[b]);
    active.erase(active.begin(), active.begin() + 2);
    active.push_back(v);
  }
  t.root = active[0];
  return t;
}

template <typename S>
DepthProfile Huffman(const std::vector<S>& p) {
  return HuffmanTree(p).Profile(static_cast<int>(p.size()));
}

CodeTree KraftToTree(const DepthProfile& profile) {
  const int n = profile.size();
  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    const int d = profile.depths[i];
    if (d == kAbsent) continue;
    if (d < 0 || d > 62) throw DomainError("depth out of range");
    order.push_back(i);
  }
  if (profile.KraftSum() > 1) throw DomainError("depths violate the Kraft inequality");
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return profile.depths[a] < profile.depths[b]; });
  CodeTree t;
  auto add_node = [&](int parent) {
    t.left.push_back(-1);
    t.right.push_back(-1);
    t.parent.push_back(parent);
    t.item.push_back(-1);
    return t.size() - 1;
  };
  add_node(-1);
  uint64_t code = 0;
  int prev = order.empty() ? 0 : profile.depths[order[0]];
  for (size_t k = 0; k < order.size(); ++k) {
    const int d = profile.depths[order[k]];
    if (k > 0) code = (code + 1) << (d - prev);
    prev = d;
    int v = t.root;
    for (int bit = d - 1; bit >= 0; --bit) {
      const bool one = (code >> bit) & 1;
      const int child = one ? t.right[v] : t.left[v];
      if (child < 0) {
        const int c = add_node(v);
        (one ? t.right[v] : t.left[v]) = c;
        v = c;
      } else {
        v = child;
      }
    }
    t.item[v] = order[k];
  }
  return t;
}

template <typename S>
std::vector<S> NodeWeights(const CodeTree& tree, const std::vector<S>& p) {
  std::vector<S> w(tree.size(), S(0));
  const std::vector<int> depth = tree.NodeDepths();
  std::vector<int> by_depth(tree.size());
  std::iota(by_depth.begin(), by_depth.end(), 0);
  std::sort(by_depth.begin(), by_depth.end(), [&](int a, int b) { return depth[a] > depth[b]; });
  for (int v : by_depth) {
    if (depth[v] < 0) continue;
    if (tree.item[v] >= 0) w[v] = p.at(tree.item[v]);
    for (int c : {tree.left[v], tree.right[v]})
      if (c >= 0) w[v] += w[c];
  }
  return w;
}

template <typename S>
StructureCheck VerifyHuffmanStructure(const CodeTree& tree, const std::vector<S>& p) {
  const int m = tree.size();
  const std::vector<S> w = NodeWeights(tree, p);
  const std::vector<int> depth = tree.NodeDepths();
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      if (depth[u] > depth[v] && !LessEq(w[u], w[v])) return {false, "depth-order", u, v};
  for (int parent = 0; parent < m; ++parent) {
    int lo = tree.left[parent], hi = tree.right[parent];
    if (lo < 0 || hi < 0) continue;
    if (w[hi] < w[lo]) std::swap(lo, hi);
    for (int v = 0; v < m; ++v)
      if (v != lo && v != hi && !LessEq(w[v], w[lo]) && !LessEq(w[hi], w[v]))
        return {false, "sibling", lo, v};
  }
  const int max_depth = m > 0 ? *std::max_element(depth.begin(), depth.end()) : 0;
  // inside[v]: number of descendants of v.
  std::vector<int> inside(m, 0);
  for (int v = 0; v < m; ++v)
    for (int a = tree.parent[v]; a >= 0; a = tree.parent[a]) ++inside[a];
  for (int d = 0; d < max_depth; ++d) {
    int deeper = 0;
    for (int v = 0; v < m; ++v)
      if (depth[v] > d) ++deeper;
    for (int v = 0; v < m; ++v) {
      if (depth[v] != d || inside[v] == deeper) continue;  // v holds every deeper node
      for (int u = 0; u < m; ++u)
        if (depth[u] == d && !LessEq(w[u], S(3) * w[v])) return {false, "three-times", u, v};
    }
  }
  return {};
}

template <typename S>
bool CheckAntichainBound(const CodeTree& tree, const std::vector<S>& p,
                         const std::vector<int>& antichain) {
  if (antichain.empty()) return false;
  const std::vector<S> w = NodeWeights(tree, p);
  const std::vector<int> depth = tree.NodeDepths();
  std::vector<bool> in(tree.size(), false);
  for (int v : antichain) {
    if (v < 0 || v >= tree.size() || in[v]) return false;
    in[v] = true;
  }
  Rational weight(0);
  S mass(0);
  for (int v : antichain) {
    for (int a = tree.parent[v]; a >= 0; a = tree.parent[a])
      if (in[a]) return false;
    weight += PowTwoInverse(depth[v]);
    mass += w[v];
  }
  int d = 0;
  while (PowTwoInverse(d) > weight) ++d;
  if (PowTwoInverse(d) != weight) return false;
  bool occupied = false;
  S lo(0), hi(0);
  for (int v = 0; v < tree.size(); ++v)
    if (depth[v] == d) {
      if (!occupied || w[v] < lo) lo = w[v];
      if (!occupied || w[v] > hi) hi = w[v];
      occupied = true;
    }
  return occupied && LessEq(lo, mass) && LessEq(mass, hi);
}

template <typename S>
S CompressionPayoff(const DepthProfile& a, const DepthProfile& b, const std::vector<S>& p,
                    Mode mode) {
  a.Validate(mode);
  b.Validate(mode);
  if (a.size() != static_cast<int>(p.size()) || b.size() != static_cast<int>(p.size()))
    throw DimensionError("profiles and distribution differ in size");
  return Payoff(DepthCosts<S>(a), DepthCosts<S>(b), DiscreteDistribution<S>::FromProbs(p));
}

template <typename S>
MckpSelection<S> SolveMckp(const MckpInstance<S>& inst, double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw DomainError("eps must lie in [0, 1)");
  const int lists = static_cast<int>(inst.lists.size());
  if (inst.unit_depth < 0 || inst.unit_depth > 62) throw DomainError("unit depth out of range");
  for (const auto& list : inst.lists) {
    if (list.size() > 120) throw SizeError("knapsack list too long");
    for (const auto& item : list) {
      if (item.depth != kAbsent && (item.depth < 0 || item.depth > inst.unit_depth))
        throw DomainError("item depth exceeds the unit depth");
      if (item.value < S(0)) throw DomainError("knapsack values must be nonnegative");
    }
  }
  const int64_t cap = int64_t{1} << inst.unit_depth;
  std::vector<std::vector<int8_t>> choice(lists);
  MckpSelection<S> sel;
  sel.choice.assign(lists, -1);

  if (eps == 0.0) {
    if (inst.unit_depth > kExactDpDepth)
      throw SizeError("exact knapsack limited to unit depth 22; use eps > 0");
    std::vector<S> best(cap + 1, S(0));
    std::vector<char> reach(cap + 1, 0);
    reach[0] = 1;
    for (int l = 0; l < lists; ++l) {
      std::vector<S> next(cap + 1, S(0));
      std::vector<char> next_reach(cap + 1, 0);
      choice[l].assign(cap + 1, -2);
      const auto& list = inst.lists[l];
      for (int64_t c = 0; c <= cap; ++c) {
        if (!reach[c]) continue;
        auto offer = [&](int k, int64_t c2, const S& v) {
          if (c2 > cap) return;
          if (!next_reach[c2] || v > next[c2]) {
            next[c2] = v;
            next_reach[c2] = 1;
            choice[l][c2] = static_cast<int8_t>(k);
          }
        };
        if (inst.at_most_one) offer(-1, c, best[c]);
        for (int k = 0; k < static_cast<int>(list.size()); ++k)
          offer(k, c + Units(list[k].depth, inst.unit_depth), best[c] + list[k].value);
      }
      best.swap(next);
      reach.swap(next_reach);
    }
    int64_t end = -1;
    for (int64_t c = 0; c <= cap; ++c)
      if (reach[c] && (end < 0 || best[c] > best[end])) end = c;
    if (end < 0) throw InfeasibleError("knapsack has no feasible selection");
    for (int l = lists - 1; l >= 0; --l) {
      const int k = choice[l][end];
      sel.choice[l] = k;
      if (k >= 0) end -= Units(inst.lists[l][k].depth, inst.unit_depth);
    }
  } else {
    double vmax = 0.0;
    for (const auto& list : inst.lists)
      for (const auto& item : list) vmax = std::max(vmax, ToDouble(item.value));
    const double scale = vmax > 0.0 ? eps * vmax / std::max(lists, 1) : 1.0;
    std::vector<std::vector<long>> scaled(lists);
    long total = 0;
    for (int l = 0; l < lists; ++l) {
      long top = 0;
      for (const auto& item : inst.lists[l]) {
        scaled[l].push_back(static_cast<long>(std::floor(ToDouble(item.value) / scale)));
        top = std::max(top, scaled[l].back());
      }
      total += top;
    }
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> minw(total + 1, kInf);
    minw[0] = 0;
    for (int l = 0; l < lists; ++l) {
      std::vector<int64_t> next(total + 1, kInf);
      choice[l].assign(total + 1, -2);
      const auto& list = inst.lists[l];
      for (long v = 0; v <= total; ++v) {
        if (minw[v] == kInf) continue;
        auto offer = [&](int k, long v2, int64_t w) {
          if (w > cap || v2 > total) return;
          if (w < next[v2]) {
            next[v2] = w;
            choice[l][v2] = static_cast<int8_t>(k);
          }
        };
        if (inst.at_most_one) offer(-1, v, minw[v]);
        for (int k = 0; k < static_cast<int>(list.size()); ++k)
          offer(k, v + scaled[l][k], minw[v] + Units(list[k].depth, inst.unit_depth));
      }
      minw.swap(next);
    }
    long end = -1;
    for (long v = total; v >= 0; --v)
      if (minw[v] <= cap) {
        end = v;
        break;
      }
    if (end < 0) throw InfeasibleError("knapsack has no feasible selection");
    for (int l = lists - 1; l >= 0; --l) {
      const int k = choice[l][end];
      sel.choice[l] = k;
      if (k >= 0) end -= scaled[l][k];
    }
  }
  for (int l = 0; l < lists; ++l) {
    const int k = sel.choice[l];
    if (k < 0) continue;
    sel.value += inst.lists[l][k].value;
    if (inst.lists[l][k].depth != kAbsent) sel.weight += PowTwoInverse(inst.lists[l][k].depth);
  }
  return sel;
}

template <typename S>
MckpSelection<S> BruteForceMckp(const MckpInstance<S>& inst) {
  const int lists = static_cast<int>(inst.lists.size());
  MckpSelection<S> best;
  bool found = false;
  std::vector<int> pick(lists, -1);
  std::function<void(int, const S&, const Rational&)> visit = [&](int l, const S& value,
                                                                  const Rational& weight) {
    if (weight > 1) return;
    if (l == lists) {
      if (!found || value > best.value || (value == best.value && weight < best.weight)) {
        best.choice = pick;
        best.value = value;
        best.weight = weight;
        found = true;
      }
      return;
    }
    if (inst.at_most_one) {
      pick[l] = -1;
      visit(l + 1, value, weight);
    }
    for (int k = 0; k < static_cast<int>(inst.lists[l].size()); ++k) {
      pick[l] = k;
      const auto& item = inst.lists[l][k];
      visit(l + 1, value + item.value,
            weight + (item.depth == kAbsent ? Rational(0) : PowTwoInverse(item.depth)));
    }
  };
  visit(0, S(0), Rational(0));
  if (!found) throw InfeasibleError("knapsack has no feasible selection");
  return best;
}

template <typename S>
Matrix<S> PlacementValues(const Matrix<S>& y, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (y.rows() != n || y.cols() != DepthColumns(n))
    throw DimensionError("opponent depth matrix must be n x (n+2)");
  Matrix<S> v(n, DepthColumns(n));
  for (int i = 0; i < n; ++i) {
    S deeper(0);
    for (int j = DepthColumns(n) - 1; j >= 0; --j) {
      v(i, j) = p[i] * (Half<S>() * y(i, j) + deeper);
      deeper += y(i, j);
    }
  }
  return v;
}

template <typename S>
CompressionResponse<S> BestResponseCompression(const Matrix<S>& opponent, const std::vector<S>& p,
                                               double eps, Mode mode) {
  const int n = static_cast<int>(p.size());
  if (n < 1) throw DomainError("compression needs at least one item");
  if (n > kCompressionCap) throw SizeError("compression duel above the size cap");
  const Matrix<S> v = PlacementValues(opponent, p);
  MckpInstance<S> inst;
  inst.unit_depth = n;
  inst.lists.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int d = n; d >= 0; --d) inst.lists[i].push_back({v(i, d), d});
    if (mode == Mode::kFail) inst.lists[i].push_back({v(i, AbsentColumn(n)), kAbsent});
  }
  const MckpSelection<S> sel = SolveMckp(inst, eps);
  CompressionResponse<S> r;
  r.profile.depths.resize(n);
  for (int i = 0; i < n; ++i) r.profile.depths[i] = inst.lists[i][sel.choice[i]].depth;
  if (mode == Mode::kNoFail) Promote(r.profile);
  for (int i = 0; i < n; ++i) r.value += v(i, Column(r.profile.depths[i], n));
  return r;
}

std::vector<DepthProfile> EnumerateProfiles(int n, Mode mode) {
  if (n < 1) throw DomainError("compression needs at least one item");
  if (n > kEnumerationCap) throw SizeError("profile enumeration above its size cap");
  const int64_t full = int64_t{1} << n;
  std::vector<DepthProfile> out;
  DepthProfile cur{std::vector<int>(n, 0)};
  std::vector<int> options;
  for (int d = 0; d <= n; ++d) options.push_back(d);
  if (mode == Mode::kFail) options.push_back(kAbsent);
  std::function<void(int, int64_t)> visit = [&](int i, int64_t used) {
    if (used > full) return;
    if (i == n) {
      if (mode == Mode::kFail || used == full) out.push_back(cur);
      return;
    }
    for (int d : options) {
      cur.depths[i] = d;
      visit(i + 1, used + Units(d, n));
    }
  };
  visit(0, 0);
  return out;
}

template <typename S>
CompressionResponse<S> BestResponseByEnumeration(const Matrix<S>& opponent,
                                                 const std::vector<S>& p, Mode mode) {
  const int n = static_cast<int>(p.size());
  const Matrix<S> v = PlacementValues(opponent, p);
  CompressionResponse<S> best;
  bool found = false;
  for (const DepthProfile& profile : EnumerateProfiles(n, mode)) {
    S value(0);
    for (int i = 0; i < n; ++i) value += v(i, Column(profile.depths[i], n));
    if (!found || value > best.value) {
      best = {profile, value};
      found = true;
    }
  }
  return best;
}

template <typename S>
FiniteDuel<S> CompressionFiniteDuel(const std::vector<S>& p, Mode mode) {
  std::vector<std::string> labels;
  std::vector<std::vector<Cost<S>>> costs;
  for (const DepthProfile& profile : EnumerateProfiles(static_cast<int>(p.size()), mode)) {
    std::string label;
    for (int d : profile.depths)
      label += (label.empty() ? "" : "-") + (d == kAbsent ? std::string("x") : std::to_string(d));
    labels.push_back(label);
    costs.push_back(DepthCosts<S>(profile));
  }
  return FiniteDuel<S>::Symmetric(labels, costs, DiscreteDistribution<S>::FromProbs(p));
}

template <typename S>
CompressionResponse<S> HuffmanBeatability(const std::vector<S>& p, Mode mode) {
  const DepthProfile h = Huffman(p);
  return BestResponseCompression(ProfileToMatrix<S>(h), p, 0.0, mode);
}

Matrix<double> CompressionPayoffMatrix(const std::vector<double>& p) {
  const int n = static_cast<int>(p.size());
  const int c = DepthColumns(n);
  Matrix<double> m(n * c, n * c);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < c; ++j) {
      m(i * c + j, i * c + j) = 0.5 * p[i];
      for (int k = j + 1; k < c; ++k) m(i * c + j, i * c + k) = p[i];
    }
  return m;
}

int DepthMatrixHalfspaceCount(int n) { return n * DepthColumns(n) + 2 * n + 1; }

learning::OracleDuel CompressionOracleDuel(const std::vector<double>& p, Mode mode,
                                           double oracle_eps) {
  const int n = static_cast<int>(p.size());
  DiscreteDistribution<double>::FromProbs(p).Validate();
  learning::OracleDuel duel;
  duel.M1 = CompressionPayoffMatrix(p);
  duel.M2 = duel.M1;
  learning::BestResponseOracle o;
  o.input_dim = o.output_dim = n * DepthColumns(n);
  o.eps = oracle_eps;
  o.respond = [p, mode, oracle_eps, n](const std::vector<double>& y) {
    const auto opp = Matrix<double>::FromRowMajor(n, DepthColumns(n), y);
    return ProfileToMatrix<double>(BestResponseCompression(opp, p, oracle_eps, mode).profile)
        .data();
  };
  o.feasible = [mode, n](const std::vector<double>& x) {
    return IsDepthMatrix(Matrix<double>::FromRowMajor(n, DepthColumns(n), x), mode);
  };
  duel.oracle1 = o;
  duel.oracle2 = o;
  duel.m1 = duel.m2 = DepthMatrixHalfspaceCount(n);
  duel.bound = 1.0;
  return duel;
}

learning::FelParams CompressionFelParams(int n, double eps, double delta) {
  const int dim = n * DepthColumns(n);
  const int m = DepthMatrixHalfspaceCount(n);
  return learning::FelParamsFrom(eps, delta, m, m, dim, dim, 1.0);
}

CompressionFelResult FelSolveCompression(const std::vector<double>& p, Mode mode,
                                         const learning::FelParams& params, const CounterRng& rng,
                                         const learning::FelOptions& options) {
  const int n = static_cast<int>(p.size());
  if (n > kCompressionCap) throw SizeError("compression duel above the size cap");
  CompressionFelResult r;
  r.params = params;
  r.fel = learning::FelSolve(CompressionOracleDuel(p, mode), params, rng, options);
  r.sigma = Matrix<double>::FromRowMajor(n, DepthColumns(n), r.fel.sigma);
  r.sigma_prime = Matrix<double>::FromRowMajor(n, DepthColumns(n), r.fel.sigma_prime);
  r.value = r.fel.value;
  r.eps_prime = r.fel.eps_prime;
  if (options.record_pure) {
    std::map<std::vector<int>, double> weight;
    const double each = 1.0 / (static_cast<double>(params.T) * params.N);
    for (const auto& round : r.fel.transcript.pure1)
      for (const auto& flat : round) {
        std::vector<int> depths(n, kAbsent);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j <= n; ++j)
            if (flat[i * DepthColumns(n) + j] > 0.5) depths[i] = j;
        weight[depths] += each;
      }
    for (const auto& [depths, w] : weight) r.mixture.push_back({DepthProfile{depths}, w});
  }
  return r;
}

#define DUELING_INSTANTIATE_COMPRESSION(S)                                                        \
  template Matrix<S> ProfileToMatrix<S>(const DepthProfile&);                                     \
  template CodeTree HuffmanTree(const std::vector<S>&);                                           \
  template DepthProfile Huffman(const std::vector<S>&);                                           \
  template StructureCheck VerifyHuffmanStructure(const CodeTree&, const std::vector<S>&);         \
  template std::vector<S> NodeWeights(const CodeTree&, const std::vector<S>&);                    \
  template bool CheckAntichainBound(const CodeTree&, const std::vector<S>&,                       \
                                    const std::vector<int>&);                                     \
  template S CompressionPayoff(const DepthProfile&, const DepthProfile&, const std::vector<S>&,   \
                               Mode);                                                             \
  template MckpSelection<S> SolveMckp(const MckpInstance<S>&, double);                            \
  template MckpSelection<S> BruteForceMckp(const MckpInstance<S>&);                               \
  template Matrix<S> PlacementValues(const Matrix<S>&, const std::vector<S>&);                    \
  template CompressionResponse<S> BestResponseCompression(const Matrix<S>&, const std::vector<S>&, \
                                                          double, Mode);                          \
  template CompressionResponse<S> BestResponseByEnumeration(const Matrix<S>&,                     \
                                                            const std::vector<S>&, Mode);         \
  template FiniteDuel<S> CompressionFiniteDuel(const std::vector<S>&, Mode);                      \
  template CompressionResponse<S> HuffmanBeatability(const std::vector<S>&, Mode);

DUELING_INSTANTIATE_COMPRESSION(double)
DUELING_INSTANTIATE_COMPRESSION(Rational)

}  // namespace compression
}  // namespace dueling
