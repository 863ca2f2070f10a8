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


#include "dueling/search.h"

#include <algorithm>
#include <functional>
#include <queue>

#include "dueling/errors.h"
#include "dueling/matching.h"

namespace dueling {
namespace search {
namespace {

void CheckSize(int n) {
  if (n < 1) throw DomainError("search needs at least one item");
  if (n > kSearchCap) throw SizeError("search duel above the size cap");
}

template <typename S>
void CheckProbs(const std::vector<S>& p) {
  CheckSize(static_cast<int>(p.size()));
  DiscreteDistribution<S>::FromProbs(p).Validate();
}

// Builds a subtree over [lo, hi] (1-based items) with `root_of` choosing the
// root; returns the root item, 0 for an empty range.
int BuildTree(BstTree& t, int lo, int hi, int depth, const std::function<int(int, int)>& root_of) {
  if (lo > hi) return 0;
  const int k = root_of(lo, hi);
  t.depth[k - 1] = depth;
  t.left[k - 1] = BuildTree(t, lo, k - 1, depth + 1, root_of);
  t.right[k - 1] = BuildTree(t, k + 1, hi, depth + 1, root_of);
  return k;
}

BstTree EmptyTree(int n) {
  BstTree t;
  t.depth.assign(n, 0);
  t.left.assign(n, 0);
  t.right.assign(n, 0);
  return t;
}

// Position (1-based) of the unique entry equal to base + 1 in [lo, hi], or
// -1 when there is not exactly one or some entry is <= base.
int UniqueRoot(const std::vector<int>& u, int lo, int hi, int base) {
  int root = -1;
  for (int k = lo; k <= hi; ++k) {
    if (u[k - 1] <= base) return -1;
    if (u[k - 1] == base + 1) {
      if (root >= 0) return -1;
      root = k;
    }
  }
  return root;
}

bool CheckRange(const std::vector<int>& u, int lo, int hi, int base) {
  if (lo > hi) return true;
  const int k = UniqueRoot(u, lo, hi, base);
  return k > 0 && CheckRange(u, lo, k - 1, base + 1) && CheckRange(u, k + 1, hi, base + 1);
}

template <typename S>
S IntervalMass(const std::vector<S>& prefix, int i, int j) {
  return prefix[j] - prefix[i - 1];
}

template <typename S>
std::vector<S> Prefix(const std::vector<S>& p) {
  std::vector<S> prefix(p.size() + 1, S(0));
  for (size_t k = 0; k < p.size(); ++k) prefix[k + 1] = prefix[k] + p[k];
  return prefix;
}

template <typename S>
Splits<S> SplitsFromPrefix(const std::vector<S>& prefix, int i, int j, int k) {
  const S total = IntervalMass(prefix, i, j);
  if (total == S(0)) {
    const S len(j - i + 1);
    return {S(k - i) / len, S(1) / len, S(j - k) / len};
  }
  return {IntervalMass(prefix, i, k - 1) / total, IntervalMass(prefix, k, k) / total,
          IntervalMass(prefix, k + 1, j) / total};
}

}  // namespace

std::string BstTree::ToString() const {
  std::string s;
  for (int d : depth) s += (s.empty() ? "" : "-") + std::to_string(d);
  return s;
}

bool DepthVectorCheck(const std::vector<int>& u) {
  return CheckRange(u, 1, static_cast<int>(u.size()), 0);
}

BstTree DepthVectorToTree(const std::vector<int>& u) {
  if (u.empty() || !DepthVectorCheck(u)) throw DomainError("not a depth vector");
  const int n = static_cast<int>(u.size());
  BstTree t = EmptyTree(n);
  // b is the depth of the parent of the range root.
  std::function<int(int, int, int)> build = [&](int lo, int hi, int b) -> int {
    if (lo > hi) return 0;
    const int k = UniqueRoot(u, lo, hi, b);
    t.depth[k - 1] = b + 1;
    t.left[k - 1] = build(lo, k - 1, b + 1);
    t.right[k - 1] = build(k + 1, hi, b + 1);
    return k;
  };
  t.root = build(1, n, 0);
  return t;
}

bool LevelBudgetHolds(const std::vector<int>& u) {
  std::vector<long> count(u.size() + 2, 0);
  for (int d : u) {
    if (d < 1 || d > static_cast<int>(u.size())) return false;
    ++count[d];
  }
  for (size_t s = 1; s < count.size() && s < 63; ++s)
    if (count[s] > (1L << (s - 1))) return false;
  return true;
}

BstTree MedianSearchTree(int n) {
  if (n < 1) throw DomainError("search needs at least one item");
  BstTree t = EmptyTree(n);
  t.root = BuildTree(t, 1, n, 1, [](int lo, int hi) { return lo + (hi - lo) / 2; });
  return t;
}

std::vector<BstTree> AllBsts(int n) {
  if (n < 1) throw DomainError("search needs at least one item");
  if (n > kEnumerationCap) throw SizeError("tree enumeration above its size cap");
  // Depth vectors of every tree over ranges of length len, relative depth 1.
  std::vector<std::vector<std::vector<int>>> by_len(n + 1);
  by_len[0] = {{}};
  for (int len = 1; len <= n; ++len)
    for (int k = 1; k <= len; ++k)
      for (const auto& l : by_len[k - 1])
        for (const auto& r : by_len[len - k]) {
          std::vector<int> u;
          for (int d : l) u.push_back(d + 1);
          u.push_back(1);
          for (int d : r) u.push_back(d + 1);
          by_len[len].push_back(std::move(u));
        }
  std::vector<BstTree> trees;
  for (const auto& u : by_len[n]) trees.push_back(DepthVectorToTree(u));
  return trees;
}

template <typename S>
Splits<S> ConditionalSplits(const std::vector<S>& p, int i, int j, int k) {
  const int n = static_cast<int>(p.size());
  if (!(1 <= i && i <= k && k <= j && j <= n)) throw DomainError("splits need i <= k <= j");
  return SplitsFromPrefix(Prefix(p), i, j, k);
}

StateActionGraph::StateActionGraph(int n) : n_(n) {
  CheckSize(n);
  index_.assign(static_cast<size_t>(n + 2) * (n + 2) * (n + 1), -1);
  auto key = [n](int i, int j, int r) {
    return (static_cast<size_t>(i) * (n + 2) + j) * (n + 1) + r;
  };
  auto get = [&](int i, int j, int r) {
    int& slot = index_[key(i, j, r)];
    if (slot < 0) {
      slot = static_cast<int>(states_.size());
      states_.push_back({i, j, r, {}});
    }
    return slot;
  };
  get(1, n, 0);
  // States are created in breadth-first order, so indices grow with r.
  for (size_t s = 0; s < states_.size(); ++s) {
    const int i = states_[s].i, j = states_[s].j, r = states_[s].r;
    for (int k = i; k <= j; ++k) {
      SearchAction a;
      a.state = static_cast<int>(s);
      a.k = k;
      if (k > i) a.left = get(i, k - 1, r + 1);
      if (k < j) a.right = get(k + 1, j, r + 1);
      states_[s].actions.push_back(static_cast<int>(actions_.size()));
      actions_.push_back(a);
    }
  }
}

int StateActionGraph::Find(int i, int j, int r) const {
  if (i < 1 || j > n_ || i > j || r < 0 || r > n_) return -1;
  return index_[(static_cast<size_t>(i) * (n_ + 2) + j) * (n_ + 1) + r];
}

int StateActionGraph::num_terminals() const {
  std::vector<bool> seen(static_cast<size_t>(n_ + 1) * (n_ + 2), false);
  int count = 0;
  for (const auto& a : actions_) {
    const size_t key = static_cast<size_t>(a.k) * (n_ + 2) + states_[a.state].r + 1;
    if (!seen[key]) {
      seen[key] = true;
      ++count;
    }
  }
  return count;
}

long StateActionGraph::num_edges() const {
  long edges = 0;
  for (const auto& a : actions_) edges += 2 + (a.left >= 0) + (a.right >= 0);
  return edges;
}

StateActionGraph BuildStateActionGraph(int n) { return StateActionGraph(n); }

template <typename S>
std::vector<Splits<S>> ActionSplits(const StateActionGraph& g, const std::vector<S>& p) {
  if (static_cast<int>(p.size()) != g.n()) throw DimensionError("distribution size differs from n");
  const std::vector<S> prefix = Prefix(p);
  std::vector<Splits<S>> out;
  out.reserve(g.actions().size());
  for (const auto& a : g.actions()) {
    const SearchState& s = g.states()[a.state];
    out.push_back(SplitsFromPrefix(prefix, s.i, s.j, a.k));
  }
  return out;
}

template <typename S>
std::vector<S> TreeToFlow(const StateActionGraph& g, const BstTree& tree, const std::vector<S>& p) {
  if (tree.size() != g.n() || static_cast<int>(p.size()) != g.n())
    throw DimensionError("tree, distribution and graph sizes differ");
  const std::vector<S> prefix = Prefix(p);
  std::vector<S> y(g.actions().size(), S(0));
  std::function<void(int, int, int, int, const S&)> visit = [&](int k, int i, int j, int r,
                                                                const S& flow) {
    if (k == 0) return;
    const int s = g.Find(i, j, r);
    if (s < 0) throw ContractViolation("tree reaches a state outside the graph");
    y[g.ActionOf(s, k)] += flow;
    const Splits<S> sp = SplitsFromPrefix(prefix, i, j, k);
    visit(tree.left[k - 1], i, k - 1, r + 1, flow * sp.left);
    visit(tree.right[k - 1], k + 1, j, r + 1, flow * sp.right);
  };
  visit(tree.root, 1, g.n(), 0, S(1));
  return y;
}

template <typename S>
double FlowViolation(const StateActionGraph& g, const std::vector<S>& p, const std::vector<S>& y) {
  if (y.size() != g.actions().size()) throw DimensionError("flow has the wrong dimension");
  const std::vector<Splits<S>> sp = ActionSplits(g, p);
  std::vector<S> in(g.states().size(), S(0));
  in[g.start()] = S(1);
  double worst = 0.0;
  for (size_t a = 0; a < y.size(); ++a) {
    worst = std::max(worst, -ToDouble(y[a]));
    const SearchAction& act = g.actions()[a];
    if (act.left >= 0) in[act.left] += sp[a].left * y[a];
    if (act.right >= 0) in[act.right] += sp[a].right * y[a];
  }
  for (size_t s = 0; s < g.states().size(); ++s) {
    S out(0);
    for (int a : g.states()[s].actions) out += y[a];
    worst = std::max(worst, std::abs(ToDouble(S(out - in[s]))));
  }
  return worst;
}

template <typename S>
Matrix<S> TerminalMass(const StateActionGraph& g, const std::vector<S>& p,
                       const std::vector<S>& y) {
  const int n = g.n();
  if (y.size() != g.actions().size()) throw DimensionError("flow has the wrong dimension");
  const std::vector<Splits<S>> sp = ActionSplits(g, p);
  Matrix<S> x(n, n);
  for (size_t a = 0; a < y.size(); ++a) {
    const SearchAction& act = g.actions()[a];
    x(g.states()[act.state].r, act.k - 1) += sp[a].equal * y[a];
  }
  return x;
}

template <typename S>
Matrix<S> ValueMatrixOf(const Matrix<S>& terminal_mass, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (terminal_mass.rows() != n || terminal_mass.cols() != n)
    throw DimensionError("terminal masses must be n x n");
  Matrix<S> v(n, n);
  for (int j = 0; j < n; ++j) {
    if (p[j] == S(0)) {
      for (int i = 0; i < n; ++i) v(i, j) = Half<S>();
      continue;
    }
    S later(0);
    for (int i = n - 1; i >= 0; --i) {
      v(i, j) = (Half<S>() * terminal_mass(i, j) + later) / p[j];
      later += terminal_mass(i, j);
    }
  }
  return v;
}

template <typename S>
Matrix<S> ValueMatrixOfTree(const BstTree& tree) {
  const int n = tree.size();
  Matrix<S> v(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 1; i <= n; ++i)
      v(i - 1, j) = tree.depth[j] > i ? S(1) : (tree.depth[j] == i ? Half<S>() : S(0));
  return v;
}

template <typename S>
Matrix<S> IndicatorOf(const BstTree& tree) {
  const int n = tree.size();
  Matrix<S> ind(n, n);
  for (int j = 0; j < n; ++j) ind(tree.depth[j] - 1, j) = S(1);
  return ind;
}

template <typename S>
Matrix<S> IndicatorOf(const Matrix<S>& terminal_mass, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  Matrix<S> ind(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      ind(i, j) = p[j] == S(0) ? S(0) : terminal_mass(i, j) / p[j];
  return ind;
}

template <typename S>
S ExpectedValue(const Matrix<S>& indicator, const Matrix<S>& value, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  if (indicator.rows() != n || indicator.cols() != n || value.rows() != n || value.cols() != n)
    throw DimensionError("indicator and value matrices must be n x n");
  S total(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (indicator(i, j) != S(0)) total += indicator(i, j) * value(i, j) * p[j];
  return total;
}

template <typename S>
Polytope<S> StatefulFlowPolytope(const StateActionGraph& g, const std::vector<S>& p) {
  const int d = static_cast<int>(g.actions().size());
  const std::vector<Splits<S>> sp = ActionSplits(g, p);
  std::vector<std::vector<S>> rows(g.states().size(), std::vector<S>(d, S(0)));
  for (size_t s = 0; s < g.states().size(); ++s)
    for (int a : g.states()[s].actions) rows[s][a] = S(1);
  for (int a = 0; a < d; ++a) {
    const SearchAction& act = g.actions()[a];
    if (act.left >= 0) rows[act.left][a] -= sp[a].left;
    if (act.right >= 0) rows[act.right][a] -= sp[a].right;
  }
  Polytope<S> poly(d);
  poly.AddNonNegativity();
  for (size_t s = 0; s < rows.size(); ++s)
    poly.AddEquality(std::move(rows[s]), s == static_cast<size_t>(g.start()) ? S(1) : S(0));
  poly.bound = 1.0;
  return poly;
}

template <typename S>
Matrix<S> SearchPayoffMatrix(const StateActionGraph& g, const std::vector<S>& p) {
  const int d = static_cast<int>(g.actions().size());
  const std::vector<Splits<S>> sp = ActionSplits(g, p);
  std::vector<std::vector<int>> by_item(g.n() + 1);
  for (int a = 0; a < d; ++a) by_item[g.actions()[a].k].push_back(a);
  Matrix<S> m(d, d);
  for (int k = 1; k <= g.n(); ++k) {
    if (p[k - 1] == S(0)) continue;
    for (int a : by_item[k])
      for (int b : by_item[k]) {
        const int ra = g.states()[g.actions()[a].state].r;
        const int rb = g.states()[g.actions()[b].state].r;
        if (ra > rb) continue;
        const S w = ra == rb ? Half<S>() : S(1);
        m(a, b) = sp[a].equal * sp[b].equal * w / p[k - 1];
      }
  }
  return m;
}

template <typename S>
BilinearDuel<S> SearchBilinearDuel(const StateActionGraph& g, const std::vector<S>& p) {
  BilinearDuel<S> duel;
  duel.K = StatefulFlowPolytope(g, p);
  duel.Kprime = duel.K;
  duel.M = SearchPayoffMatrix(g, p);
  duel.payoff2 = duel.M;
  return duel;
}

template <typename S>
BstSolution<S> SolveBstDuel(const std::vector<S>& p, const SimplexOptions& options) {
  CheckProbs(p);
  BstSolution<S> s;
  s.graph = BuildStateActionGraph(static_cast<int>(p.size()));
  s.equilibrium = SolveBilinearDuel(SearchBilinearDuel(s.graph, p), options);
  s.value = s.equilibrium.player1.value;
  s.flow = s.equilibrium.player1.x;
  s.flow2 = s.equilibrium.player2.x;
  return s;
}

template <typename S>
std::pair<BstTree, S> BestResponseBst(const Matrix<S>& value, const std::vector<S>& p) {
  const int n = static_cast<int>(p.size());
  CheckSize(n);
  if (value.rows() != n || value.cols() != n) throw DimensionError("value matrix must be n x n");
  // best[(i, j, r)] for 1 <= i <= j <= n and depth r in 1..n.
  const auto key = [n](int i, int j, int r) {
    return (static_cast<size_t>(i) * (n + 2) + j) * (n + 2) + r;
  };
  std::vector<S> best(static_cast<size_t>(n + 2) * (n + 2) * (n + 2), S(0));
  std::vector<int> choice(best.size(), 0);
  for (int len = 1; len <= n; ++len)
    for (int i = 1; i + len - 1 <= n; ++i) {
      const int j = i + len - 1;
      // Depth r is reachable only when r + len - 1 <= n.
      for (int r = n - len + 1; r >= 1; --r) {
        S top(0);
        int arg = 0;
        for (int k = i; k <= j; ++k) {
          S v = p[k - 1] * value(r - 1, k - 1);
          if (k > i) v += best[key(i, k - 1, r + 1)];
          if (k < j) v += best[key(k + 1, j, r + 1)];
          if (arg == 0 || v > top) {
            top = v;
            arg = k;
          }
        }
        best[key(i, j, r)] = top;
        choice[key(i, j, r)] = arg;
      }
    }
  BstTree t = EmptyTree(n);
  std::function<int(int, int, int)> build = [&](int i, int j, int r) -> int {
    if (i > j) return 0;
    const int k = choice[key(i, j, r)];
    t.depth[k - 1] = r;
    t.left[k - 1] = build(i, k - 1, r + 1);
    t.right[k - 1] = build(k + 1, j, r + 1);
    return k;
  };
  t.root = build(1, n, 1);
  return {t, best[key(1, n, 1)]};
}

template <typename S>
std::pair<BstTree, S> BestResponseByEnumeration(const Matrix<S>& value, const std::vector<S>& p) {
  std::pair<BstTree, S> best;
  bool found = false;
  for (const BstTree& t : AllBsts(static_cast<int>(p.size()))) {
    const S v = ExpectedValue(IndicatorOf<S>(t), value, p);
    if (!found || v > best.second) {
      best = {t, v};
      found = true;
    }
  }
  return best;
}

BstTree RoundFlow(const StateActionGraph& g, const std::vector<double>& y, CounterRng& rng) {
  if (y.size() != g.actions().size()) throw DimensionError("flow has the wrong dimension");
  BstTree t = EmptyTree(g.n());
  std::vector<double> weights;
  std::function<int(int)> visit = [&](int s) -> int {
    if (s < 0) return 0;
    const SearchState& st = g.states()[s];
    weights.clear();
    for (int a : st.actions) weights.push_back(std::max(0.0, y[a]));
    const SearchAction& act = g.actions()[st.actions[rng.Categorical(weights)]];
    t.depth[act.k - 1] = st.r + 1;
    t.left[act.k - 1] = visit(act.left);
    t.right[act.k - 1] = visit(act.right);
    return act.k;
  };
  t.root = visit(g.start());
  return t;
}

template <typename S>
FiniteDuel<S> SearchFiniteDuel(const std::vector<S>& p) {
  CheckProbs(p);
  std::vector<std::string> labels;
  std::vector<std::vector<Cost<S>>> costs;
  for (const BstTree& t : AllBsts(static_cast<int>(p.size()))) {
    labels.push_back(t.ToString());
    std::vector<Cost<S>> row;
    for (int d : t.depth) row.push_back(Cost<S>::Of(S(d)));
    costs.push_back(std::move(row));
  }
  return FiniteDuel<S>::Symmetric(labels, costs, DiscreteDistribution<S>::FromProbs(p));
}

MedianBeatability MedianBeatabilityOf(int r) {
  if (r < 3) throw DomainError("median beatability needs r >= 3");
  const int n = (1 << r) - 1;
  CheckSize(n);
  const std::vector<Rational> p(n, Rational(1, n));
  const BstTree median = MedianSearchTree(n);
  auto [response, value] = BestResponseBst(ValueMatrixOfTree<Rational>(median), p);
  MedianBeatability m;
  m.r = r;
  m.value = value;
  m.formula = Rational((1 << (r - 1)) - 1 + (1 << (r - 3)), n);
  m.response = response;
  return m;
}

DualCertificate MedianDualCertificate(int r) {
  if (r < 3) throw DomainError("the certificate needs r >= 3");
  const int n = (1 << r) - 1;
  CheckSize(n);
  // Labels per node: median depths on the left, slot depths on the right.
  std::vector<int> label;
  for (int s = 1; s <= r; ++s)
    for (int c = 0; c < (1 << (s - 1)); ++c) label.push_back(s);
  auto weight = [](int left, int right) {
    return left > right ? Rational(1) : (left == right ? Rational(1, 2) : Rational(0));
  };
  auto y_left = [r](int s) { return s == r ? Rational(1, 2) : Rational(0); };
  auto y_right = [r](int s) {
    return s <= r - 2 ? Rational(1) : (s == r - 1 ? Rational(1, 2) : Rational(0));
  };
  DualCertificate c;
  c.feasible = true;
  Matrix<Rational> w(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      w(a, b) = weight(label[a], label[b]);
      if (y_left(label[a]) + y_right(label[b]) < w(a, b)) c.feasible = false;
    }
  for (int v = 0; v < n; ++v) c.dual_value += y_left(label[v]) + y_right(label[v]);
  MaxWeightAssignment(w, &c.matching_value);
  c.bound = Rational((1 << (r - 1)) - 1 + (1 << (r - 3)));
  return c;
}

#define DUELING_INSTANTIATE_SEARCH(S)                                                            \
  template Splits<S> ConditionalSplits(const std::vector<S>&, int, int, int);                    \
  template std::vector<Splits<S>> ActionSplits(const StateActionGraph&, const std::vector<S>&);  \
  template std::vector<S> TreeToFlow(const StateActionGraph&, const BstTree&,                    \
                                     const std::vector<S>&);                                     \
  template double FlowViolation(const StateActionGraph&, const std::vector<S>&,                  \
                                const std::vector<S>&);                                          \
  template Matrix<S> TerminalMass(const StateActionGraph&, const std::vector<S>&,                \
                                  const std::vector<S>&);                                        \
  template Matrix<S> ValueMatrixOf(const Matrix<S>&, const std::vector<S>&);                     \
  template Matrix<S> ValueMatrixOfTree<S>(const BstTree&);                                       \
  template Matrix<S> IndicatorOf<S>(const BstTree&);                                             \
  template Matrix<S> IndicatorOf(const Matrix<S>&, const std::vector<S>&);                       \
  template S ExpectedValue(const Matrix<S>&, const Matrix<S>&, const std::vector<S>&);           \
  template Polytope<S> StatefulFlowPolytope(const StateActionGraph&, const std::vector<S>&);     \
  template Matrix<S> SearchPayoffMatrix(const StateActionGraph&, const std::vector<S>&);         \
  template BilinearDuel<S> SearchBilinearDuel(const StateActionGraph&, const std::vector<S>&);   \
  template BstSolution<S> SolveBstDuel(const std::vector<S>&, const SimplexOptions&);            \
  template std::pair<BstTree, S> BestResponseBst(const Matrix<S>&, const std::vector<S>&);       \
  template std::pair<BstTree, S> BestResponseByEnumeration(const Matrix<S>&,                     \
                                                           const std::vector<S>&);               \
  template FiniteDuel<S> SearchFiniteDuel(const std::vector<S>&);

DUELING_INSTANTIATE_SEARCH(double)
DUELING_INSTANTIATE_SEARCH(Rational)

}  // namespace search
}  // namespace dueling
