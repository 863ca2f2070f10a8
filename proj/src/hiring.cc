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


#include "dueling/hiring.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "dueling/errors.h"

namespace dueling {
namespace hiring {
namespace {

template <typename S>
S FromRational(const Rational& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x;
  } else {
    return static_cast<double>(x);
  }
}

Rational Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  k = std::min(k, n - k);
  Rational c(1);
  for (int t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

// Pr[the j-th best of the first i beats every later candidate].
Rational BeatsRest(int n, int i, int j) { return Binomial(i, j) / Binomial(n, j); }

void CheckSize(int n) {
  if (n < 1) throw DomainError("hiring needs at least one candidate");
}

void CheckPolicy(const CommonDuelPolicy& p, int n) {
  p.pre.Validate();
  if (p.pre.n != n) throw DimensionError("policy was built for a different n");
}

// Projected rank (1 = best so far) of each candidate given overall ranks.
class Fenwick {
 public:
  explicit Fenwick(int n) : tree_(n + 1, 0) {}
  void Add(int pos) {
    for (; pos < static_cast<int>(tree_.size()); pos += pos & -pos) ++tree_[pos];
  }
  int Prefix(int pos) const {
    int s = 0;
    for (; pos > 0; pos -= pos & -pos) s += tree_[pos];
    return s;
  }

 private:
  std::vector<int> tree_;
};

bool Offers(const CommonDuelPolicy& policy, int i, int j, int rank, int opponent_hire,
            CounterRng* rng) {
  if (opponent_hire > 0 && policy.react) return rank < opponent_hire;
  const double pr = policy.pre.at(i, j);
  if (pr >= 1.0) return true;
  if (pr <= 0.0) return false;
  if (rng == nullptr) throw DomainError("randomized policy needs a random stream");
  return rng->Uniform() < pr;
}

// Twice the score of `a` on one interview order; rank[t] is the overall rank
// (1 = best) of the t-th candidate.
int PlayOrder(const CommonDuelPolicy& a, const CommonDuelPolicy& b, const std::vector<int>& rank,
              CounterRng* rng) {
  const int n = static_cast<int>(rank.size());
  Fenwick seen(n);
  int hire_a = 0, hire_b = 0;
  for (int t = 1; t <= n; ++t) {
    const int r = rank[t - 1];
    const int j = seen.Prefix(r) + 1;
    seen.Add(r);
    const bool offer_a = hire_a == 0 && Offers(a, t, j, r, hire_b, rng);
    const bool offer_b = hire_b == 0 && Offers(b, t, j, r, hire_a, rng);
    if (offer_a) hire_a = r;
    if (offer_b) hire_b = r;
  }
  if (hire_a == 0 && hire_b == 0) return 1;
  if (hire_b == 0) return 2;
  if (hire_a == 0) return 0;
  return hire_a < hire_b ? 2 : (hire_a == hire_b ? 1 : 0);
}

bool IsThreshold(const HiringPolicy& p) {
  for (const auto& row : p.pi)
    for (double v : row)
      if (v != 0.0 && v != 1.0) return false;
  return true;
}

}  // namespace

HiringPolicy HiringPolicy::Never(int n) {
  CheckSize(n);
  HiringPolicy p;
  p.n = n;
  for (int i = 1; i <= n; ++i) p.pi.emplace_back(i, 0.0);
  return p;
}

void HiringPolicy::Validate() const {
  CheckSize(n);
  if (static_cast<int>(pi.size()) != n) throw DimensionError("policy needs n rounds");
  for (int i = 1; i <= n; ++i) {
    if (static_cast<int>(pi[i - 1].size()) != i)
      throw DimensionError("round i of a policy needs i entries");
    for (double v : pi[i - 1])
      if (!(v >= 0.0 && v <= 1.0)) throw DomainError("offer probabilities must lie in [0, 1]");
  }
}

CommonDuelPolicy CommonEquilibrium(int n) {
  CheckSize(n);
  CommonDuelPolicy p{HiringPolicy::Never(n), true, "equilibrium"};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (2 * Binomial(i, j) >= Binomial(n, j)) p.pre.pi[i - 1][j - 1] = 1.0;
  return p;
}

CommonDuelPolicy ClassicalSecretary(int n) {
  CheckSize(n);
  CommonDuelPolicy p{HiringPolicy::Never(n), false, "classical"};
  const int skip = static_cast<int>(std::floor(n / std::exp(1.0)));
  for (int i = skip + 1; i <= n; ++i) p.pre.pi[i - 1][0] = 1.0;
  std::fill(p.pre.pi[n - 1].begin(), p.pre.pi[n - 1].end(), 1.0);
  return p;
}

CommonDuelPolicy ThresholdPolicy(const std::vector<int>& thresholds, bool react) {
  const int n = static_cast<int>(thresholds.size());
  CommonDuelPolicy p{HiringPolicy::Never(n), react, "threshold"};
  for (int i = 1; i <= n; ++i) {
    if (thresholds[i - 1] < 0 || thresholds[i - 1] > i)
      throw DomainError("threshold at round i must lie in 0..i");
    for (int j = 1; j <= thresholds[i - 1]; ++j) p.pre.pi[i - 1][j - 1] = 1.0;
  }
  return p;
}

SimulationResult SimulateCommonDuel(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n,
                                    long trials, const CounterRng& rng) {
  CheckPolicy(a, n);
  CheckPolicy(b, n);
  if (trials < 1) throw DomainError("need at least one trial");
  double sum = 0.0, sum_sq = 0.0;
  for (long k = 0; k < trials; ++k) {
    CounterRng trial = rng.Split(static_cast<uint64_t>(k));
    std::vector<int> rank = trial.Permutation(n);
    for (int& r : rank) ++r;
    const double score = 0.5 * PlayOrder(a, b, rank, &trial);
    sum += score;
    sum_sq += score * score;
  }
  SimulationResult res;
  res.trials = trials;
  res.mean = sum / trials;
  const double var = trials > 1 ? std::max(0.0, (sum_sq - sum * res.mean) / (trials - 1)) : 0.0;
  res.ci99 = 2.5758293035489 * std::sqrt(var / trials);
  return res;
}

Rational CommonDuelExactPayoff(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n) {
  CheckPolicy(a, n);
  CheckPolicy(b, n);
  if (!IsThreshold(a.pre) || !IsThreshold(b.pre) || !a.react || !b.react)
    throw DomainError("exact common payoff needs deterministic reacting policies");
  Rational reach(1), total(0);
  for (int i = 1; i <= n; ++i) {
    Rational round(0);
    int hires = 0;
    for (int j = 1; j <= i; ++j) {
      const bool ha = a.pre.at(i, j) == 1.0, hb = b.pre.at(i, j) == 1.0;
      if (ha || hb) ++hires;
      if (ha && hb) {
        round += Half<Rational>();
      } else if (ha) {
        round += BeatsRest(n, i, j);
      } else if (hb) {
        round += 1 - BeatsRest(n, i, j);
      }
    }
    total += reach * round / i;
    reach *= Rational(i - hires, i);
  }
  return total + reach * Half<Rational>();
}

Rational CommonDuelEnumeratedPayoff(const CommonDuelPolicy& a, const CommonDuelPolicy& b, int n) {
  CheckPolicy(a, n);
  CheckPolicy(b, n);
  if (n > 10) throw SizeError("enumeration is limited to n <= 10");
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  long twice = 0, orders = 0;
  do {
    twice += PlayOrder(a, b, rank, nullptr);
    ++orders;
  } while (std::next_permutation(rank.begin(), rank.end()));
  return Rational(twice, 2 * orders);
}

DeviationScan ScanThresholdDeviations(int n) {
  CheckSize(n);
  if (n > 10) throw SizeError("deviation scan is limited to n <= 10");
  std::vector<int> eq(n + 1, 0);  // equilibrium threshold per round
  const CommonDuelPolicy equilibrium = CommonEquilibrium(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      if (equilibrium.pre.at(i, j) == 1.0) eq[i] = j;
  // prefix[i][t] = sum_{j <= t} C(i, j) / C(n, j).
  std::vector<std::vector<Rational>> prefix(n + 1);
  for (int i = 1; i <= n; ++i) {
    prefix[i].assign(i + 1, Rational(0));
    for (int j = 1; j <= i; ++j) prefix[i][j] = prefix[i][j - 1] + BeatsRest(n, i, j);
  }
  DeviationScan scan;
  scan.best_payoff = Rational(-1);
  std::vector<int> t(n + 1, 0);
  std::function<void(int, const Rational&, const Rational&)> visit =
      [&](int i, const Rational& reach, const Rational& acc) {
        if (i > n) {
          ++scan.deviations;
          const Rational total = acc + reach * Half<Rational>();
          if (total > scan.best_payoff) {
            scan.best_payoff = total;
            scan.best_thresholds.assign(t.begin() + 1, t.end());
          }
          return;
        }
        const int tb = eq[i];
        for (int ta = 0; ta <= i; ++ta) {
          t[i] = ta;
          const int both = std::min(ta, tb);
          // j <= both: tie; both < j <= ta: a alone; both < j <= tb: b alone.
          Rational round = Half<Rational>() * both + (prefix[i][ta] - prefix[i][both]) +
                           Rational(tb - both) - (prefix[i][tb] - prefix[i][both]);
          visit(i + 1, reach * Rational(i - std::max(ta, tb), i), acc + reach * round / i);
        }
      };
  visit(1, Rational(1), Rational(0));
  return scan;
}

template <typename S>
S RankPosterior(int n, int i, int j, int r) {
  if (!(1 <= j && j <= i && i <= n && 1 <= r && r <= n))
    throw DomainError("posterior needs 1 <= j <= i <= n and 1 <= r <= n");
  return FromRational<S>(Binomial(r - 1, j - 1) * Binomial(n - r, i - j) / Binomial(n, i));
}

Rational RankPosteriorAlternative(int n, int i, int j, int r) {
  if (!(1 <= j && j <= i && i <= n && 1 <= r && r <= n))
    throw DomainError("posterior needs 1 <= j <= i <= n and 1 <= r <= n");
  return Binomial(r - 1, j - 1) * Binomial(n - r + 1, i - j) / Binomial(n - 1, i - 1) *
         Rational(i, n);
}

template <typename S>
Matrix<S> HiringPayoffTensor(int n) {
  CheckSize(n);
  if (n > kHiringCap) throw SizeError("hiring duel above the size cap");
  const int d = NoHireIndex(n) + 1;
  std::vector<std::vector<S>> post(d - 1, std::vector<S>(n + 1, S(0)));
  std::vector<std::vector<S>> worse(d - 1, std::vector<S>(n + 2, S(0)));  // Pr[rank > r]
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      const int a = FlowIndex(i, j);
      for (int r = 1; r <= n; ++r) post[a][r] = RankPosterior<S>(n, i, j, r);
      for (int r = n - 1; r >= 0; --r) worse[a][r] = worse[a][r + 1] + post[a][r + 1];
    }
  Matrix<S> m(d, d);
  for (int a = 0; a < d - 1; ++a) {
    for (int b = 0; b < d - 1; ++b) {
      S v(0);
      for (int r = 1; r <= n; ++r)
        if (post[a][r] != S(0)) v += post[a][r] * (worse[b][r] + Half<S>() * post[b][r]);
      m(a, b) = v;
    }
    m(a, d - 1) = S(1);
  }
  m(d - 1, d - 1) = Half<S>();
  return m;
}

template <typename S>
Polytope<S> HiringFlowPolytope(int n) {
  CheckSize(n);
  const int d = NoHireIndex(n) + 1;
  Polytope<S> poly(d);
  poly.AddNonNegativity();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      // i p_ij + sum_{i' < i} p_i'j' <= 1.
      std::vector<S> w(d, S(0));
      for (int k = 0; k < FlowIndex(i, 1); ++k) w[k] = S(-1);
      w[FlowIndex(i, j)] = S(-i);
      poly.AddInequality(std::move(w), S(-1));
    }
  poly.AddEquality(std::vector<S>(d, S(1)), S(1));
  poly.bound = 1.0;
  return poly;
}

template <typename S>
BilinearDuel<S> HiringBilinearDuel(int n) {
  BilinearDuel<S> duel;
  duel.K = HiringFlowPolytope<S>(n);
  duel.Kprime = duel.K;
  duel.M = HiringPayoffTensor<S>(n);
  duel.payoff2 = duel.M;
  return duel;
}

template <typename S>
void HiringFlow<S>::RecomputeReach() {
  q.assign(n + 1, S(0));
  q[0] = S(1);
  for (int i = 1; i <= n; ++i) q[i] = q[i - 1] - Sum(p[i - 1]);
}

template <typename S>
std::vector<S> HiringFlow<S>::ToVector() const {
  std::vector<S> v;
  for (const auto& row : p) v.insert(v.end(), row.begin(), row.end());
  v.push_back(q[n]);
  return v;
}

template <typename S>
HiringFlow<S> HiringFlow<S>::FromVector(const std::vector<S>& v, int n) {
  CheckSize(n);
  if (static_cast<int>(v.size()) != NoHireIndex(n) + 1)
    throw DimensionError("flow vector needs n(n+1)/2 + 1 entries");
  HiringFlow f;
  f.n = n;
  for (int i = 1; i <= n; ++i)
    f.p.emplace_back(v.begin() + FlowIndex(i, 1), v.begin() + FlowIndex(i, 1) + i);
  f.RecomputeReach();
  return f;
}

template <typename S>
double HiringFlow<S>::Violation() const {
  double worst = 0.0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) {
      const double pij = ToDouble(p[i - 1][j - 1]);
      worst = std::max({worst, -pij, pij - ToDouble(q[i - 1]) / i});
    }
  return std::max(worst, -ToDouble(q[n]));
}

template <typename S>
HiringSolution<S> SolveIndependentHiring(int n, const SimplexOptions& options) {
  CheckSize(n);
  if (n > kHiringCap) throw SizeError("hiring duel above the size cap");
  HiringSolution<S> s;
  s.equilibrium = SolveBilinearDuel(HiringBilinearDuel<S>(n), options);
  s.value = s.equilibrium.player1.value;
  s.flow = HiringFlow<S>::FromVector(s.equilibrium.player1.x, n);
  s.flow2 = HiringFlow<S>::FromVector(s.equilibrium.player2.x, n);
  return s;
}

template <typename S>
HiringPolicy FlowToPolicy(const HiringFlow<S>& flow) {
  constexpr double kTol = 1e-9;
  HiringPolicy policy = HiringPolicy::Never(flow.n);
  for (int i = 1; i <= flow.n; ++i) {
    const double q = ToDouble(flow.q[i - 1]);
    for (int j = 1; j <= i; ++j) {
      const double pij = ToDouble(flow.p[i - 1][j - 1]);
      if (pij < -kTol || pij > q / i + kTol)
        throw DomainError("flow violates 0 <= p_ij <= q_i / i");
      if (q > 1e-12) policy.pi[i - 1][j - 1] = std::clamp(pij * i / q, 0.0, 1.0);
    }
  }
  return policy;
}

HiringFlow<double> PolicyToFlow(const HiringPolicy& policy) {
  policy.Validate();
  HiringFlow<double> f;
  f.n = policy.n;
  f.q.assign(policy.n + 1, 0.0);
  f.q[0] = 1.0;
  for (int i = 1; i <= policy.n; ++i) {
    f.p.emplace_back(i, 0.0);
    double hired = 0.0;
    for (int j = 1; j <= i; ++j) {
      f.p[i - 1][j - 1] = f.q[i - 1] * policy.at(i, j) / i;
      hired += f.p[i - 1][j - 1];
    }
    f.q[i] = f.q[i - 1] - hired;
  }
  return f;
}

std::string PolicySimulation::ToCsv() const {
  std::ostringstream os;
  os.precision(17);
  os << "kind,i,j,value\n";
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < p[i].size(); ++j)
      os << "p," << i + 1 << "," << j + 1 << "," << p[i][j] << "\n";
  os << "no_hire,,," << no_hire << "\n";
  for (size_t r = 0; r < hire_rank.size(); ++r)
    os << "hire_rank," << r + 1 << ",," << hire_rank[r] << "\n";
  return os.str();
}

PolicySimulation SimulatePolicy(const HiringPolicy& policy, int n, long trials,
                                const CounterRng& rng) {
  policy.Validate();
  if (policy.n != n) throw DimensionError("policy was built for a different n");
  if (trials < 1) throw DomainError("need at least one trial");
  PolicySimulation sim;
  sim.trials = trials;
  for (int i = 1; i <= n; ++i) sim.p.emplace_back(i, 0.0);
  sim.hire_rank.assign(n, 0.0);
  long none = 0;
  for (long k = 0; k < trials; ++k) {
    CounterRng trial = rng.Split(static_cast<uint64_t>(k));
    std::vector<int> rank = trial.Permutation(n);
    Fenwick seen(n);
    bool hired = false;
    for (int t = 1; t <= n && !hired; ++t) {
      const int r = rank[t - 1] + 1;
      const int j = seen.Prefix(r) + 1;
      seen.Add(r);
      const double pr = policy.at(t, j);
      if (pr >= 1.0 || (pr > 0.0 && trial.Uniform() < pr)) {
        hired = true;
        sim.p[t - 1][j - 1] += 1.0;
        sim.hire_rank[r - 1] += 1.0;
      }
    }
    if (!hired) ++none;
  }
  const double T = static_cast<double>(trials);
  for (auto& row : sim.p)
    for (double& v : row) v /= T;
  for (double& v : sim.hire_rank) v /= T;
  sim.no_hire = none / T;
  return sim;
}

#define DUELING_INSTANTIATE_HIRING(S)                                               \
  template S RankPosterior<S>(int, int, int, int);                                  \
  template Matrix<S> HiringPayoffTensor<S>(int);                                    \
  template Polytope<S> HiringFlowPolytope<S>(int);                                  \
  template BilinearDuel<S> HiringBilinearDuel<S>(int);                              \
  template struct HiringFlow<S>;                                                    \
  template HiringSolution<S> SolveIndependentHiring<S>(int, const SimplexOptions&); \
  template HiringPolicy FlowToPolicy(const HiringFlow<S>&);

DUELING_INSTANTIATE_HIRING(double)
DUELING_INSTANTIATE_HIRING(Rational)

}  // namespace hiring
}  // namespace dueling
