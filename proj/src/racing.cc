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


#include "dueling/racing.h"

#include <algorithm>
#include <string>

#include "dueling/errors.h"

namespace dueling {
namespace racing {
namespace {

template <typename S>
Cost<S> Expected(const ParallelRace<S>& race, int e) {
  S total(0);
  for (const RaceState<S>& st : race.states) {
    if (st.p == S(0)) continue;
    if (st.delays[e].infinite) return Cost<S>::Infinity();
    total += st.p * st.delays[e].value;
  }
  return Cost<S>::Of(total);
}

}  // namespace

template <typename S>
void ParallelRace<S>::Validate() const {
  if (states.empty()) throw DomainError("race has no states");
  const int m = num_edges();
  if (m < 1) throw DomainError("race has no edges");
  std::vector<S> probs;
  for (const RaceState<S>& st : states) {
    if (static_cast<int>(st.delays.size()) != m)
      throw DimensionError("every state needs one delay per edge");
    for (const Cost<S>& d : st.delays)
      if (!d.infinite && d.value < S(0)) throw DomainError("delays must be nonnegative");
    probs.push_back(st.p);
  }
  DiscreteDistribution<S>::FromProbs(std::move(probs)).Validate();
}

template <typename S>
ParallelRace<S> ParallelRace<S>::Independent(
    const std::vector<std::vector<std::pair<S, S>>>& edges) {
  if (edges.empty()) throw DomainError("race has no edges");
  ParallelRace race;
  race.states.push_back({S(1), {}});
  for (const auto& support : edges) {
    if (support.empty()) throw DomainError("edge delay distribution is empty");
    std::vector<RaceState<S>> next;
    for (const RaceState<S>& st : race.states)
      for (const auto& [delay, prob] : support) {
        RaceState<S> s = st;
        s.p *= prob;
        s.delays.push_back(Cost<S>::Of(delay));
        next.push_back(std::move(s));
      }
    race.states = std::move(next);
  }
  race.Validate();
  return race;
}

template <typename S>
std::vector<Cost<S>> ExpectedDelays(const ParallelRace<S>& race) {
  race.Validate();
  std::vector<Cost<S>> out;
  for (int e = 0; e < race.num_edges(); ++e) out.push_back(Expected(race, e));
  return out;
}

template <typename S>
int ShortestExpectedEdge(const ParallelRace<S>& race) {
  const std::vector<Cost<S>> w = ExpectedDelays(race);
  int best = 0;
  for (int e = 1; e < static_cast<int>(w.size()); ++e)
    if (w[e] < w[best]) best = e;
  return best;
}

template <typename S>
FiniteDuel<S> RaceDuel(const ParallelRace<S>& race, TieRule tie) {
  race.Validate();
  std::vector<std::string> edges;
  std::vector<std::vector<Cost<S>>> costs(race.num_edges());
  std::vector<S> probs;
  for (int e = 0; e < race.num_edges(); ++e) edges.push_back("e" + std::to_string(e));
  for (const RaceState<S>& st : race.states) {
    probs.push_back(st.p);
    for (int e = 0; e < race.num_edges(); ++e) costs[e].push_back(st.delays[e]);
  }
  return FiniteDuel<S>::Symmetric(std::move(edges), std::move(costs),
                                  DiscreteDistribution<S>::FromProbs(std::move(probs)), tie);
}

template <typename S>
ParallelRace<S> EncodeDuelAsRace(const FiniteDuel<S>& duel) {
  duel.Validate();
  if (duel.strategies1.size() != duel.strategies2.size() ||
      !std::equal(duel.costs1.begin(), duel.costs1.end(), duel.costs2.begin()))
    throw DomainError("only symmetric duels encode as a single race");
  ParallelRace<S> race;
  for (int w = 0; w < duel.dist.size(); ++w) {
    RaceState<S> st;
    st.p = duel.dist.probs[w];
    for (const auto& row : duel.costs1) st.delays.push_back(row[w]);
    race.states.push_back(std::move(st));
  }
  race.Validate();
  return race;
}

template <typename S>
ParallelRace<S> BeatableRace(const S& eps) {
  if (!(S(0) < eps && eps < S(1))) throw DomainError("eps must lie in (0, 1)");
  ParallelRace<S> race;
  race.states.push_back({S(1) - eps, {Cost<S>::Of(eps / 2), Cost<S>::Of(S(0))}});
  race.states.push_back({eps, {Cost<S>::Of(eps / 2), Cost<S>::Of(S(1))}});
  return race;
}

template <typename S>
S ShortestEdgeBeatability(const ParallelRace<S>& race, TieRule tie) {
  const FiniteDuel<S> duel = RaceDuel(race, tie);
  std::vector<S> pure(race.num_edges(), S(0));
  pure[ShortestExpectedEdge(race)] = S(1);
  return BeatabilityOf(pure, duel);
}

template <typename S>
PoaExample<S> PoaExampleOf(const S& eps) {
  if (!(S(0) < eps && eps < S(1) / 4)) throw DomainError("eps must lie in (0, 1/4)");
  PoaExample<S> ex;
  ex.race.states.push_back({S(3) / 4, {Cost<S>::Of(eps), Cost<S>::Of(S(0))}});
  ex.race.states.push_back({S(1) / 4, {Cost<S>::Of(eps), Cost<S>::Of(S(1))}});
  const Matrix<S> m = DuelToMatrix(RaceDuel(ex.race));
  const int a = 0, b = 1;
  if (!(m(b, a) > m(a, a) && m(b, b) > m(a, b)))
    throw ContractViolation("edge b is not strictly dominant");
  ex.dominant_edge = b;
  ex.dominant_payoff = m(b, a);
  const std::vector<Cost<S>> w = ExpectedDelays(ex.race);
  ex.equilibrium_cost = w[b].value;
  ex.optimal_cost = w[a] < w[b] ? w[a].value : w[b].value;
  ex.ratio = ex.equilibrium_cost / ex.optimal_cost;
  return ex;
}

#define DUELING_INSTANTIATE_RACING(S)                                                    \
  template struct ParallelRace<S>;                                                       \
  template std::vector<Cost<S>> ExpectedDelays(const ParallelRace<S>&);                  \
  template int ShortestExpectedEdge(const ParallelRace<S>&);                             \
  template FiniteDuel<S> RaceDuel(const ParallelRace<S>&, TieRule);                      \
  template ParallelRace<S> EncodeDuelAsRace(const FiniteDuel<S>&);                       \
  template ParallelRace<S> BeatableRace(const S&);                                       \
  template S ShortestEdgeBeatability(const ParallelRace<S>&, TieRule);                   \
  template PoaExample<S> PoaExampleOf(const S&);

DUELING_INSTANTIATE_RACING(double)
DUELING_INSTANTIATE_RACING(Rational)

}  // namespace racing
}  // namespace dueling
