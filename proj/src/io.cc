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


#include "dueling/io.h"

#include <fstream>

#include "dueling/errors.h"

namespace dueling {
namespace io {

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) return ParseRational(Json(j.get<double>()).dump());
  throw DomainError("expected a number or a numeric string, got " + j.dump());
}

std::vector<Rational> DistributionFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j["p"].is_array())
    throw DomainError("distribution JSON needs an array \"p\"");
  std::vector<Rational> p;
  for (const Json& v : j["p"]) p.push_back(RationalFromJson(v));
  if (j.contains("omega") && j["omega"].size() != p.size())
    throw DimensionError("\"omega\" and \"p\" differ in length");
  DiscreteDistribution<Rational>::FromProbs(p).Validate();
  return p;
}

Json DistributionToJson(const std::vector<Rational>& p) {
  Json out;
  out["omega"] = Json::array();
  out["p"] = Json::array();
  for (size_t i = 0; i < p.size(); ++i) {
    out["omega"].push_back("w" + std::to_string(i + 1));
    out["p"].push_back(FormatRational(p[i]));
  }
  return out;
}

racing::ParallelRace<Rational> RaceFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("states") || !j["states"].is_array())
    throw DomainError("race JSON needs an array \"states\"");
  racing::ParallelRace<Rational> race;
  for (const Json& s : j["states"]) {
    racing::RaceState<Rational> st;
    st.p = RationalFromJson(s.at("p"));
    for (const Json& d : s.at("delays"))
      st.delays.push_back(d.is_null() ? Cost<Rational>::Infinity()
                                      : Cost<Rational>::Of(RationalFromJson(d)));
    race.states.push_back(std::move(st));
  }
  race.Validate();
  return race;
}

Json RaceToJson(const racing::ParallelRace<Rational>& race) {
  Json states = Json::array();
  for (const auto& st : race.states) {
    Json delays = Json::array();
    for (const auto& d : st.delays)
      delays.push_back(d.infinite ? Json(nullptr) : Json(FormatRational(d.value)));
    states.push_back({{"p", FormatRational(st.p)}, {"delays", delays}});
  }
  return {{"states", states}};
}

Json ScalarToJson(double v) { return v; }
Json ScalarToJson(const Rational& v) { return FormatRational(v); }

namespace {

template <typename S>
Json MatrixToJsonImpl(const Matrix<S>& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(ScalarToJson(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json MatrixToJson(const Matrix<double>& m) { return MatrixToJsonImpl(m); }
Json MatrixToJson(const Matrix<Rational>& m) { return MatrixToJsonImpl(m); }

Json RankingToJson(const ranking::Ranking& r) { return {{"order", r.Order()}}; }

Json PolicyToJson(const hiring::HiringPolicy& policy) {
  return {{"n", policy.n}, {"pi", policy.pi}};
}

template <typename S>
Json FlowToJson(const hiring::HiringFlow<S>& flow) {
  Json p = Json::array();
  for (const auto& row : flow.p) {
    Json r = Json::array();
    for (const S& v : row) r.push_back(ScalarToJson(v));
    p.push_back(r);
  }
  Json q = Json::array();
  for (const S& v : flow.q) q.push_back(ScalarToJson(v));
  return {{"p", p}, {"q", q}};
}

Json ProfileToJson(const compression::DepthProfile& d) {
  Json depths = Json::array(), absent = Json::array();
  for (int i = 0; i < d.size(); ++i) {
    if (d.depths[i] == compression::kAbsent) {
      absent.push_back(i);
      depths.push_back(nullptr);
    } else {
      depths.push_back(d.depths[i]);
    }
  }
  return {{"depths", depths}, {"absent", absent}};
}

Json TreeToJson(const search::BstTree& t) { return {{"root_order", t.depth}}; }

template <typename S>
Json SearchFlowToJson(const search::StateActionGraph& g, const std::vector<S>& y) {
  Json edges = Json::array();
  for (size_t a = 0; a < y.size(); ++a) {
    if (y[a] == S(0)) continue;
    const search::SearchState& s = g.states()[g.actions()[a].state];
    edges.push_back({{"i", s.i}, {"j", s.j}, {"r", s.r}, {"k", g.actions()[a].k},
                     {"flow", ScalarToJson(y[a])}});
  }
  return edges;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError(path + ": " + e.what());
  }
}

template Json FlowToJson(const hiring::HiringFlow<double>&);
template Json FlowToJson(const hiring::HiringFlow<Rational>&);
template Json SearchFlowToJson(const search::StateActionGraph&, const std::vector<double>&);
template Json SearchFlowToJson(const search::StateActionGraph&, const std::vector<Rational>&);

}  // namespace io
}  // namespace dueling
