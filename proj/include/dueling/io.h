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


#ifndef DUELING_IO_H_
#define DUELING_IO_H_

#include <string>
#include <vector>

#include "json.hpp"
#include "dueling/compression.h"
#include "dueling/hiring.h"
#include "dueling/racing.h"
#include "dueling/ranking.h"
#include "dueling/scalar.h"
#include "dueling/search.h"

namespace dueling {
namespace io {

using Json = nlohmann::ordered_json;

// A probability written as a decimal or fraction string is read exactly; a
// JSON number is read through its shortest decimal form.
Rational RationalFromJson(const Json& j);

// {"omega": [...], "p": [...]}; omega is optional.
std::vector<Rational> DistributionFromJson(const Json& j);
Json DistributionToJson(const std::vector<Rational>& p);

// {"states": [{"p": .., "delays": [..]}]}; a null delay is infinite.
racing::ParallelRace<Rational> RaceFromJson(const Json& j);
Json RaceToJson(const racing::ParallelRace<Rational>& race);

Json MatrixToJson(const Matrix<double>& m);
Json MatrixToJson(const Matrix<Rational>& m);  // entries as fraction strings

Json RankingToJson(const ranking::Ranking& r);           // {"order": [...]}
Json PolicyToJson(const hiring::HiringPolicy& policy);   // {"n": n, "pi": [[...]]}
template <typename S>
Json FlowToJson(const hiring::HiringFlow<S>& flow);      // {"p": [[...]], "q": [...]}
Json ProfileToJson(const compression::DepthProfile& d);  // {"depths": [...], "absent": [...]}
Json TreeToJson(const search::BstTree& t);               // {"root_order": depths}
// Nonzero action flows as {"i", "j", "r", "k", "flow"} entries.
template <typename S>
Json SearchFlowToJson(const search::StateActionGraph& g, const std::vector<S>& y);

// Double as a number, Rational as a fraction string.
Json ScalarToJson(double v);
Json ScalarToJson(const Rational& v);

Json ReadJsonFile(const std::string& path);

}  // namespace io
}  // namespace dueling

#endif  // DUELING_IO_H_
