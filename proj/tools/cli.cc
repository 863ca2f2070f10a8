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


#include "cli.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dueling/compression.h"
#include "dueling/core.h"
#include "dueling/distributions.h"
#include "dueling/errors.h"
#include "dueling/hiring.h"
#include "dueling/io.h"
#include "dueling/racing.h"
#include "dueling/ranking.h"
#include "dueling/search.h"

#ifndef DUELING_CODE_VERSION
#define DUELING_CODE_VERSION "unknown"
#endif

namespace dueling {
namespace cli {
namespace {

using io::Json;

// Bad flags or an invalid combination of them.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Largest instance each enumeration-based solver accepts.
constexpr int kRankingOracleCap = 5;
constexpr int kSearchOracleCap = 7;

struct Config {
  std::string command;
  std::string duel;
  int n = 0;
  int r = 0;
  std::string dist = "uniform";
  std::string dist_file;
  std::string race_file;
  std::string solver = "lp";
  std::string mode = "no-fail";
  double eps = 0.05;
  double delta = 0.1;
  std::optional<uint64_t> seed;
  long trials = 1'000'000;
  long rounds = 0;
  long samples = 0;
  bool exact = false;
  std::string out;
};

Json ConfigToJson(const Config& c) {
  Json j;
  j["command"] = c.command;
  if (!c.duel.empty()) j["duel"] = c.duel;
  if (c.n > 0) j["n"] = c.n;
  if (c.r > 0) j["r"] = c.r;
  if (!c.dist_file.empty()) {
    j["dist_file"] = c.dist_file;
  } else {
    j["dist"] = c.dist;
  }
  if (!c.race_file.empty()) j["race_file"] = c.race_file;
  if (c.command == "solve") j["solver"] = c.solver;
  if (c.duel == "compression") j["mode"] = c.mode;
  j["eps"] = c.eps;
  j["delta"] = c.delta;
  j["seed"] = c.seed ? Json(*c.seed) : Json(nullptr);
  j["trials"] = c.trials;
  if (c.rounds > 0) j["rounds"] = c.rounds;
  if (c.samples > 0) j["samples"] = c.samples;
  j["exact"] = c.exact;
  return j;
}

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

uint64_t RequireSeed(const Config& c) {
  if (!c.seed) throw UsageError("this command is randomized; pass --seed");
  return *c.seed;
}

std::vector<Rational> LoadProbs(const Config& c) {
  if (!c.dist_file.empty()) {
    std::vector<Rational> p = io::DistributionFromJson(io::ReadJsonFile(c.dist_file));
    if (c.n > 0 && c.n != static_cast<int>(p.size()))
      throw UsageError("--n disagrees with the distribution file");
    return p;
  }
  if (c.n < 1) throw UsageError("--n is required");
  try {
    return NamedProbs(c.dist, c.n);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

compression::Mode LoadMode(const Config& c) {
  try {
    return compression::ModeFromString(c.mode);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

SimplexOptions LpOptions() {
  SimplexOptions options;
  options.rule = PivotRule::kDantzigThenBland;
  return options;
}

// Report body shared by every solver: value, strategy, and the payoff the
// strategy guarantees against an exact best response.
struct Outcome {
  Json value;
  Json strategy;
  Json worst_response;
  double margin = 0.0;
  double tolerance = kVerifyTolerance;
};

template <typename S>
Outcome VerifiedOutcome(const S& value, Json strategy, const Verification<S>& v) {
  Outcome o;
  o.value = io::ScalarToJson(value);
  o.strategy = std::move(strategy);
  o.worst_response = io::ScalarToJson(v.worst_value);
  o.margin = ToDouble(v.margin);
  return o;
}

template <typename S>
Outcome SolveRankingLp(const std::vector<S>& p) {
  const SimplexOptions options = LpOptions();
  const ranking::RankingSolution<S> s = ranking::SolveRankingDuel(p, options);
  const auto v = VerifyMinmax(ranking::FlattenSquare(s.x), ranking::RankingBilinearDuel(p),
                              s.value, options);
  return VerifiedOutcome(s.value, {{"matrix", io::MatrixToJson(s.x)}}, v);
}

template <typename S>
Outcome SolveHiringLp(int n) {
  const SimplexOptions options = LpOptions();
  const hiring::HiringSolution<S> s = hiring::SolveIndependentHiring<S>(n, options);
  const auto v =
      VerifyMinmax(s.flow.ToVector(), hiring::HiringBilinearDuel<S>(n), s.value, options);
  Json strategy = {{"flow", io::FlowToJson(s.flow)},
                   {"policy", io::PolicyToJson(hiring::FlowToPolicy(s.flow))}};
  return VerifiedOutcome(s.value, std::move(strategy), v);
}

template <typename S>
Outcome SolveSearchLp(const std::vector<S>& p) {
  const SimplexOptions options = LpOptions();
  const search::BstSolution<S> s = search::SolveBstDuel(p, options);
  const auto v = VerifyMinmax(s.flow, search::SearchBilinearDuel(s.graph, p), s.value, options);
  return VerifiedOutcome(s.value, {{"flow", io::SearchFlowToJson(s.graph, s.flow)}}, v);
}

template <typename S>
Outcome SolveFinite(const FiniteDuel<S>& duel) {
  const Matrix<S> m = DuelToMatrix(duel);
  const MatrixGameSolution<S> s = SolveMatrixGame(m, LpOptions());
  Json mixture = Json::array();
  for (size_t a = 0; a < s.mixed1.size(); ++a)
    if (s.mixed1[a] != S(0))
      mixture.push_back({{"strategy", duel.strategies1[a]}, {"weight", io::ScalarToJson(s.mixed1[a])}});
  const S worst = S(1) - BeatabilityOf(s.mixed1, m);
  Outcome o;
  o.value = io::ScalarToJson(s.value);
  o.strategy = {{"mixture", mixture}};
  o.worst_response = io::ScalarToJson(worst);
  o.margin = ToDouble(S(worst - s.value));
  return o;
}

template <typename S>
FiniteDuel<S> FiniteDuelFor(const Config& c) {
  auto probs = [&c] {
    if constexpr (ScalarTraits<S>::kExact) {
      return LoadProbs(c);
    } else {
      return ToDoubles(LoadProbs(c));
    }
  };
  if (c.duel == "ranking") {
    const auto p = probs();
    if (static_cast<int>(p.size()) > kRankingOracleCap)
      throw UsageError("the oracle solver enumerates rankings; use --n <= 5");
    return ranking::RankingFiniteDuel(p);
  }
  if (c.duel == "compression") {
    const auto p = probs();
    if (static_cast<int>(p.size()) > compression::kEnumerationCap)
      throw UsageError("the oracle solver enumerates code trees; use --n <= 6");
    return compression::CompressionFiniteDuel(p, LoadMode(c));
  }
  if (c.duel == "search") {
    const auto p = probs();
    if (static_cast<int>(p.size()) > kSearchOracleCap)
      throw UsageError("the oracle solver enumerates search trees; use --n <= 7");
    return search::SearchFiniteDuel(p);
  }
  if (c.duel == "racing") {
    racing::ParallelRace<Rational> race =
        c.race_file.empty() ? racing::BeatableRace(ParseRational(FormatNumber(c.eps)))
                            : io::RaceFromJson(io::ReadJsonFile(c.race_file));
    if constexpr (ScalarTraits<S>::kExact) {
      return racing::RaceDuel(race);
    } else {
      racing::ParallelRace<double> d;
      for (const auto& st : race.states) {
        racing::RaceState<double> s{ToDouble(st.p), {}};
        for (const auto& delay : st.delays)
          s.delays.push_back(delay.infinite ? Cost<double>::Infinity()
                                            : Cost<double>::Of(ToDouble(delay.value)));
        d.states.push_back(std::move(s));
      }
      return racing::RaceDuel(d);
    }
  }
  throw UsageError("the oracle solver does not support duel " + c.duel);
}

Outcome SolveFel(const Config& c) {
  if (c.duel != "compression")
    throw UsageError("the fel solver is wired for the compression duel only");
  const uint64_t seed = RequireSeed(c);
  const std::vector<double> p = ToDoubles(LoadProbs(c));
  learning::FelParams params =
      compression::CompressionFelParams(static_cast<int>(p.size()), c.eps, c.delta);
  if (c.rounds > 0) params.T = c.rounds;
  if (c.samples > 0) params.N = c.samples;
  learning::FelOptions options;
  options.record_pure = true;
  const compression::Mode mode = LoadMode(c);
  const compression::CompressionFelResult r =
      compression::FelSolveCompression(p, mode, params, CounterRng(seed), options);
  Json mixture = Json::array();
  for (const auto& [profile, weight] : r.mixture)
    mixture.push_back({{"profile", io::ProfileToJson(profile)}, {"weight", weight}});
  const double opponent =
      compression::BestResponseCompression(r.sigma, p, 0.0, mode).value;
  Outcome o;
  o.value = r.value;
  o.strategy = {{"depth_matrix", io::MatrixToJson(r.sigma)}, {"mixture", mixture},
                {"eps_prime", r.eps_prime},
                {"schedule", {{"T", params.T}, {"N", params.N}, {"R", params.R}}}};
  o.worst_response = 1.0 - opponent;
  o.margin = (1.0 - opponent) - r.value;
  o.tolerance = r.eps_prime + kVerifyTolerance;
  return o;
}

Outcome Solve(const Config& c) {
  if (c.solver == "oracle") {
    return c.exact ? SolveFinite(FiniteDuelFor<Rational>(c)) : SolveFinite(FiniteDuelFor<double>(c));
  }
  if (c.solver == "fel") return SolveFel(c);
  if (c.solver != "lp") throw UsageError("unknown solver " + c.solver);
  if (c.duel == "ranking") {
    const std::vector<Rational> p = LoadProbs(c);
    return c.exact ? SolveRankingLp(p) : SolveRankingLp(ToDoubles(p));
  }
  if (c.duel == "hiring") {
    if (c.n < 1) throw UsageError("--n is required");
    return c.exact ? SolveHiringLp<Rational>(c.n) : SolveHiringLp<double>(c.n);
  }
  if (c.duel == "search") {
    const std::vector<Rational> p = LoadProbs(c);
    return c.exact ? SolveSearchLp(p) : SolveSearchLp(ToDoubles(p));
  }
  throw UsageError("the lp solver does not support duel " + c.duel);
}

struct BeatabilityRow {
  int n = 0;
  double measured = 0.0;
  double bound = 0.0;
};

double RankingGreedyBeatability(const std::vector<Rational>& p) {
  const Matrix<Rational> greedy = ranking::GreedyRanking(p).ToMatrix<Rational>();
  return ToDouble(ranking::BestResponseRanking(greedy, p).second);
}

double HiringBeatability(int n, long trials, uint64_t seed) {
  return hiring::SimulateCommonDuel(hiring::CommonEquilibrium(n), hiring::ClassicalSecretary(n), n,
                                    trials, CounterRng(seed))
      .mean;
}

BeatabilityRow Beatability(const Config& c) {
  BeatabilityRow row;
  if (c.duel == "ranking") {
    const std::vector<Rational> p = LoadProbs(c);
    row.n = static_cast<int>(p.size());
    row.measured = RankingGreedyBeatability(p);
    row.bound = 1.0 - 1.0 / row.n;
  } else if (c.duel == "racing") {
    if (!(c.eps > 0.0 && c.eps < 1.0)) throw UsageError("--eps must lie in (0, 1)");
    row.n = 2;
    row.measured = ToDouble(racing::ShortestEdgeBeatability(
        racing::BeatableRace(ParseRational(FormatNumber(c.eps)))));
    row.bound = 1.0;
  } else if (c.duel == "hiring") {
    if (c.n < 1) throw UsageError("--n is required");
    row.n = c.n;
    row.measured = HiringBeatability(c.n, c.trials, RequireSeed(c));
    row.bound = 0.82;
  } else if (c.duel == "compression") {
    const std::vector<Rational> p = LoadProbs(c);
    row.n = static_cast<int>(p.size());
    row.measured = ToDouble(compression::HuffmanBeatability(p, LoadMode(c)).value);
    row.bound = 0.75;
  } else if (c.duel == "search") {
    int r = c.r;
    if (r == 0 && c.n > 0) {
      while ((1 << r) - 1 < c.n) ++r;
      if ((1 << r) - 1 != c.n) throw UsageError("search beatability needs n = 2^r - 1");
    }
    if (r < 3) throw UsageError("search beatability needs --r >= 3");
    const search::MedianBeatability m = search::MedianBeatabilityOf(r);
    row.n = (1 << r) - 1;
    row.measured = ToDouble(m.value);
    row.bound = ToDouble(m.formula);
  } else {
    throw UsageError("unknown duel " + c.duel);
  }
  return row;
}

std::string CsvQuote(const std::string& field) {
  std::string quoted = "\"";
  for (char ch : field) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return quoted + "\"";
}

std::string BeatabilityCsv(const Config& c, const BeatabilityRow& row) {
  std::ostringstream s;
  s << "duel,n,measured,bound,config,code_version\n";
  s << c.duel << ',' << row.n << ',' << FormatNumber(row.measured) << ','
    << FormatNumber(row.bound) << ',' << CsvQuote(ConfigToJson(c).dump()) << ','
    << CodeVersion() << '\n';
  return s.str();
}

// Fixed desk-scale parameters of the table.
constexpr int kTableRankingN = 10;
constexpr char kTableRacingEps[] = "1/100";
constexpr int kTableHiringN = 100;
constexpr int kTableCompressionN = 5;
constexpr int kTableSweepDraws = 100;
constexpr int kTableSweepMaxN = 10;
constexpr int kTableSearchR = 3;

std::string Table(const Config& c) {
  const uint64_t seed = RequireSeed(c);
  std::ostringstream s;
  s << "duel,parameters,measured,upper_bound,lower_bound,seed,code_version\n";
  auto row = [&](const std::string& duel, const std::string& params, double measured,
                 double upper, double lower) {
    s << duel << ',' << params << ',' << FormatNumber(measured) << ',' << FormatNumber(upper)
      << ',' << FormatNumber(lower) << ',' << seed << ',' << CodeVersion() << '\n';
  };
  const double ranking_bound = 1.0 - 1.0 / kTableRankingN;
  row("ranking", "n=10 p=uniform", RankingGreedyBeatability(UniformProbs(kTableRankingN)),
      ranking_bound,
      ranking_bound);
  row("racing", "eps=1/100",
      ToDouble(racing::ShortestEdgeBeatability(racing::BeatableRace(ParseRational(kTableRacingEps)))),
      1.0, 1.0);
  row("hiring", "n=100 trials=" + std::to_string(c.trials) + " equilibrium-vs-classical",
      HiringBeatability(kTableHiringN, c.trials, seed), 0.82, 0.51);
  row("compression", "n=5 p=two-thirds",
      ToDouble(compression::HuffmanBeatability(TwoThirdsProbs(kTableCompressionN),
                                               compression::Mode::kNoFail)
                   .value),
      0.75, 2.0 / 3.0);
  double sweep_max = 0.0;
  const CounterRng sweep_rng(seed);
  for (int k = 0; k < kTableSweepDraws; ++k) {
    CounterRng rng = sweep_rng.Split(k);
    const int n = 2 + k % (kTableSweepMaxN - 1);
    const double v = ToDouble(
        compression::HuffmanBeatability(RandomProbs(n, rng), compression::Mode::kNoFail).value);
    sweep_max = std::max(sweep_max, v);
  }
  row("compression", "random p n<=10 draws=100 max", sweep_max, 0.75, 2.0 / 3.0);
  const search::MedianBeatability m = search::MedianBeatabilityOf(kTableSearchR);
  row("search", "r=3 n=7 uniform", ToDouble(m.value), 0.625, 0.625);
  return s.str();
}

std::string DefaultFileName(const Config& c) {
  if (c.command == "table") return "beatability_table.csv";
  const std::string n = c.n > 0 ? "_n" + std::to_string(c.n) : "";
  if (c.command == "beatability") return "beatability_" + c.duel + n + ".csv";
  return "solve_" + c.duel + n + "_" + c.solver + ".json";
}

void Emit(const Config& c, const std::string& text, std::ostream& out) {
  std::string path = c.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      std::filesystem::create_directories(dir);
      path = (std::filesystem::path(dir) / DefaultFileName(c)).string();
    }
  }
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

void AddInstanceFlags(CLI::App* sub, Config& c) {
  sub->add_option("--duel", c.duel, "ranking, hiring, compression, search or racing")
      ->required()
      ->check(CLI::IsMember({"ranking", "hiring", "compression", "search", "racing"}));
  sub->add_option("--n", c.n, "instance size");
  sub->add_option("--dist", c.dist,
                  "uniform, dyadic, two-thirds or perturbed-uniform(eps)");
  sub->add_option("--dist-file", c.dist_file, "distribution JSON {\"p\": [...]}");
  sub->add_option("--mode", c.mode, "compression mode: no-fail or fail");
  sub->add_option("--eps", c.eps, "accuracy target (fel) or racing epsilon");
  sub->add_option("--seed", c.seed, "seed for randomized commands");
  sub->add_option("--trials", c.trials, "simulation trials");
  sub->add_option("--out", c.out, "output file");
}

}  // namespace

std::string CodeVersion() { return DUELING_CODE_VERSION; }

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Solvers and beatability reports for dueling algorithms", "dueling"};
  app.require_subcommand(1);
  CLI::App* solve = app.add_subcommand("solve", "solve a duel and verify the strategy");
  AddInstanceFlags(solve, c);
  solve->add_option("--solver", c.solver, "lp, fel or oracle")
      ->check(CLI::IsMember({"lp", "fel", "oracle"}));
  solve->add_option("--delta", c.delta, "failure probability (fel)");
  solve->add_option("--rounds", c.rounds, "override the fel round count T");
  solve->add_option("--samples", c.samples, "override the fel perturbation samples N");
  solve->add_option("--race-file", c.race_file, "race JSON for the racing duel");
  solve->add_flag("--exact", c.exact, "rational arithmetic");
  CLI::App* beat = app.add_subcommand("beatability", "beatability of the classic algorithm");
  AddInstanceFlags(beat, c);
  beat->add_option("--r", c.r, "search depth, n = 2^r - 1");
  CLI::App* table = app.add_subcommand("table", "reproduce the beatability table");
  table->add_option("--seed", c.seed, "seed")->required();
  table->add_option("--trials", c.trials, "hiring simulation trials");
  table->add_option("--out", c.out, "output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kExitOk : kExitUsage;
  }
  c.command = solve->parsed() ? "solve" : beat->parsed() ? "beatability" : "table";

  try {
    if (c.command == "solve") {
      const Outcome o = Solve(c);
      const bool ok = o.margin >= -o.tolerance;
      Json report;
      report["config"] = ConfigToJson(c);
      report["code_version"] = CodeVersion();
      report["value"] = o.value;
      report["strategy"] = o.strategy;
      report["verification"] = {{"worst_response", o.worst_response},
                                {"margin", o.margin},
                                {"tolerance", o.tolerance},
                                {"ok", ok}};
      Emit(c, report.dump(2) + "\n", out);
      if (!ok) {
        err << "verification failed: margin " << o.margin << "\n";
        return kExitVerificationFailure;
      }
    } else if (c.command == "beatability") {
      Emit(c, BeatabilityCsv(c, Beatability(c)), out);
    } else {
      Emit(c, Table(c), out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << "\n";
    return kExitSolverFailure;
  }
  return kExitOk;
}

}  // namespace cli
}  // namespace dueling
