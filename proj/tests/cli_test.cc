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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "dueling/io.h"

namespace dueling {
namespace cli {
namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result RunArgs(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = Run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

io::Json Report(const std::vector<std::string>& args) {
  const Result r = RunArgs(args);
  REQUIRE(r.code == kExitOk);
  return io::Json::parse(r.out);
}

TEST_CASE("solve reports") {
  const io::Json ranking =
      Report({"solve", "--duel", "ranking", "--n", "3", "--dist", "uniform", "--solver", "lp"});
  CHECK(ranking["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(ranking["verification"]["ok"].get<bool>());
  CHECK(ranking["config"]["n"] == 3);
  CHECK(ranking["code_version"] == CodeVersion());

  const io::Json search = Report({"solve", "--duel", "search", "--n", "7", "--solver", "lp"});
  CHECK(search["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(search["verification"]["margin"].get<double>() >= -1e-6);

  const io::Json hiring = Report({"solve", "--duel", "hiring", "--n", "3", "--exact"});
  CHECK(hiring["value"] == "1/2");
  CHECK(hiring["strategy"]["policy"]["n"] == 3);

  const io::Json oracle = Report(
      {"solve", "--duel", "compression", "--n", "3", "--dist", "dyadic", "--solver", "oracle",
       "--exact"});
  CHECK(oracle["value"] == "1/2");
  CHECK(oracle["verification"]["worst_response"] == "1/2");

  const io::Json fel = Report({"solve", "--duel", "compression", "--n", "3", "--dist", "dyadic",
                               "--solver", "fel", "--seed", "1", "--rounds", "200", "--samples",
                               "20"});
  const double eps_prime = fel["strategy"]["eps_prime"].get<double>();
  CHECK(std::abs(fel["value"].get<double>() - 0.5) <= eps_prime + 1e-9);
  CHECK(fel["verification"]["ok"].get<bool>());
}

TEST_CASE("racing from a file") {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "dueling_cli_test";
  std::filesystem::create_directories(dir);
  const std::string race = (dir / "race.json").string();
  std::ofstream(race) << R"({"states": [{"p": "9/10", "delays": ["1/20", 0]},
                                       {"p": "1/10", "delays": ["1/20", 1]}]})";
  const io::Json r = Report({"solve", "--duel", "racing", "--solver", "oracle", "--race-file",
                             race, "--exact"});
  CHECK(r["value"] == "1/2");
  CHECK(r["strategy"]["mixture"][0]["strategy"] == "e1");
}

TEST_CASE("beatability rows") {
  const Result r = RunArgs({"beatability", "--duel", "ranking", "--n", "10"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.rfind("duel,n,measured,bound,config,code_version\nranking,10,0.9,0.9,", 0) == 0);
  const Result c = RunArgs({"beatability", "--duel", "compression", "--n", "5", "--dist",
                            "two-thirds"});
  CHECK(c.out.find("\ncompression,5,0.625,0.75,") != std::string::npos);
  const Result s = RunArgs({"beatability", "--duel", "search", "--r", "3"});
  CHECK(s.out.find("\nsearch,7,0.5714285714,0.5714285714,") != std::string::npos);
  const Result race = RunArgs({"beatability", "--duel", "racing", "--eps", "0.01"});
  CHECK(race.out.find("\nracing,2,0.99,1,") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(RunArgs({}).code == kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "nope"}).code == kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "ranking"}).code == kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "ranking", "--n", "3", "--dist", "zipf"}).code == kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "compression", "--n", "3", "--solver", "fel"}).code ==
        kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "search", "--n", "9", "--solver", "oracle"}).code ==
        kExitUsage);
  CHECK(RunArgs({"beatability", "--duel", "hiring", "--n", "10"}).code == kExitUsage);
  CHECK(RunArgs({"solve", "--duel", "search", "--n", "40"}).code == kExitSolverFailure);
  CHECK(RunArgs({"solve", "--duel", "ranking", "--n", "2", "--dist-file", "/nonexistent.json"})
            .code == kExitSolverFailure);
  CHECK(RunArgs({"--help"}).code == kExitOk);
}

TEST_CASE("reports are reproducible and honor the output directory") {
  const std::vector<std::string> args = {"table", "--seed", "3", "--trials", "20000"};
  const Result a = RunArgs(args);
  const Result b = RunArgs(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\nranking,n=10 p=uniform,0.9,0.9,0.9,") != std::string::npos);
  CHECK(a.out.find("\nracing,eps=1/100,0.99,1,1,") != std::string::npos);

  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "dueling_cli_test" / "reports";
  std::filesystem::remove_all(dir);
  setenv(kOutputDirEnv, dir.c_str(), 1);
  const Result c = RunArgs(args);
  unsetenv(kOutputDirEnv);
  CHECK(c.code == kExitOk);
  CHECK(c.out.empty());
  std::ifstream file(dir / "beatability_table.csv");
  std::stringstream text;
  text << file.rdbuf();
  CHECK(text.str() == a.out);
}

}  // namespace
}  // namespace cli
}  // namespace dueling
