// Copyright 2026 The cpg Authors
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


#include "cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cpg/game_io.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace cpg::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string game(const std::string& file) { return (testing::games_dir() / file).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cpg_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, SolveBattleOfTheSexes) {
  const auto r = run({"solve", game("bos.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x=(3/5, 2/5) y=(2/5, 3/5)"), std::string::npos) << r.out;
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, SolvePrisonersDilemmaJson) {
  const auto r = run({"solve", game("pd.json"), "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_EQ(doc[0]["x"], nlohmann::json({"0", "1"}));
  EXPECT_EQ(doc[0]["y"], nlohmann::json({"0", "1"}));
  EXPECT_EQ(doc[0]["support_x"], nlohmann::json({1}));
  EXPECT_EQ(doc[0]["strict"], true);
  EXPECT_EQ(doc[0]["payoffs"], nlohmann::json({"1", "1"}));
}

TEST_F(CliTest, SolveFloatMode) {
  const auto r = run({"solve", game("leduc_empirical.json"), "--float", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 1u);
  EXPECT_NEAR(doc[0]["x"][0].get<double>(), 29.0 / 35, 1e-9);
  EXPECT_EQ(run({"solve", game("bos.json"), "--float", "--exact"}).code, 1);
}

TEST_F(CliTest, DecomposeBattleOfTheSexes) {
  const auto r = run({"decompose", game("bos.json"), "--report", path("report.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("reconstructed equilibria: 3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("agreement: true"), std::string::npos);
  const auto report = nlohmann::json::parse(slurp(path("report.json")));
  EXPECT_EQ(report["agreement"], true);
  EXPECT_EQ(report["reconstructed"].size(), 3u);
}

TEST_F(CliTest, DecomposeWithoutVerification) {
  const auto r = run({"decompose", game("bos.json"), "--no-verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("agreement"), std::string::npos);
}

TEST_F(CliTest, DecomposeNeverViolatesOnBundledGames) {
  for (const char* f : {"pd.json", "bos.json", "rps.json", "bos_extended.json",
                        "leduc_empirical.json", "fullsupport.json"}) {
    const auto r = run({"decompose", game(f)});
    EXPECT_EQ(r.code, 0) << f << r.err;
    EXPECT_NE(r.out.find("agreement: true"), std::string::npos) << f;
  }
}

TEST_F(CliTest, CounterpartsWritesGameFiles) {
  const auto r = run({"counterparts", game("bos.json"), "--out", path("cps")});
  ASSERT_EQ(r.code, 0);
  const auto first = parse_game(slurp(path("cps/bos_cp1.json")));
  const auto second = parse_game(slurp(path("cps/bos_cp2.json")));
  EXPECT_EQ(first.row_payoffs(), testing::qmat({{3, 0}, {0, 2}}));
  EXPECT_EQ(second.row_payoffs(), testing::qmat({{2, 0}, {0, 3}}));
}

TEST_F(CliTest, RestPoints) {
  const auto r = run({"restpoints", game("bos_extended.json"), "--counterpart", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("x=(11/41, 30/41, 0)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("non_nash_rest_point"), std::string::npos);
  const auto j = run({"restpoints", game("rps.json"), "--counterpart", "1", "--json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out).size(), 4u);
  EXPECT_EQ(run({"restpoints", game("rps.json"), "--counterpart", "3"}).code, 1);
}

TEST_F(CliTest, DynamicsCsv) {
  const auto r = run({"dynamics", game("pd.json"), "--system", "coupled", "--init",
                      "0.9,0.1;0.9,0.1", "--dt", "0.01", "--t-max", "0.03", "--out",
                      path("traj.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto csv = slurp(path("traj.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "t,x1,x2,y1,y2");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);

  const auto cp = run({"dynamics", game("bos_extended.json"), "--system", "cp2", "--init",
                       "1/3,1/3,1/3", "--t-max", "0.1"});
  ASSERT_EQ(cp.code, 0) << cp.err;
  EXPECT_EQ(cp.out.substr(0, cp.out.find('\n')), "t,x1,x2,x3");
}

TEST_F(CliTest, InvalidInitExitsTwoBeforeLoading) {
  for (const char* init : {"0.5,0.6;0.5,0.5", "-0.1,1.1;0.5,0.5", "a,b"}) {
    const auto r = run({"dynamics", game("missing.json"), "--system", "coupled", "--init", init});
    EXPECT_EQ(r.code, 2) << init;
    EXPECT_EQ(r.err.rfind("validation_error: ", 0) == 0 || r.err.rfind("parse_error: ", 0) == 0, true)
        << r.err;
    EXPECT_EQ(r.err.find("missing.json"), std::string::npos) << r.err;
  }
}

TEST_F(CliTest, DomainEscapeExitsThree) {
  const auto r = run({"dynamics", game("pd.json"), "--system", "coupled", "--init", "0.5,0.5;0.5,0.5",
                      "--dt", "5", "--t-max", "50"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("domain_escape: ", 0), 0u) << r.err;
}

TEST_F(CliTest, PlotCommands) {
  ASSERT_EQ(run({"plot", game("leduc_empirical.json"), "--kind", "cp1", "--out", path("cp1.svg")}).code, 0);
  const auto svg = slurp(path("cp1.svg"));
  EXPECT_EQ(std::count(svg.begin(), svg.end(), '\n') > 0, true);
  std::size_t nash = 0;
  for (const char* css : {"marker-nash-stable\"", "marker-nash-unstable\""})
    for (auto pos = svg.find(std::string("<circle class=\"") + css); pos != std::string::npos;
         pos = svg.find(std::string("<circle class=\"") + css, pos + 1))
      ++nash;
  EXPECT_EQ(nash, 1u);

  EXPECT_EQ(run({"plot", game("pd.json"), "--kind", "square", "--out", path("pd.svg"),
                 "--trajectories", "lattice", "--axes", "1,1"}).code, 0);
  EXPECT_EQ(run({"plot", game("rps.json"), "--kind", "cp1", "--out", path("rps.svg"),
                 "--trajectories", "0.5,0.3,0.2|0.4,0.4,0.2", "--grid", "10"}).code, 0);
  const auto bad = run({"plot", game("rps.json"), "--kind", "square", "--out", path("x.svg")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err.rfind("unsupported_dimension: ", 0), 0u) << bad.err;
}

TEST_F(CliTest, VerifyCommand) {
  const auto r = run({"verify", "--trials", "20", "--size", "2", "--seed", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify: pass"), std::string::npos) << r.out;
  const auto j = run({"verify", "--trials", "5", "--json"});
  ASSERT_EQ(j.code, 0);
  EXPECT_EQ(nlohmann::json::parse(j.out)["trials"], 5);
}

TEST_F(CliTest, UsageAndInputErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"solve"}).code, 1);
  EXPECT_EQ(run({"solve", game("bos.json"), "--bogus"}).code, 1);
  const auto missing = run({"solve", game("missing.json")});
  EXPECT_EQ(missing.code, 2);
  EXPECT_EQ(missing.err.rfind("parse_error: ", 0), 0u);
  EXPECT_EQ(std::count(missing.err.begin(), missing.err.end(), '\n'), 1);

  std::ofstream(path("bad.json")) << R"({"name": "g", "row_actions": ["a"], "col_actions": ["b"],
    "row_payoffs": [[1, 2]], "col_payoffs": [[1]]})";
  EXPECT_EQ(run({"solve", path("bad.json")}).code, 2);
  EXPECT_EQ(run({"decompose", path("bad.json")}).code, 2);
}

TEST_F(CliTest, OversizedGamesAreInputErrors) {
  Matrix<Rational> m(6, 6, Rational(1));
  std::ofstream(path("big.json")) << serialize_game(testing::make_game(m, m));
  const auto r = run({"decompose", path("big.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("too_large: ", 0), 0u) << r.err;
}

TEST_F(CliTest, OutputsAreDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"solve", game("fullsupport.json"), "--json"},
      {"decompose", game("bos_extended.json"), "--json"},
      {"restpoints", game("leduc_empirical.json"), "--counterpart", "2", "--json"},
      {"dynamics", game("rps.json"), "--system", "cp1", "--init", "0.5,0.3,0.2", "--t-max", "5"},
      {"verify", "--trials", "10", "--seed", "3", "--json"}};
  for (const auto& c : commands) {
    const auto a = run(c);
    const auto b = run(c);
    EXPECT_EQ(a.code, 0) << c[0];
    EXPECT_EQ(a.out, b.out) << c[0];
  }
  run({"plot", game("bos.json"), "--kind", "square", "--out", path("a.svg"), "--trajectories", "lattice"});
  run({"plot", game("bos.json"), "--kind", "square", "--out", path("b.svg"), "--trajectories", "lattice"});
  EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg")));
}

}  // namespace
}  // namespace cpg::cli
