// Copyright 2026 The EntangleKit Authors
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

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "entanglekit/io.hpp"

namespace entanglekit {
namespace {

const std::string kDir = ENTANGLEKIT_TEST_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return kDir + "/data/" + name + ".json"; }

// Report with the timing field removed, pretty-printed.
std::string normalized_report(const std::string& text) {
  Json j = Json::parse(text);
  j.erase("timing_ms");
  return dump(j, true) + "\n";
}

struct GoldenCase {
  std::string input;
  std::vector<std::string> command;
  std::string golden;
};

const std::vector<GoldenCase> kGoldenCases = {
    {"bell", {"classify"}, "bell.classify"},
    {"product", {"classify"}, "product.classify"},
    {"correlated_classical", {"classify"}, "correlated_classical.classify"},
    {"classical_pure", {"classify"}, "classical_pure.classify"},
    {"separable_2term", {"classify"}, "separable_2term.classify"},
    {"maximally_mixed", {"classify"}, "maximally_mixed.classify"},
    {"bell", {"schmidt"}, "bell.schmidt"},
    {"product", {"schmidt"}, "product.schmidt"},
    {"bell", {"ptrace", "--keep", "1"}, "bell.ptrace1"},
    {"bell", {"ptrace", "--keep", "2"}, "bell.ptrace2"},
    {"product", {"ptrace", "--keep", "1"}, "product.ptrace1"},
    {"product", {"ptrace", "--keep", "2"}, "product.ptrace2"},
    {"separable_2term", {"ptrace", "--keep", "1"}, "separable_2term.ptrace1"},
    {"maximally_mixed", {"ptrace", "--keep", "2"}, "maximally_mixed.ptrace2"},
    {"correlated_classical", {"marginal", "--side", "1"}, "correlated_classical.marginal1"},
    {"classical_pure", {"marginal", "--side", "2"}, "classical_pure.marginal2"},
};

void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.golden; }

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesStoredReport) {
  const GoldenCase& c = GetParam();
  std::vector<std::string> args{"--json"};
  args.insert(args.end(), c.command.begin(), c.command.end());
  args.push_back(data(c.input));
  const Outcome r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string got = normalized_report(r.out);
  const std::string path = kDir + "/golden/" + c.golden + ".json";
  if (std::getenv("ENTANGLEKIT_UPDATE_GOLDEN") != nullptr) std::ofstream(path) << got;
  EXPECT_EQ(got, read_file(path)) << path;
  // Re-running yields the same report modulo timing.
  EXPECT_EQ(normalized_report(run_cli(args).out), got);
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(kGoldenCases),
                         [](const auto& info) {
                           std::string name = info.param.golden;
                           for (char& ch : name)
                             if (ch == '.') ch = '_';
                           return name;
                         });

TEST(Cli, ReducedStatesReparse) {
  for (const std::string& input : {"bell", "product", "separable_2term"}) {
    const Outcome r = run_cli({"ptrace", data(input)});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(state_type(parse_state(r.out)), "density");
  }
  const Outcome m = run_cli({"marginal", "--side", "2", data("classical_pure")});
  ASSERT_EQ(m.code, 0);
  const auto f = std::get<ClassicalState>(parse_state(m.out));
  EXPECT_EQ(f.prob("c"), 1.0);
}

TEST(Cli, TextReports) {
  const Outcome bell = run_cli({"classify", data("bell")});
  EXPECT_EQ(bell.code, 0);
  EXPECT_NE(bell.out.find("verdict: QuantumEntangledPure"), std::string::npos);
  const Outcome classical = run_cli({"classify", data("correlated_classical")});
  EXPECT_NE(classical.out.find("verdict: ClassicalSeparable"), std::string::npos);
  EXPECT_NE(classical.out.find("product terms: 2"), std::string::npos);
}

TEST(Cli, ReadsStdin) {
  const std::string text = read_file(data("bell"));
  const Outcome from_file = run_cli({"--json", "schmidt", data("bell")});
  const Outcome from_stdin = run_cli({"--json", "schmidt", "-"}, text);
  ASSERT_EQ(from_stdin.code, 0) << from_stdin.err;
  EXPECT_EQ(normalized_report(from_stdin.out), normalized_report(from_file.out));
}

TEST(Cli, ExitCodes) {
  const std::string bell = read_file(data("bell"));
  EXPECT_EQ(run_cli({"classify", "-"}, "{\"type\": ").code, 2);
  EXPECT_EQ(run_cli({"classify", "-"}, R"({"type":"qutrit"})").code, 2);
  EXPECT_EQ(run_cli({"classify", kDir + "/data/missing.json"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"marginal", data("bell")}).code, 2);
  EXPECT_EQ(run_cli({"schmidt", data("maximally_mixed")}).code, 2);
  EXPECT_EQ(run_cli({"ptrace", data("correlated_classical")}).code, 2);
  EXPECT_EQ(run_cli({"classify", "-"}, R"({"type":"classical","space":["a"],"probs":{"a":1}})").code, 2);
  EXPECT_EQ(run_cli({"verify", "--inject-fault", "no-such-suite"}).code, 2);

  const std::string unnormalized = R"({"type":"bipartite","dims":[2,2],"vec":[[1,0],[0,0],[0,0],[1,0]]})";
  EXPECT_EQ(run_cli({"schmidt", "-"}, unnormalized).code, 3);
  EXPECT_EQ(run_cli({"classify", "--dims", "2,3", data("bell")}).code, 3);
  EXPECT_EQ(run_cli({"ptrace", "--dims", "4,1", data("maximally_mixed")}).code, 3);
  EXPECT_EQ(run_cli({"classify", "-"}, R"({"type":"density","dim":2,"mat":[[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})")
                .code,
            3);

  const std::string zero = R"({"type":"bipartite","dims":[2,2],"vec":[[0,0],[0,0],[0,0],[0,0]]})";
  EXPECT_EQ(run_cli({"schmidt", "-"}, zero).code, 4);
  EXPECT_EQ(run_cli({"classify", "-"}, zero).code, 4);
}

TEST(Cli, ToleranceFromEnvironmentAndFlag) {
  const std::string rounded = R"({"type":"bipartite","dims":[2,2],"vec":[[0.7071,0],[0,0],[0,0],[0.7071,0]]})";
  EXPECT_EQ(run_cli({"classify", "-"}, rounded).code, 3);
  EXPECT_EQ(run_cli({"--tol", "1e-4", "classify", "-"}, rounded).code, 0);
  ::setenv("ENTANGLEKIT_TOL", "1e-4", 1);
  const Outcome env = run_cli({"--json", "classify", "-"}, rounded);
  const Outcome flag_wins = run_cli({"--tol", "1e-12", "classify", "-"}, rounded);
  ::unsetenv("ENTANGLEKIT_TOL");
  ASSERT_EQ(env.code, 0) << env.err;
  EXPECT_EQ(Json::parse(env.out)["tolerance"], 1e-4);
  EXPECT_EQ(flag_wins.code, 3);
  EXPECT_EQ(run_cli({"--tol", "-1", "classify", data("bell")}).code, 3);
}

TEST(Cli, VerifyPassesAndIsDeterministic) {
  const Outcome a = run_cli({"verify", "--seed", "7", "--instances", "50"});
  const Outcome b = run_cli({"verify", "--seed", "7", "--instances", "50", "--serial"});
  ASSERT_EQ(a.code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  const Outcome ja = run_cli({"--json", "verify", "--seed", "7", "--instances", "50"});
  const Outcome jb = run_cli({"--json", "verify", "--seed", "7", "--instances", "50"});
  EXPECT_EQ(normalized_report(ja.out), normalized_report(jb.out));
  EXPECT_EQ(Json::parse(ja.out)["result"]["seed"], 7);
}

TEST(Cli, VerifyDetectsInjectedFault) {
  const Outcome r = run_cli({"verify", "--instances", "20", "--inject-fault", "range-criterion"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

}  // namespace
}  // namespace entanglekit
