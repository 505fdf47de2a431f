// Copyright 2026 The primesym Authors
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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "primesym/cli.hpp"

namespace primesym {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

TEST(Cli, SieveWord) {
  const Outcome r = cli({"sieve", "--steps", "2", "--emit", "word"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "RLRRRL\n");
}

TEST(Cli, KneadJson) {
  const Outcome r = cli({"knead-u", "--word", "RL(R)^inf", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"u\":1.5436"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("\"matched_prefix_len\":"), std::string::npos);
  EXPECT_NE(r.out.find("\"horizon\":1024"), std::string::npos);
}

TEST(Cli, GoldbachSingle) {
  const Outcome r = cli({"goldbach", "--n", "10"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "10,2\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"sieve", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"compare", "--a", "RL"}).code, kExitUsage);
  EXPECT_EQ(cli({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
  EXPECT_EQ(cli({"sieve", "--help"}).code, kExitOk);

  const Outcome bad = cli({"knead-u", "--word", "RX"});
  EXPECT_EQ(bad.code, kExitComputation);
  EXPECT_EQ(bad.err.rfind("error: ", 0), 0u) << bad.err;
  EXPECT_TRUE(bad.out.empty());

  EXPECT_EQ(cli({"goldbach", "--n", "7"}).code, kExitComputation);
  EXPECT_EQ(cli({"sieve", "--steps", "3", "--emit", "primes", "--limit", "50"}).code,
            kExitComputation);
}

TEST(Cli, Version) {
  const Outcome r = cli({"--version"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "primesym 0.1.0\n");
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"bifurcation", "--steps", "5", "--keep", "4", "--transient", "50"},
      {"lyapunov", "--u", "1.8", "--n", "20000"},
      {"entropy", "--word", "RLR^3LRC"},
      {"verify", "--suite", "sieve"},
  };
  for (const auto& args : cases) {
    EXPECT_EQ(cli(args).out, cli(args).out) << args.front();
  }
}

// Every library operation is reachable from some invocation.
TEST(Cli, CoversEveryOperation) {
  struct Case {
    std::vector<std::string> args;
    std::string expected;
  };
  const std::vector<Case> cases = {
      {{"sieve", "--steps", "2", "--emit", "next"}, "RLLLL\n"},
      {{"sieve", "--emit", "mword", "--p", "3"}, "RLL\n"},
      {{"sieve", "--steps", "2", "--emit", "symbol", "--at", "25"}, "L\n"},
      {{"sieve", "--steps", "2", "--emit", "gaps", "--gap", "4", "--lo", "2", "--hi", "30"}, "4\n"},
      {{"sieve", "--steps", "2", "--emit", "primes", "--limit", "25"}, "5\n7\n11\n13\n17\n19\n23\n"},
      {{"sieve", "--emit", "classic", "--limit", "10"}, "2\n3\n5\n7\n"},
      {{"sieve", "--steps", "2", "--cap", "8", "--emit", "state"},
       "{\"version\":1,\"i\":2,\"primes\":[2,3],\"cap\":8,\"prefix\":\"a2\",\"full_period\":\"6\"}\n"},
      {{"compose", "--a", "RL", "--b", "RRL"}, "R^5L\n"},
      {{"compose", "--a", "RL", "--b", "RRL", "--emit", "period"}, "6\n"},
      {{"star", "--p", "RC", "--q", "RLC"}, "RLRRRC\n"},
      {{"star", "--p", "RC", "--power", "3"}, "RLRRRLRC\n"},
      {{"compare", "--a", "RLC", "--b", "RC"}, "Greater\n"},
      {{"admissible", "--word", "RLC"}, "true\n"},
      {{"admissible", "--word", "RR(L)^inf"}, "false\n"},
      {{"itinerary", "--u", "2", "--n", "5"}, "RLLLL\n"},
      {{"itinerary", "--u", "2", "--n", "3", "--orbit", "--x0", "0"}, "1\n-1\n-1\n"},
      {{"entropy", "--laps", "--u", "2", "--n", "5"}, "32\n"},
      {{"bands", "--u", "1.52"}, "2\n"},
      {{"twins", "--lo", "3", "--hi", "7"}, "2\n"},
      {{"goldbach", "--from", "4", "--to", "8"}, "4,1\n6,1\n8,1\n"},
      {{"estimate", "--p", "11", "--compare"},
       "p,estimate,actual,ratio\n11,20.643103375500193,25,0.82572413502000774\n"},
  };
  for (const auto& c : cases) {
    const Outcome r = cli(c.args);
    EXPECT_EQ(r.code, kExitOk) << c.args.front() << ": " << r.err;
    EXPECT_EQ(r.out, c.expected) << c.args.front() << " " << c.args.at(1);
  }

  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"knead-u", "--word", "RLC"},
        {"entropy", "--word", "RLC"},
        {"lyapunov", "--u", "2", "--n", "10000"}}) {
    const Outcome r = cli(args);
    EXPECT_EQ(r.code, kExitOk) << args.front();
    EXPECT_FALSE(r.out.empty());
    EXPECT_NO_THROW((void)std::stod(r.out)) << r.out;
  }
}

TEST(Cli, VerifyTable) {
  const Outcome r = cli({"verify", "--suite", "inverse"});
  EXPECT_EQ(r.code, kExitOk);
  const auto got = lines(r.out);
  ASSERT_EQ(got.size(), 7u) << r.out;
  for (const auto& line : got) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
}

TEST(Cli, VerifyUnknownSuite) {
  EXPECT_NE(cli({"verify", "--suite", "nope"}).code, kExitOk);
}

TEST(Cli, BifurcationCsvAndSvg) {
  const auto path = std::filesystem::temp_directory_path() / "primesym_cli_test.svg";
  std::filesystem::remove(path);
  const Outcome r = cli({"bifurcation", "--u-min", "1.4", "--u-max", "1.6", "--steps", "6", "--keep",
                     "5", "--transient", "100", "--svg", path.string(), "--parallel"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 31u);
  EXPECT_EQ(rows.front(), "u,x");
  EXPECT_EQ(rows.at(1).rfind("1.3999999999999999,", 0), 0u) << rows.at(1);

  std::ifstream in(path);
  ASSERT_TRUE(in.good());
  const std::string svg((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("stroke=\"red\""), std::string::npos);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace primesym
