// Copyright 2026 The fpsearch Authors
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

#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "experiments.hpp"
#include "gtest/gtest.h"

namespace fpsearch::tools {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(Cli, VerifyDefaultPasses) {
  const CliRun r = run({"verify", "--n", "64"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(lines(r.out).back(), "VERIFY pass=18 fail=0");
}

TEST(Cli, VerifyReportsPerDimension) {
  const CliRun r = run({"verify", "--n", "16", "--dims", "2,4,8,64", "--trials", "100"});
  EXPECT_EQ(r.code, 0);
  for (const char* d : {"dim=2 ", "dim=4 ", "dim=8 ", "dim=64 "}) {
    EXPECT_NE(r.out.find(d), std::string::npos) << d;
  }
  EXPECT_NE(r.out.find("max deviation"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"verify", "--n", "3"}).code, 2);
  EXPECT_NE(run({"verify", "--n", "3"}).err.find("power of 2"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"sweep", "--grid", "1"}).code, 2);
  EXPECT_EQ(run({"sweep", "--eps0-max", "0"}).code, 2);
  EXPECT_EQ(run({"sweep", "--algorithms", "grover"}).code, 2);
  EXPECT_EQ(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, 2);
  EXPECT_EQ(run({"multiquery", "--depth-max", "41"}).code, 2);
  EXPECT_EQ(run({"ancilla", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"montecarlo", "--trials", "0"}).code, 2);
  EXPECT_EQ(run({"montecarlo", "--algorithm", "mosca", "--trials", "10"}).code, 2);
  EXPECT_EQ(run({"sweep", "--grid", "abc"}).code, 2);
}

TEST(Cli, SweepClosedFormRows) {
  const CliRun r = run({"sweep", "--eps0-max", "0.2", "--grid", "5"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0], "eps0,algorithm,queries,integrated_failure,method,n,seed");
  EXPECT_EQ(rows[17], "0.20000000000000001,classical,1,0.013333333333333336,closed_form,0,");
  EXPECT_EQ(rows[18], "0.20000000000000001,mosca,1,0.010500000000000002,closed_form,0,");
  EXPECT_EQ(rows[19], "0.20000000000000001,pi3,1,0.0020000000000000005,closed_form,0,");
  EXPECT_EQ(rows[20], "0.20000000000000001,younes,1,0.054666666666666662,closed_form,0,");
}

TEST(Cli, SweepClosedFormIndependentOfNAndSeed) {
  auto closed = [](const std::string& csv) {
    std::string kept;
    for (const auto& l : lines(csv)) {
      if (l.find("closed_form") != std::string::npos) kept += l + "\n";
    }
    return kept;
  };
  const CliRun a = run({"sweep", "--grid", "4"});
  const CliRun b = run({"sweep", "--grid", "4", "--n", "64", "--seed", "9"});
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(closed(a.out), closed(b.out));
  EXPECT_NE(b.out.find(",pi3,1,"), std::string::npos);
  EXPECT_NE(b.out.find(",simulated,64,9"), std::string::npos);
}

TEST(Cli, SweepToFileIsByteIdentical) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto p1 = dir / "fpsearch_cli_sweep_a.csv";
  const auto p2 = dir / "fpsearch_cli_sweep_b.csv";
  const std::vector<std::string> base = {"sweep", "--grid", "7", "--n", "32", "--seed", "3", "--out"};
  auto a1 = base, a2 = base;
  a1.push_back(p1.string());
  a2.push_back(p2.string());
  ASSERT_EQ(run(a1).code, 0);
  ASSERT_EQ(run(a2).code, 0);
  const std::string s1 = read_file(p1);
  EXPECT_FALSE(s1.empty());
  EXPECT_EQ(s1, read_file(p2));
  EXPECT_EQ(s1.find('\r'), std::string::npos);
  std::filesystem::remove(p1);
  std::filesystem::remove(p2);
}

TEST(Cli, SweepAlgorithmSubset) {
  const CliRun r = run({"sweep", "--grid", "2", "--algorithms", "pi3,classical"});
  ASSERT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_NE(rows[1].find(",classical,"), std::string::npos);
  EXPECT_NE(rows[2].find(",pi3,"), std::string::npos);
}

TEST(Cli, MultiqueryTable) {
  const CliRun r = run({"multiquery", "--depth-max", "2", "--eps0", "0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "depth,queries,pi3_integrated_failure,classical_integrated_failure,simulation_max_error");
  EXPECT_EQ(rows[1].rfind("0,0,0.10000000000000001,0.10000000000000001,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("1,1,0.0020000000000000005,0.013333333333333336,", 0), 0u);
  EXPECT_EQ(rows[3].rfind("2,4,5.12000000000000", 0), 0u);
  EXPECT_NE(r.err.find("realizable query counts: 0 1 4"), std::string::npos);
}

TEST(Cli, MultiqueryRowsMatchFormulas) {
  const auto rows = run_multiquery(3, 0.2, 16);
  for (const auto& row : rows) {
    const double q = double(row.queries);
    EXPECT_NEAR(row.pi3_integrated_failure, std::pow(0.2, 2 * q + 1) / (2 * q + 2), 1e-14);
    EXPECT_NEAR(row.classical_integrated_failure, std::pow(0.2, q + 1) / (q + 2), 1e-14);
  }
  EXPECT_FALSE(rows[3].simulation_max_error.has_value());
  EXPECT_LT(*rows[2].simulation_max_error, 1e-9);
}

TEST(Cli, AncillaPasses) {
  const CliRun r = run({"ancilla", "--n", "8", "--trials", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ANCILLA pass"), std::string::npos);
}

TEST(Cli, MontecarloSmallRunIsDeterministic) {
  const std::vector<std::string> args = {"montecarlo", "--n", "64", "--trials", "2000", "--seed", "5"};
  const CliRun a = run(args);
  const CliRun b = run(args);
  EXPECT_NE(a.code, 2);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines(a.out).size(), 2u);
}

TEST(Cli, WilsonIntervalCoversSimpleCases) {
  auto [lo, hi] = wilson_interval(50, 100);
  EXPECT_LT(lo, 0.5);
  EXPECT_GT(hi, 0.5);
  auto [lo0, hi0] = wilson_interval(0, 100);
  EXPECT_EQ(lo0, 0.0);
  EXPECT_GT(hi0, 0.0);
}

}  // namespace
}  // namespace fpsearch::tools
