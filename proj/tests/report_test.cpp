/*
 * Copyright 2026 The nspec Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "nspec/report.hpp"
#include "oracles.hpp"

namespace nspec {
namespace {

using nlohmann::json;

AnalysisReport Analyze(const std::string& spec) {
  return RunAnalyze(ParseConfig(json{{"spectrum", json::parse(spec)}}));
}

TEST(Analyze, Naturals) {
  const auto r = Analyze(R"({"kind":"naturals"})");
  EXPECT_TRUE(r.errors.empty());
  ASSERT_TRUE(r.dixmier);
  EXPECT_NEAR(r.dixmier->value, 1.0, 0.01);
  ASSERT_TRUE(r.zeta && r.zeta->residue);
  EXPECT_NEAR(*r.zeta->residue, 1.0, 1e-6);
  ASSERT_TRUE(r.hypertrace);
  EXPECT_EQ(r.hypertrace->overall, "HypothesesHold");
  ASSERT_TRUE(r.cross_checks.dixmier_vs_zeta_residue_delta);
  EXPECT_LT(std::abs(*r.cross_checks.dixmier_vs_zeta_residue_delta), 0.01);
}

TEST(Analyze, FreeGroup) {
  const auto r = Analyze(R"({"kind":"free_group","p":2})");
  ASSERT_TRUE(r.dixmier && r.dixmier->prediction_value);
  EXPECT_NEAR(*r.dixmier->prediction_value, 0.606827, 1e-6);
  ASSERT_TRUE(r.tauber);
  EXPECT_FALSE(r.tauber->nuclear);
  ASSERT_TRUE(r.hypertrace);
  EXPECT_EQ(r.hypertrace->overall, "HypothesesFail");
  ASSERT_TRUE(r.zeta && r.zeta->continuation_residue);
  EXPECT_NEAR(*r.zeta->continuation_residue, 2.0 / (3.0 * std::log(3.0)), 1e-6);
}

TEST(Analyze, EveryGeneratorWithinBudget) {
  for (const char* spec :
       {R"({"kind":"naturals"})", R"({"kind":"primes"})", R"({"kind":"free_group","p":2})",
        R"({"kind":"torus2"})", R"({"kind":"weyl_power","c":1,"gamma":2})", R"({"kind":"log_weyl"})",
        R"({"kind":"fractal_law","c":1,"d_s":1.365})", R"({"kind":"geometric","c":2})",
        R"({"kind":"filtration","dims":[1,3,7,15]})"}) {
    const auto r = Analyze(spec);
    EXPECT_LT(r.timing.total_seconds, 10.0) << spec;
  }
}

TEST(Analyze, FiniteSpectrumRecordsSectionErrors) {
  const auto r = Analyze(R"({"kind":"explicit","pairs":[[1,1],[2,3]]})");
  EXPECT_TRUE(r.errors.count("dixmier"));
  EXPECT_EQ(r.errors.at("dixmier").kind, "InsufficientBlocks");
}

TEST(Analyze, UnknownGeneratorIsConfigError) {
  try {
    Analyze(R"({"kind":"moebius"})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfigError);
  }
}

TEST(Config, LocatesBadValues) {
  try {
    ParseConfig(json::parse(R"({"spectrum":{"kind":"naturals"},"zeta":{"s_grid":[1.5,2,"x"]}})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kConfigError);
    EXPECT_NE(std::string(e.what()).find("zeta.s_grid[2]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ParseConfig(json::parse(R"({"spectrum":{"kind":"naturals"},"bogus":1})")), Error);
  EXPECT_THROW(ParseConfig(json::parse(R"({"analyses":["dixmier"]})")), Error);
}

TEST(Config, SelectsAnalyses) {
  const auto c = ParseConfig(json::parse(
      R"({"spectrum":{"kind":"naturals"},"analyses":["zeta"],"zeta":{"s_grid":[2]}})"));
  const auto r = RunAnalyze(c);
  EXPECT_FALSE(r.dixmier);
  EXPECT_FALSE(r.tauber);
  ASSERT_TRUE(r.zeta);
  ASSERT_EQ(r.zeta->samples.size(), 1u);
}

TEST(Report, RoundTripIsByteIdentical) {
  for (const char* spec : {R"({"kind":"naturals"})", R"({"kind":"free_group","p":2})",
                           R"({"kind":"explicit","pairs":[[1,1],[2,3]]})"}) {
    const std::string once = json(Analyze(spec)).dump(2);
    const std::string twice = json(json::parse(once).get<AnalysisReport>()).dump(2);
    EXPECT_EQ(once, twice) << spec;
  }
}

TEST(Report, DigestIsStable) {
  EXPECT_EQ(PrefixDigest(Torus2(), 64), PrefixDigest(Torus2(), 64));
  EXPECT_NE(PrefixDigest(Torus2(), 64), PrefixDigest(Naturals(), 64));
}

TEST(Threads, EnvironmentOverride) {
  EXPECT_EQ(ResolveThreads(3u), 3u);
  ::setenv("NSPEC_THREADS", "2", 1);
  EXPECT_EQ(ResolveThreads(std::nullopt), 2u);
  ::unsetenv("NSPEC_THREADS");
  EXPECT_GE(ResolveThreads(std::nullopt), 1u);
}

TEST(Series, DixmierCsvShape) {
  const auto e = EstimateTrace(Naturals(), ExplicitSchedule({10, 100, 1000, 10000, 100000, 1000000,
                                                             10000000, 100000000, 1000000000,
                                                             BigInt(10000000000ULL)}));
  const std::string csv = DixmierCsv(e.samples);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,S_N,cesaro");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10);
}

TEST(Series, ZetaCsvMatchesReference) {
  std::vector<ZetaValue> values;
  for (int i = 0; i < 10; ++i) values.push_back(ZetaEval(Naturals(), 1.1 + 0.1 * i, 1e-10));
  std::istringstream in(ZetaCsv(values));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "s,re,im,tail_bound");
  int rows = 0;
  while (std::getline(in, line)) {
    double s, re, im, tail;
    char c;
    std::istringstream row(line);
    row >> s >> c >> re >> c >> im >> c >> tail;
    EXPECT_NEAR(re, oracle::RiemannZeta(s).real(), 1e-9) << line;
    ++rows;
  }
  EXPECT_EQ(rows, 10);
}

TEST(Series, PartitionCsvHeader) {
  const std::string csv = PartitionCsv({Partition(Naturals(), 1.0)});
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "beta,Z,energy");
}

TEST(Series, UnwritablePath) {
  try {
    WriteText("/nonexistent-dir/x.csv", "a\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIoError);
    EXPECT_NE(std::string(e.what()).find("No such file"), std::string::npos) << e.what();
  }
}

TEST(Series, WriteThenRead) {
  const auto path = std::filesystem::temp_directory_path() / "nspec_series_test.csv";
  WriteText(path.string(), "beta,Z,energy\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "beta,Z,energy");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace nspec
