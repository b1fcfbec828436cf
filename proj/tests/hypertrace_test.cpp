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

#include <gtest/gtest.h>

#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "nspec/hypertrace.hpp"

namespace nspec {
namespace {

TEST(Hypotheses, Naturals) {
  const auto v = CheckHypotheses(Naturals());
  EXPECT_EQ(v.overall, Overall::kHypothesesHold);
  EXPECT_TRUE(v.gaps_bounded_below);
  EXPECT_DOUBLE_EQ(v.gap_inf, 1.0);
}

TEST(Hypotheses, FreeGroupFails) {
  const auto v = CheckHypotheses(FreeGroup(2), 200);
  EXPECT_EQ(v.overall, Overall::kHypothesesFail);
  EXPECT_EQ(v.asympt_continuous, EvidenceLabel::kFails);
  EXPECT_NEAR(v.relmult_tail, 2.0 / 3.0, 0.02);
}

TEST(Hypotheses, PrimesAndWeylHold) {
  EXPECT_EQ(CheckHypotheses(Primes()).overall, Overall::kHypothesesHold);
  EXPECT_EQ(CheckHypotheses(WeylPower(1.0, 2.0)).overall, Overall::kHypothesesHold);
}

TEST(Commutator, ShiftTelescopes) {
  const auto shift = ShiftOperator(1000);
  for (double s : {1.5, 1.25, 1.125}) {
    EXPECT_NEAR(CommutatorTraceNorm(Naturals(), shift, s, PhiKind::kIdentity),
                1.0 - std::pow(1001.0, -s), 1e-10)
        << s;
  }
}

TEST(Commutator, IdentityAndDiagonalVanish) {
  EXPECT_EQ(CommutatorTraceNorm(Primes(), IdentityOperator(300), 1.5), 0.0);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(50, 50);
  for (int i = 0; i < 50; ++i) d(i, i) = Complex(i, -0.5 * i);
  EXPECT_EQ(CommutatorTraceNorm(Naturals(), DenseOperator(d), 1.5), 0.0);
}

TEST(Commutator, ChainRuleMatchesDirectProduct) {
  const int n = 40;
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = Complex(std::sin(i + 2.0 * j), std::cos(3.0 * i - j));
  }
  const auto f = FunctionValues(Primes(), n, 1.5, PhiKind::kCountingInterpolant);
  Eigen::MatrixXcd fl = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i) fl(i, i) = f[i];
  const Eigen::MatrixXcd direct = fl * a - a * fl;
  const Eigen::MatrixXcd chain = Eigen::MatrixXcd(ChainRuleCommutator(f, a.sparseView()));
  EXPECT_LT((direct - chain).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(Commutator, AutoAgreesWithSvd) {
  const auto shift = ShiftOperator(500, 2);
  const double a = CommutatorTraceNorm(Naturals(), shift, 1.25, PhiKind::kIdentity);
  const double b =
      CommutatorTraceNorm(Naturals(), shift, 1.25, PhiKind::kIdentity, TraceNormMethod::kDenseSvd);
  EXPECT_NEAR(a, b, 1e-12);
}

TEST(Commutator, DecaysTowardZero) {
  const auto shift = ShiftOperator(1000);
  double prev = INFINITY;
  for (double s : {1.5, 1.25, 1.125, 1.0625}) {
    const double v = (s - 1.0) * CommutatorTraceNorm(Naturals(), shift, s, PhiKind::kIdentity);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Commutator, FreeGroupMultiplicityUnsupported) {
  try {
    CommutatorTraceNorm(FreeGroup(2), ShiftOperator(10), 1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMultiplicityUnsupported);
  }
}

TEST(WeightedTrace, ShiftPowersVanish) {
  for (std::size_t k = 1; k <= 5; ++k) {
    const auto w = ComputeWeightedTrace(Naturals(), ShiftOperator(1000, k), 1.5, 1000);
    EXPECT_EQ(w.value, Complex(0.0, 0.0)) << k;
  }
  EXPECT_EQ(ComputeWeightedTrace(Primes(), ShiftOperator(1000), 1.3, 1000).value, Complex(0.0, 0.0));
}

TEST(WeightedTrace, IdentityApproachesResidue) {
  double prev_err = INFINITY;
  for (double s : {1.1, 1.01, 1.001}) {
    const auto w = ComputeWeightedTrace(Naturals(), IdentityOperator(200000), s, 200000);
    const double full = std::abs(w.scaled.real() + (s - 1.0) * w.diagonal_tail_bound - 1.0);
    EXPECT_LT(full, prev_err);
    prev_err = full;
  }
  EXPECT_LT(prev_err, 2e-3);
}

TEST(Operators, ParseJson) {
  const auto op = ParseOperator(nlohmann::json::parse(R"({"label":"shift","power":2})"), 10);
  EXPECT_EQ(op.entries.nonZeros(), 10);
  EXPECT_EQ(op.entries.rows(), 12);
  const auto d = ParseOperator(nlohmann::json::parse(R"({"dense":[[1,0],[0,1]]})"), 2);
  EXPECT_EQ(d.entries.rows(), 2);
  EXPECT_THROW(ParseOperator(nlohmann::json::parse(R"({"dense":[[1,0],[0]]})"), 2), Error);
}

}  // namespace
}  // namespace nspec
