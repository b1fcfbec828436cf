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

#include "nspec/dixmier.hpp"
#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "oracles.hpp"

namespace nspec {
namespace {

TEST(LogPartialSum, NaturalsAgainstDirectSum) {
  const double want = static_cast<double>(oracle::Harmonic(100) / std::log(100.0L));
  EXPECT_NEAR(LogPartialSum(Naturals(), 100), want, 1e-13);
  EXPECT_NEAR(LogPartialSum(Naturals(), 100), 1.1264247157299377, 1e-13);
}

TEST(LogPartialSum, NaturalsHugeN) {
  // H_N = ln N + γ + 1/(2N) - ...
  const BigInt n = boost::multiprecision::pow(BigInt(10), 30);
  const double ln = 30.0 * std::log(10.0);
  EXPECT_NEAR(LogPartialSum(Naturals(), n), (ln + 0.57721566490153286) / ln, 1e-14);
}

TEST(LogPartialSum, SingleFullBlock) {
  for (const auto& spec : {FreeGroup(2), Torus2(), Geometric(3.0)}) {
    const auto first = spec.Prefix(1).front();
    EXPECT_NEAR(LogPartialSum(spec, first.cumulated), 1.0 / LogBig(first.cumulated), 1e-15)
        << spec.name();
  }
}

TEST(LogPartialSum, TorusAgainstNaiveSum) {
  const auto blocks = oracle::LatticeBlocks(200);
  long double sum = 0.0L;
  std::int64_t cumulated = 0;
  std::vector<std::int64_t> weights;
  for (const auto& [lambda, m] : blocks) {
    cumulated += m;
    for (std::int64_t i = 0; i < m; ++i) weights.push_back(cumulated);
  }
  for (std::size_t n = 1; n <= weights.size(); ++n) {
    sum += 1.0L / weights[n - 1];
    if (n % 37 == 0 && n >= 2) {
      EXPECT_NEAR(LogPartialSum(Torus2(), n), static_cast<double>(sum / std::log((long double)n)),
                  1e-13)
          << n;
    }
  }
}

TEST(LogPartialSum, FreeGroupApproachesPrediction) {
  const auto pts = FreeGroup(2).Prefix(200);
  const double target = 2.0 / (3.0 * std::log(3.0));
  const double far = LogPartialSum(FreeGroup(2), pts.back().cumulated);
  const double near = LogPartialSum(FreeGroup(2), pts[20].cumulated);
  EXPECT_LT(std::abs(far - target), std::abs(near - target));
  EXPECT_NEAR(far, target, 5e-3);
}

TEST(CesaroMean, ConstantFixedPoint) {
  std::vector<TimeSample> in;
  for (int j = 1; j <= 6; ++j) in.push_back({std::pow(10.0, j), 0.7});
  for (const auto& s : CesaroMean(in)) EXPECT_NEAR(s.value, 0.7, 1e-15);
}

TEST(CesaroMean, InverseLogTransform) {
  // f(t) = 1 + 1/u with u = ln t; the log-Cesàro mean from u0 is 1 + (1 + ln(u/u0))/u.
  std::vector<TimeSample> in;
  for (int j = 20; j <= 120; ++j) {
    const double t = std::pow(10.0, j / 20.0);
    in.push_back({t, 1.0 + 1.0 / std::log(t)});
  }
  const auto out = CesaroMean(in);
  ASSERT_EQ(out.size(), in.size());
  const double u0 = std::log(in.front().t);
  for (std::size_t i = 1; i < in.size(); ++i) {
    const double u = std::log(in[i].t);
    EXPECT_NEAR(out[i].value, 1.0 + (1.0 + std::log(u / u0)) / u, 1e-4) << i;
    EXPECT_GT(out[i].value, in[i].value) << i;
  }
}

TEST(CesaroMean, TwoPointsTooShort) {
  std::vector<TimeSample> in{{10.0, 1.0}, {100.0, 1.0}};
  try {
    CesaroMean(in);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGridTooShort);
  }
}

TEST(EstimateTrace, NaturalsUnit) {
  const auto e = EstimateTrace(Naturals(), DecadeSchedule(2, 8));
  EXPECT_NEAR(e.value, 1.0, 0.01);
  EXPECT_EQ(e.verdict, Verdict::kMeasurableUnit);
  ASSERT_TRUE(e.prediction);
  EXPECT_EQ(e.prediction->kind, PredictionKind::kUnit);
}

TEST(EstimateTrace, GeometricTwo) {
  const auto e = EstimateTrace(Geometric(2.0), BlockEndSchedule(Geometric(2.0), 40));
  EXPECT_NEAR(e.value, 1.0 / (2.0 * std::log(2.0)), 5e-3);
  EXPECT_EQ(e.verdict, Verdict::kMeasurableValue);
}

TEST(EstimateTrace, FreeGroupPrediction) {
  const auto spec = FreeGroup(2);
  const auto e = EstimateTrace(spec, DefaultSchedule(spec));
  ASSERT_TRUE(e.prediction);
  EXPECT_EQ(e.prediction->kind, PredictionKind::kGeometric);
  EXPECT_NEAR(e.prediction->value, 0.606827, 1e-6);
  EXPECT_NEAR(e.value, e.prediction->value, 5e-3);
}

TEST(EstimateTrace, ConstOnlyModelAvailable) {
  EstimateOptions o;
  o.model = FitModel::kConstOnly;
  const auto e = EstimateTrace(Naturals(), DecadeSchedule(2, 8), o);
  EXPECT_EQ(e.model, FitModel::kConstOnly);
  EXPECT_GT(e.value, 1.0);
}

TEST(EstimateTrace, ShortGridRejected) {
  try {
    EstimateTrace(Naturals(), DecadeSchedule(2, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGridTooShort);
  }
}

TEST(EstimateTrace, FiniteSpectrumInsufficient) {
  try {
    EstimateTrace(Explicit({{1.0, 2}, {2.0, 3}}), DecadeSchedule(1, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInsufficientBlocks);
  }
}

TEST(Schedule, DefaultGeometricGrid) {
  const auto s = GeometricSchedule(16);
  ASSERT_EQ(s.points.size(), 17u);
  EXPECT_EQ(s.points.front(), 4);
  EXPECT_EQ(s.points[2], 40);
  EXPECT_EQ(s.points.back(), BigInt(400000000));
}

}  // namespace
}  // namespace nspec
