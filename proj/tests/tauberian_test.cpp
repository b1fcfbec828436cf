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
#include "nspec/tauberian.hpp"

namespace nspec {
namespace {

template <typename F>
ErrorKind KindOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kIoError;
}

long double DirectSum(double (*lambda)(double), double beta, long double* energy) {
  long double z = 0.0L, e = 0.0L;
  for (long n = 1;; ++n) {
    const long double l = lambda(static_cast<double>(n));
    const long double t = std::exp(-beta * l);
    z += t;
    e += l * t;
    if (t < 1e-22L * z) break;
  }
  if (energy) *energy = e;
  return z;
}

TEST(Partition, SingleTerm) {
  EXPECT_NEAR(Partition(Explicit({{1.0, 1}}), 1.0).value, std::exp(-1.0), 1e-15);
}

TEST(Partition, WeylPowerIntegralComparison) {
  const double beta = 0.01;
  EXPECT_NEAR(Partition(WeylPower(1.0, 2.0), beta).value / (2.0 / (beta * beta)), 1.0, 0.02);
}

TEST(Partition, WeylPowerAgainstDirectSum) {
  for (double beta : {0.5, 0.05, 0.01}) {
    long double e = 0.0L;
    const long double z = DirectSum([](double n) { return std::sqrt(n); }, beta, &e);
    const auto p = Partition(WeylPower(1.0, 2.0), beta);
    EXPECT_NEAR(p.value / static_cast<double>(z), 1.0, 1e-9) << beta;
    EXPECT_NEAR(p.energy_sum / static_cast<double>(e), 1.0, 1e-9) << beta;
  }
}

TEST(Partition, NaturalsClosedForm) {
  for (double beta : {1.0, 0.1, 1e-3}) {
    EXPECT_NEAR(Partition(Naturals(), beta).value * std::expm1(beta), 1.0, 1e-9) << beta;
  }
}

TEST(Partition, FreeGroupNotNuclear) {
  EXPECT_EQ(KindOf([] { Partition(FreeGroup(2), 1.0); }), ErrorKind::kNotNuclear);
}

TEST(MeanEnergy, SingleEigenvalue) {
  for (double beta : {0.1, 1.0, 7.0}) {
    EXPECT_NEAR(MeanEnergy(Explicit({{2.0, 5}}), beta), 2.0, 1e-14);
  }
}

TEST(MeanEnergy, WeylPowerScaling) {
  const auto w = WeylPower(1.0, 2.0);
  const double beta = 0.01;
  EXPECT_NEAR(MeanEnergy(w, beta / 2.0) / MeanEnergy(w, beta), 2.0, 1e-3);
}

TEST(MeanEnergy, FreeGroupNotNuclear) {
  EXPECT_EQ(KindOf([] { MeanEnergy(FreeGroup(2), 0.5); }), ErrorKind::kNotNuclear);
}

TEST(RvIndex, WeylPowerTwo) {
  const auto r = EstimateRvIndex(WeylPower(1.0, 2.0), DefaultBetaGrid());
  EXPECT_NEAR(r.gamma, 2.0, 0.02);
  EXPECT_TRUE(r.regularly_varying);
}

TEST(RvIndex, Naturals) {
  EXPECT_NEAR(EstimateRvIndex(Naturals(), DefaultBetaGrid()).gamma, 1.0, 0.02);
}

TEST(RvIndex, LogWeylSlowlyVarying) {
  const auto r = EstimateRvIndex(LogWeyl(), DefaultBetaGrid());
  // Z ~ (1/π) β^{-1} log(1/β): local slope 1 + 1/log(1/β) exceeds 1.
  EXPECT_GT(r.gamma, 1.05);
  EXPECT_LT(r.gamma, 1.4);
}

TEST(RvIndex, GridValidation) {
  EXPECT_EQ(KindOf([] { EstimateRvIndex(Naturals(), {0.1, 0.01}); }), ErrorKind::kGridTooShort);
  EXPECT_THROW(EstimateRvIndex(Naturals(), {0.01, 0.1, 0.001}), Error);
}

TEST(TauberCheck, WeylPower) {
  const auto r = TauberCheck(WeylPower(1.0, 2.0), {1e2, 1e3, 1e4});
  EXPECT_LT(r.max_deviation, 0.02);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(r.points[0].counting, 10000);
}

TEST(TauberCheck, NaturalsSinglePoint) {
  EXPECT_LT(TauberCheck(Naturals(), {1e4}).max_deviation, 0.01);
}

TEST(TauberCheck, FreeGroupPropagatesNotNuclear) {
  EXPECT_EQ(KindOf([] { TauberCheck(FreeGroup(2), {1e2}); }), ErrorKind::kNotNuclear);
}

}  // namespace
}  // namespace nspec
