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

#ifndef NSPEC_DIXMIER_HPP_
#define NSPEC_DIXMIER_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nspec/spectrum.hpp"

namespace nspec {

struct Schedule {
  std::vector<BigInt> points;  // strictly increasing, each >= 2
  std::string description;
};

// N_j = ⌊4·10^{j/2}⌋ for j = 0..j_max.
Schedule GeometricSchedule(int j_max = 16);
// 10^lo, 10^{lo+1}, ..., 10^hi.
Schedule DecadeSchedule(int lo, int hi);
// N = M_K at `count` evenly spaced block indices K <= max_blocks.
Schedule BlockEndSchedule(const DistinctSpectrum& spectrum, std::size_t max_blocks,
                          std::size_t count = 20);
Schedule ExplicitSchedule(std::vector<BigInt> points);

inline constexpr std::size_t kDefaultBlockBudget = 1'000'000;

// S_N = (1/ln N)·Σ_{n<=N} μ_n, summed per block; O(#blocks covering N).
double LogPartialSum(const DistinctSpectrum& spectrum, const BigInt& n);

// S_N at every point of an increasing schedule in one forward pass. Points
// past the end of a finite spectrum or past `block_budget` blocks are dropped,
// so the result may be shorter than the input.
std::vector<double> LogPartialSums(const DistinctSpectrum& spectrum, std::span<const BigInt> ns,
                                   std::size_t block_budget = kDefaultBlockBudget);

struct TimeSample {
  double t = 0.0;
  double value = 0.0;
};

// (1/ln t)·∫_1^t f(u) du/u, trapezoid in ln t, with f taken constant below
// the first sample.
std::vector<TimeSample> CesaroMean(std::span<const TimeSample> samples);

enum class FitModel { kConstPlusInvLog, kConstOnly };
enum class Verdict { kMeasurableUnit, kMeasurableValue, kInconclusive, kOscillationDetected };
enum class PredictionKind { kUnit, kGeometric, kLowerBoundOnly };

std::string VerdictName(Verdict v);
std::string PredictionKindName(PredictionKind k);
std::string FitModelName(FitModel m);

struct Prediction {
  PredictionKind kind = PredictionKind::kUnit;
  double value = 1.0;  // exact value, or the lower bound e^{-C}
};

struct DixmierSample {
  BigInt n;
  double partial_sum = 0.0;
  double cesaro = 0.0;
};

struct DixmierEstimate {
  double value = 0.0;
  double value_stderr = 0.0;
  double slope = 0.0;
  double model_residual = 0.0;
  double tail_spread = 0.0;
  double cesaro_variation = 0.0;
  FitModel model = FitModel::kConstPlusInvLog;
  std::string schedule;
  std::vector<DixmierSample> samples;
  Verdict verdict = Verdict::kInconclusive;
  std::optional<Prediction> prediction;
};

inline constexpr double kResidualThreshold = 1e-3;
inline constexpr double kSpreadThreshold = 0.01;
inline constexpr double kOscillationThreshold = 0.05;
inline constexpr double kUnitTolerance = 0.01;

struct EstimateOptions {
  FitModel model = FitModel::kConstPlusInvLog;
  // C with |φ'/φ| <= C on the tail; yields a LowerBoundOnly prediction.
  std::optional<double> log_derivative_bound;
  std::size_t growth_blocks = 200;
  std::size_t block_budget = kDefaultBlockBudget;
};

// GeometricGrowth spectra get a block-end schedule, everything else the
// geometric N-grid.
Schedule DefaultSchedule(const DistinctSpectrum& spectrum, std::size_t growth_blocks = 200);

DixmierEstimate EstimateTrace(const DistinctSpectrum& spectrum, const Schedule& schedule,
                              const EstimateOptions& options = {});

}  // namespace nspec

#endif  // NSPEC_DIXMIER_HPP_
