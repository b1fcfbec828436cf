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

#include "nspec/dixmier.hpp"

#include <algorithm>
#include <cmath>

#include "nspec/error.hpp"
#include "nspec/fit.hpp"
#include "nspec/special.hpp"

namespace nspec {
namespace {

void CheckSchedule(std::span<const BigInt> ns) {
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i] < 2) Fail(ErrorKind::kOutOfRange, "schedule points must be >= 2");
    if (i > 0 && ns[i] <= ns[i - 1]) {
      Fail(ErrorKind::kOutOfRange, "schedule points must be strictly increasing");
    }
  }
}

double Spread(std::span<const double> v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi - *lo;
}

}  // namespace

Schedule GeometricSchedule(int j_max) {
  Schedule s;
  for (int j = 0; j <= j_max; ++j) {
    // 4·10^{j/2}: exact integers for even j, floor of 4·√10·10^{(j-1)/2} for odd j.
    BigInt n = 4;
    for (int i = 0; i < j / 2; ++i) n *= 10;
    if (j % 2 == 1) {
      BigInt scaled = n * n * 10;  // (4·10^{(j-1)/2})²·10 = N²
      n = boost::multiprecision::sqrt(scaled);
    }
    s.points.push_back(n);
  }
  s.description = "geometric 4*10^(j/2), j=0.." + std::to_string(j_max);
  return s;
}

Schedule DecadeSchedule(int lo, int hi) {
  if (lo < 1 || hi < lo) Fail(ErrorKind::kOutOfRange, "decade schedule needs 1 <= lo <= hi");
  Schedule s;
  BigInt n = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(lo));
  for (int e = lo; e <= hi; ++e) {
    s.points.push_back(n);
    n *= 10;
  }
  s.description = "decades 10^" + std::to_string(lo) + "..10^" + std::to_string(hi);
  return s;
}

Schedule BlockEndSchedule(const DistinctSpectrum& spectrum, std::size_t max_blocks,
                          std::size_t count) {
  if (max_blocks == 0 || count == 0) Fail(ErrorKind::kOutOfRange, "block-end schedule is empty");
  count = std::min(count, max_blocks);
  std::vector<std::size_t> ks;
  for (std::size_t j = 1; j <= count; ++j) ks.push_back((max_blocks * j + count - 1) / count);
  Schedule s;
  auto cursor = spectrum.Open();
  std::size_t next = 0;
  while (next < ks.size()) {
    auto block = cursor->Next();
    if (!block) break;
    if (block->k == ks[next]) {
      if (block->cumulated >= 2 && (s.points.empty() || block->cumulated > s.points.back())) {
        s.points.push_back(block->cumulated);
      }
      ++next;
    }
  }
  s.description = "block ends M_K, K<=" + std::to_string(max_blocks) + " (" +
                  std::to_string(count) + " points)";
  return s;
}

Schedule ExplicitSchedule(std::vector<BigInt> points) {
  CheckSchedule(points);
  Schedule s;
  s.points = std::move(points);
  s.description = "explicit (" + std::to_string(s.points.size()) + " points)";
  return s;
}

std::vector<double> LogPartialSums(const DistinctSpectrum& spectrum, std::span<const BigInt> ns,
                                   std::size_t block_budget) {
  CheckSchedule(ns);
  std::vector<double> out;
  out.reserve(ns.size());
  if (spectrum.traits().harmonic_weights) {
    for (const BigInt& n : ns) out.push_back(HarmonicNumber(n) / LogBig(n));
    return out;
  }
  CompensatedSum<double> full;  // Σ m_j/M_j over completed blocks
  BigInt previous = 0;
  std::size_t next = 0;
  std::size_t used = 0;
  auto cursor = spectrum.Open();
  while (next < ns.size() && used < block_budget) {
    auto block = cursor->Next();
    if (!block) break;
    ++used;
    while (next < ns.size() && ns[next] <= block->cumulated) {
      CompensatedSum<double> partial = full;
      partial.Add(RatioBig(ns[next] - previous, block->cumulated));
      out.push_back(partial.value() / LogBig(ns[next]));
      ++next;
    }
    full.Add(RatioBig(block->multiplicity, block->cumulated));
    previous = block->cumulated;
  }
  return out;
}

double LogPartialSum(const DistinctSpectrum& spectrum, const BigInt& n) {
  if (n < 2) Fail(ErrorKind::kOutOfRange, "log partial sum needs N >= 2");
  const BigInt points[] = {n};
  std::vector<double> v = LogPartialSums(spectrum, points, std::numeric_limits<std::size_t>::max());
  if (v.empty()) {
    Fail(ErrorKind::kInsufficientBlocks,
         "spectrum '" + spectrum.name() + "' has fewer than " + ToString(n) + " eigenvalues");
  }
  return v.front();
}

namespace {

std::vector<double> CesaroFromLogs(std::span<const double> logs, std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  double integral = values[0] * logs[0];
  out.push_back(values[0]);
  for (std::size_t i = 1; i < values.size(); ++i) {
    integral += 0.5 * (values[i] + values[i - 1]) * (logs[i] - logs[i - 1]);
    out.push_back(integral / logs[i]);
  }
  return out;
}

}  // namespace

std::vector<TimeSample> CesaroMean(std::span<const TimeSample> samples) {
  if (samples.size() < 3) Fail(ErrorKind::kGridTooShort, "Cesaro mean needs at least 3 samples");
  std::vector<double> logs, values;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i].t >= 2.0)) Fail(ErrorKind::kOutOfRange, "Cesaro grid needs t >= 2");
    if (i > 0 && !(samples[i].t > samples[i - 1].t)) {
      Fail(ErrorKind::kOutOfRange, "Cesaro grid must be strictly increasing");
    }
    logs.push_back(std::log(samples[i].t));
    values.push_back(samples[i].value);
  }
  const std::vector<double> smooth = CesaroFromLogs(logs, values);
  std::vector<TimeSample> out;
  for (std::size_t i = 0; i < samples.size(); ++i) out.push_back({samples[i].t, smooth[i]});
  return out;
}

std::string VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kMeasurableUnit: return "MeasurableUnit";
    case Verdict::kMeasurableValue: return "MeasurableValue";
    case Verdict::kInconclusive: return "Inconclusive";
    case Verdict::kOscillationDetected: return "OscillationDetected";
  }
  return "Inconclusive";
}

std::string PredictionKindName(PredictionKind k) {
  switch (k) {
    case PredictionKind::kUnit: return "Unit";
    case PredictionKind::kGeometric: return "Geometric";
    case PredictionKind::kLowerBoundOnly: return "LowerBoundOnly";
  }
  return "Unit";
}

std::string FitModelName(FitModel m) {
  return m == FitModel::kConstOnly ? "ConstOnly" : "ConstPlusInvLog";
}

Schedule DefaultSchedule(const DistinctSpectrum& spectrum, std::size_t growth_blocks) {
  try {
    const GrowthDiagnostics d = ComputeGrowthDiagnostics(spectrum, growth_blocks);
    if (d.classification == GrowthClass::kGeometricGrowth) {
      return BlockEndSchedule(spectrum, growth_blocks);
    }
  } catch (const Error&) {
    // Short or finite spectra fall back to the N-grid; truncation handles the rest.
  }
  return GeometricSchedule();
}

DixmierEstimate EstimateTrace(const DistinctSpectrum& spectrum, const Schedule& schedule,
                              const EstimateOptions& options) {
  const auto& ns = schedule.points;
  if (ns.size() < 6) Fail(ErrorKind::kGridTooShort, "schedule needs at least 6 points");
  if (LogBig(ns.back()) - LogBig(ns.front()) < 3.0 * std::log(10.0)) {
    Fail(ErrorKind::kGridTooShort, "schedule must span at least 3 decades of N");
  }
  const std::vector<double> sums = LogPartialSums(spectrum, ns, options.block_budget);
  const std::size_t n = sums.size();
  if (n < 6 || LogBig(ns[n - 1]) - LogBig(ns.front()) < 3.0 * std::log(10.0)) {
    Fail(ErrorKind::kInsufficientBlocks,
         "spectrum '" + spectrum.name() + "' covers only " + std::to_string(n) +
             " schedule points; need 6 spanning 3 decades");
  }

  DixmierEstimate est;
  est.model = options.model;
  est.schedule = schedule.description;
  std::vector<double> logs(n), inv_log(n);
  for (std::size_t i = 0; i < n; ++i) {
    logs[i] = LogBig(ns[i]);
    inv_log[i] = 1.0 / logs[i];
  }
  const std::vector<double> smooth = CesaroFromLogs(logs, sums);
  for (std::size_t i = 0; i < n; ++i) est.samples.push_back({ns[i], sums[i], smooth[i]});

  const std::size_t fit_from = n / 3;
  std::span<const double> fx(inv_log.data() + fit_from, n - fit_from);
  std::span<const double> fy(sums.data() + fit_from, n - fit_from);
  if (options.model == FitModel::kConstPlusInvLog) {
    const LineFit fit = FitLine(fx, fy);
    est.value = fit.intercept;
    est.value_stderr = fit.intercept_stderr;
    est.slope = fit.slope;
    est.model_residual = fit.residual_rms;
  } else {
    CompensatedSum<double> acc;
    for (double y : fy) acc.Add(y);
    est.value = acc.value() / static_cast<double>(fy.size());
    double ss = 0.0;
    for (double y : fy) ss += (y - est.value) * (y - est.value);
    est.model_residual = std::sqrt(ss / static_cast<double>(fy.size()));
    est.value_stderr = est.model_residual / std::sqrt(static_cast<double>(fy.size()));
  }

  // Local extrapolants over the last third of the schedule.
  std::vector<double> local;
  for (std::size_t i = (2 * n) / 3; i < n; ++i) local.push_back(sums[i] - est.slope * inv_log[i]);
  est.tail_spread = Spread(local) / std::abs(est.value);

  // Cesàro values over the last decade of N (at least two points).
  const double last_decade = logs[n - 1] - std::log(10.0);
  std::size_t from = n - 2;
  while (from > 0 && logs[from - 1] >= last_decade) --from;
  std::vector<double> tail_cesaro(smooth.begin() + static_cast<std::ptrdiff_t>(from), smooth.end());
  est.cesaro_variation = Spread(tail_cesaro) / std::abs(est.value);

  const bool fit_ok = est.model_residual < kResidualThreshold * std::abs(est.value) &&
                      est.tail_spread < kSpreadThreshold;
  if (est.cesaro_variation > kOscillationThreshold) {
    est.verdict = Verdict::kOscillationDetected;
  } else if (fit_ok) {
    est.verdict = std::abs(est.value - 1.0) < kUnitTolerance ? Verdict::kMeasurableUnit
                                                              : Verdict::kMeasurableValue;
  } else {
    est.verdict = Verdict::kInconclusive;
  }

  try {
    const GrowthDiagnostics d = ComputeGrowthDiagnostics(spectrum, options.growth_blocks);
    if (d.classification == GrowthClass::kAsymptoticallyContinuous) {
      est.prediction = Prediction{PredictionKind::kUnit, 1.0};
    } else if (d.classification == GrowthClass::kGeometricGrowth) {
      const double c = d.growth_constant;
      est.prediction = Prediction{PredictionKind::kGeometric, (c - 1.0) / (c * std::log(c))};
    }
  } catch (const Error&) {
    // No diagnostics, no prediction from them.
  }
  if (!est.prediction && options.log_derivative_bound) {
    est.prediction =
        Prediction{PredictionKind::kLowerBoundOnly, std::exp(-*options.log_derivative_bound)};
  }
  return est;
}

}  // namespace nspec
