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

#include "nspec/tauberian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "nspec/error.hpp"
#include "nspec/fit.hpp"
#include "nspec/special.hpp"

namespace nspec {
namespace {

constexpr std::uint64_t kLawHead = 4096;
constexpr std::size_t kWindow = 64;
constexpr double kGrowthNats = 20.0;  // window sums growing by e^20 over 4 windows
constexpr double kMaxLogTerm = 700.0;

[[noreturn]] void NotNuclear(const DistinctSpectrum& spectrum, double beta, const std::string& why) {
  Fail(ErrorKind::kNotNuclear,
       "Z(" + std::to_string(beta) + ") for '" + spectrum.name() + "': " + why);
}

// Direct head plus ∫_{n0+½}^∞ of the smooth law; midpoint error ~ |f'|/24.
PartitionValue LawPartition(const DistinctSpectrum& spectrum, double beta, double tol) {
  const auto& law = spectrum.traits().law_eigenvalue;
  boost::math::quadrature::exp_sinh<double> integrator;
  std::uint64_t head = kLawHead;
  CompensatedSum<double> z, e;
  std::uint64_t n = 0;
  while (true) {
    for (; n < head; ++n) {
      const double lambda = law(static_cast<double>(n + 1));
      const double f = std::exp(-beta * lambda);
      z.Add(f);
      e.Add(lambda * f);
    }
    PartitionValue out{beta, z.value(), e.value(), 0.0, n};
    const double lam0 = law(static_cast<double>(n));
    const double lam1 = law(static_cast<double>(n + 1));
    const double f0 = std::exp(-beta * lam0);
    const double f1 = std::exp(-beta * lam1);
    if (f0 == 0.0) return out;
    const double from = static_cast<double>(n) + 0.5;
    double z_err = 0.0, e_err = 0.0, z_l1 = 0.0, e_l1 = 0.0;
    double z_tail = 0.0, e_tail = 0.0;
    try {
      z_tail = integrator.integrate([&](double x) { return std::exp(-beta * law(x)); }, from,
                                    std::numeric_limits<double>::infinity(), 1e-13, &z_err, &z_l1);
      e_tail = integrator.integrate(
          [&](double x) {
            const double lambda = law(x);
            return lambda * std::exp(-beta * lambda);
          },
          from, std::numeric_limits<double>::infinity(), 1e-13, &e_err, &e_l1);
    } catch (const std::exception& ex) {
      NotNuclear(spectrum, beta, std::string("tail integral failed: ") + ex.what());
    }
    if (!std::isfinite(z_tail) || !std::isfinite(e_tail)) {
      NotNuclear(spectrum, beta, "tail integral is not finite");
    }
    out.value += z_tail;
    out.energy_sum += e_tail;
    out.tail_bound = std::abs(f1 - f0) / 24.0 + z_err;
    const double e_bound = std::abs(lam1 * f1 - lam0 * f0) / 24.0 + e_err;
    if (out.tail_bound <= tol * out.value && e_bound <= tol * out.energy_sum) return out;
    if (head >= kNuclearBudget) {
      Fail(ErrorKind::kTolUnreachable, "partition tail did not reach the requested tolerance");
    }
    head = std::min<std::uint64_t>(head * 4, kNuclearBudget);
  }
}

// Σ m_k e^{-βλ̃_k} with a window-ratio geometric majorant (doubled) for the tail.
PartitionValue BlockPartition(const DistinctSpectrum& spectrum, double beta, double tol) {
  CompensatedSum<double> z, e;
  std::vector<double> window_z, window_e, window_log;
  double wz = 0.0, we = 0.0;
  std::size_t in_window = 0;
  std::uint64_t k = 0;
  auto cursor = spectrum.Open();
  while (k < kNuclearBudget) {
    auto block = cursor->Next();
    if (!block) return PartitionValue{beta, z.value(), e.value(), 0.0, k};
    ++k;
    const double log_term = LogBig(block->multiplicity) - beta * block->eigenvalue;
    if (log_term > kMaxLogTerm) NotNuclear(spectrum, beta, "terms overflow the double range");
    const double t = std::exp(log_term);
    z.Add(t);
    e.Add(block->eigenvalue * t);
    wz += t;
    we += block->eigenvalue * t;
    if (++in_window < kWindow) continue;
    window_z.push_back(wz);
    window_e.push_back(we);
    window_log.push_back(wz > 0.0 ? std::log(wz) : -std::numeric_limits<double>::infinity());
    wz = we = 0.0;
    in_window = 0;
    const std::size_t w = window_z.size();
    if (w >= 5 && window_log[w - 1] - window_log[w - 5] > kGrowthNats) {
      NotNuclear(spectrum, beta, "terms grow geometrically after " + std::to_string(k) + " blocks");
    }
    if (w < 2) continue;
    const double rz = window_z[w - 1] / window_z[w - 2];
    const double re = window_e[w - 1] / window_e[w - 2];
    if (!(rz < 1.0) || !(re < 1.0)) continue;
    const double tail_z = 2.0 * window_z[w - 1] * rz / (1.0 - rz);
    const double tail_e = 2.0 * window_e[w - 1] * re / (1.0 - re);
    if (tail_z <= tol * z.value() && tail_e <= tol * e.value()) {
      return PartitionValue{beta, z.value(), e.value(), tail_z, k};
    }
  }
  NotNuclear(spectrum, beta, "tail majorant did not close within " +
                                 std::to_string(kNuclearBudget) + " terms");
}

}  // namespace

PartitionValue Partition(const DistinctSpectrum& spectrum, double beta, double tol) {
  if (!(beta > 0.0) || !std::isfinite(beta)) Fail(ErrorKind::kOutOfRange, "β must be > 0");
  if (!(tol > 0.0)) Fail(ErrorKind::kOutOfRange, "tol must be positive");
  if (spectrum.traits().smooth_law) return LawPartition(spectrum, beta, tol);
  return BlockPartition(spectrum, beta, tol);
}

double MeanEnergy(const DistinctSpectrum& spectrum, double beta, double tol) {
  const PartitionValue p = Partition(spectrum, beta, tol);
  if (p.value == 0.0) Fail(ErrorKind::kOutOfRange, "partition function underflows at this β");
  return p.energy_sum / p.value;
}

std::vector<double> DefaultBetaGrid() {
  std::vector<double> grid;
  for (int j = 0; j <= 8; ++j) grid.push_back(std::pow(10.0, -1.0 - j / 4.0));
  return grid;
}

RvIndex EstimateRvIndex(const DistinctSpectrum& spectrum, const std::vector<double>& betas) {
  if (betas.size() < 3) Fail(ErrorKind::kGridTooShort, "β grid needs at least 3 points");
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (!(betas[i] > 0.0)) Fail(ErrorKind::kOutOfRange, "β grid values must be > 0");
    if (i > 0 && !(betas[i] < betas[i - 1])) {
      Fail(ErrorKind::kOutOfRange, "β grid must be strictly decreasing");
    }
  }
  RvIndex rv;
  rv.betas = betas;
  for (double b : betas) rv.partition.push_back(Partition(spectrum, b).value);

  // Smallest decade: β <= 10·β_min, with at least three points.
  const double cutoff = 10.0 * betas.back() * (1.0 + 1e-12);
  std::size_t from = betas.size() - 3;
  while (from > 0 && betas[from - 1] <= cutoff) --from;
  std::vector<double> lx, ly;
  for (std::size_t i = from; i < betas.size(); ++i) {
    lx.push_back(std::log(betas[i]));
    ly.push_back(std::log(rv.partition[i]));
  }
  const LineFit fit = FitLine(lx, ly);
  rv.gamma = -fit.slope;
  rv.gamma_stderr = fit.slope_stderr;
  rv.r_squared = fit.r_squared;
  rv.regularly_varying = fit.r_squared > kRegularVariationR2;
  return rv;
}

TauberReport TauberCheck(const DistinctSpectrum& spectrum, const std::vector<double>& x_grid,
                         const std::vector<double>& beta_grid) {
  if (x_grid.empty()) Fail(ErrorKind::kGridTooShort, "x grid is empty");
  TauberReport r;
  r.rv = EstimateRvIndex(spectrum, beta_grid);
  const double gamma_factor = GammaFn(r.rv.gamma + 1.0);
  for (double x : x_grid) {
    if (!(x > 0.0)) Fail(ErrorKind::kOutOfRange, "x grid values must be > 0");
    TauberPoint pt;
    pt.x = x;
    pt.counting = Counting(spectrum, x);
    pt.partition = Partition(spectrum, 1.0 / x).value;
    pt.deviation = std::abs(ToDouble(pt.counting) * gamma_factor / pt.partition - 1.0);
    r.max_deviation = std::max(r.max_deviation, pt.deviation);
    r.points.push_back(std::move(pt));
  }
  return r;
}

}  // namespace nspec
