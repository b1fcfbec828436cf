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

#ifndef NSPEC_TAUBERIAN_HPP_
#define NSPEC_TAUBERIAN_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nspec/spectrum.hpp"

namespace nspec {

inline constexpr std::size_t kNuclearBudget = 10'000'000;

struct PartitionValue {
  double beta = 0.0;
  double value = 0.0;       // Z_L(β) = Σ m_k e^{-β λ̃_k}
  double energy_sum = 0.0;  // Σ λ̃_k m_k e^{-β λ̃_k}
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
};

// `tol` is relative to the value. Throws NotNuclear when the series does not
// close within kNuclearBudget terms or visibly diverges.
PartitionValue Partition(const DistinctSpectrum& spectrum, double beta, double tol = 1e-10);

// <L>_β = Tr(L e^{-βL}) / Tr(e^{-βL}).
double MeanEnergy(const DistinctSpectrum& spectrum, double beta, double tol = 1e-10);

// β_j = 10^{-1-j/4}, j = 0..8.
std::vector<double> DefaultBetaGrid();

struct RvIndex {
  double gamma = 0.0;
  double gamma_stderr = 0.0;
  double r_squared = 0.0;
  bool regularly_varying = false;  // log-log fit with R² > 0.999
  std::vector<double> betas;
  std::vector<double> partition;
};

inline constexpr double kRegularVariationR2 = 0.999;

// γ̂ = -slope of log Z against log β over the smallest decade of the grid.
RvIndex EstimateRvIndex(const DistinctSpectrum& spectrum, const std::vector<double>& betas);

struct TauberPoint {
  double x = 0.0;
  BigInt counting;
  double partition = 0.0;
  double deviation = 0.0;  // |N(x)·Γ(γ̂+1)/Z(1/x) - 1|
};

struct TauberReport {
  RvIndex rv;
  double max_deviation = 0.0;
  std::vector<TauberPoint> points;
  bool nuclear = true;
};

TauberReport TauberCheck(const DistinctSpectrum& spectrum, const std::vector<double>& x_grid,
                         const std::vector<double>& beta_grid = DefaultBetaGrid());

}  // namespace nspec

#endif  // NSPEC_TAUBERIAN_HPP_
