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

#ifndef NSPEC_ZETA_HPP_
#define NSPEC_ZETA_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nspec/special.hpp"
#include "nspec/spectrum.hpp"

namespace nspec {

struct ZetaValue {
  Complex s;
  Complex value;
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
};

enum class ZetaMode {
  // Remainder bounded by N^{1-σ}/(σ-1), valid for every spectrum.
  kCertified,
  // Remainder approximated by the Hurwitz tail ζ(s, N+1); the bound uses the
  // largest log(M_k/M_{k-1}) seen in the second half of the scanned blocks.
  // Only meaningful for asymptotically continuous spectra.
  kAsymptotic,
};

inline constexpr std::size_t kZetaBlockBudget = 5'000'000;

// ζ_L(s) = Σ_k m_k·M_k^{-s} for Re s > 1. Spectra with μ_n = 1/n are summed
// as Σ n^{-s} with an Euler-Maclaurin tail.
ZetaValue ZetaEval(const DistinctSpectrum& spectrum, Complex s, double tol,
                   ZetaMode mode = ZetaMode::kCertified,
                   std::size_t block_budget = kZetaBlockBudget);

struct ResidueOptions {
  ZetaMode mode = ZetaMode::kCertified;
  std::size_t block_budget = kZetaBlockBudget;
  int first_level = 3;   // s_j = 1 + 2^{-j}
  int last_level = 20;
};

struct ResidueEstimate {
  double value = 0.0;
  double last_change = 0.0;
  int levels_used = 0;
  std::vector<double> extrapolants;
};

// Third-order Richardson extrapolation of (s-1)·ζ_L(s) along s_j = 1 + 2^{-j}.
ResidueEstimate EstimateResidue(const DistinctSpectrum& spectrum, double tol,
                                const ResidueOptions& options = {});

enum class Evidence { kConverging, kDiverging, kInconclusive };
std::string EvidenceName(Evidence e);

struct AlphaCheck {
  double alpha = 0.0;
  bool holds = false;
};

struct CriteriaReport {
  std::size_t blocks = 0;
  double sum_relmult_sq_partial = 0.0;
  double relmult_sq_decay = 0.0;  // p in (m_k/M_k)² ~ k^{-p}
  Evidence sum_relmult_sq_evidence = Evidence::kInconclusive;
  std::optional<double> alpha_fit;  // empty when m_k outgrows every M_k^α, α <= 1
  double alpha_slope = 0.0;         // raw regression slope behind alpha_fit
  std::vector<AlphaCheck> alpha_criterion;
  std::optional<double> remainder_exponent;
};

inline constexpr std::size_t kMinCriteriaBlocks = 20;

CriteriaReport CriteriaCheck(const DistinctSpectrum& spectrum, std::size_t blocks,
                             const std::vector<double>& alphas);

// Meromorphic continuation of ζ for the free group F_p to Re s > 0:
// φ(s)·(Z_1(s) - Z_2(s)) with Z_1 in closed form and Z_2 summed with a
// geometric tail bound.
ZetaValue FreeGroupZeta(int p, Complex s, double tol);

// Riemann ζ(s) for Re s > 0, s != 1.
ZetaValue RiemannZeta(Complex s);

// |1 - (1-ε)^s| <= |s|·log(1/(1-ε)) for ε ∈ [0,1), Re s >= 0.
double PowerDeviationBound(double eps, Complex s);
Complex PowerDeviation(double eps, Complex s);

}  // namespace nspec

#endif  // NSPEC_ZETA_HPP_
