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

#ifndef NSPEC_SPECTRUM_HPP_
#define NSPEC_SPECTRUM_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspec/bigint.hpp"

namespace nspec {

// One distinct eigenvalue: index k (1-based), λ̃_k, m_k and M_k = Σ_{j<=k} m_j.
struct SpectralPoint {
  std::uint64_t k = 0;
  double eigenvalue = 0.0;
  BigInt multiplicity;
  BigInt cumulated;
};

class BlockCursor {
 public:
  virtual ~BlockCursor() = default;
  // Next block, or nullopt when a finite spectrum is exhausted.
  virtual std::optional<SpectralPoint> Next() = 0;
};

// Unmerged (eigenvalue, multiplicity) pairs in nondecreasing eigenvalue order.
struct RawPair {
  double eigenvalue = 0.0;
  BigInt multiplicity;
};
using RawSource = std::function<std::optional<RawPair>()>;

enum class TieRule {
  kExact,     // integer-valued spectra: merge only identical eigenvalues
  kRelative,  // floating spectra: merge when |a-b| <= 1e-12 * max(|a|,|b|)
};

// Builds SpectralPoint blocks from a raw source: drops zero modes, merges ties,
// accumulates M_k exactly, and rejects decreasing or negative input.
std::unique_ptr<BlockCursor> MakeMergingCursor(RawSource source, TieRule rule);

struct SpectrumTraits {
  // Every multiplicity is one and the spectrum is infinite, so the weight
  // eigenvalues are exactly μ_n = 1/n for all n.
  bool harmonic_weights = false;
  bool integer_valued = false;
  // Continuous eigenvalue law n -> λ(n) for unit-multiplicity families whose
  // n-th eigenvalue is λ(n); empty when no such law exists.
  std::function<double(double)> law_eigenvalue;
  // law_eigenvalue is smooth and increasing on [1, ∞), not just at integers.
  bool smooth_law = false;
  // Exact N(x) computed without streaming; must agree with the stream.
  std::function<BigInt(double)> law_counting;
};

// Values recorded by generators for reports and tests. Never consulted by the
// estimators themselves.
struct KnownConstants {
  std::optional<double> growth_ratio;
  std::optional<double> dixmier_value;
  std::optional<double> residue;
};

class DistinctSpectrum {
 public:
  using CursorFactory = std::function<std::unique_ptr<BlockCursor>()>;

  DistinctSpectrum(std::string name, nlohmann::json parameters, CursorFactory factory,
                   SpectrumTraits traits = {}, KnownConstants known = {});

  const std::string& name() const { return name_; }
  const nlohmann::json& parameters() const { return parameters_; }
  const SpectrumTraits& traits() const { return traits_; }
  const KnownConstants& known() const { return known_; }

  // Fresh cursor positioned before block 1. Independent cursors never share
  // mutable state.
  std::unique_ptr<BlockCursor> Open() const;

  // First `count` blocks (fewer if the spectrum is finite).
  std::vector<SpectralPoint> Prefix(std::size_t count) const;

 private:
  std::string name_;
  nlohmann::json parameters_;
  CursorFactory factory_;
  SpectrumTraits traits_;
  KnownConstants known_;
};

// N_L(x) = Σ_{λ̃_k <= x} m_k.
BigInt Counting(const DistinctSpectrum& spectrum, double x);

// N_L^-(x) = lim_{δ↓0} N_L(x - δ).
BigInt CountingLeft(const DistinctSpectrum& spectrum, double x);

// μ_n(ρ(L)) = 1/M_k for M_{k-1} < n <= M_k.
Rational WeightEigenvalue(const DistinctSpectrum& spectrum, const BigInt& n);

enum class GrowthClass { kAsymptoticallyContinuous, kGeometricGrowth, kIrregular };

std::string GrowthClassName(GrowthClass c);

struct Window {
  std::size_t burn_in = 0;  // K₀: blocks skipped before sampling
  std::size_t length = 0;   // W: sampled blocks k = K₀+1 .. K₀+W
};

// K₀ = max(10, K/2), W = K - K₀ (zero when K <= K₀).
Window DefaultWindow(std::size_t blocks);

struct GrowthDiagnostics {
  std::vector<double> ratio_samples;    // M_k / M_{k-1}
  std::vector<double> relmult_samples;  // m_k / M_k
  // limsup surrogates: max over the final fifth of the window.
  double tail_limsup_ratio = 0.0;
  double tail_limsup_relmult = 0.0;
  double max_relmult = 0.0;
  double relmult_trend = 0.0;   // least-squares slope over the window
  double ratio_mean = 0.0;
  double ratio_spread = 0.0;    // max |r - mean| / mean
  GrowthClass classification = GrowthClass::kIrregular;
  double growth_constant = 0.0;  // c when classification is kGeometricGrowth
  Window window;
};

inline constexpr double kContinuityRelmultThreshold = 0.05;
inline constexpr double kGeometricSpreadThreshold = 0.01;
inline constexpr double kGeometricMinRatio = 1.05;

GrowthDiagnostics ComputeGrowthDiagnostics(const DistinctSpectrum& spectrum, std::size_t blocks,
                                           std::optional<Window> window = std::nullopt);

// Continuous piecewise-affine φ with φ(λ̃_k) = M_k.
double InterpolantAt(const DistinctSpectrum& spectrum, double x);

}  // namespace nspec

#endif  // NSPEC_SPECTRUM_HPP_
