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

#include "nspec/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>

#include "nspec/error.hpp"
#include "nspec/fit.hpp"

namespace nspec {
namespace {

constexpr int kHarmonicHead = 64;
constexpr int kRichardsonOrder = 3;
// Σ|coefficients| of the order-3 Richardson combination with ratio 2, rounded up.
constexpr double kRichardsonGain = 10.0;

std::string FormatComplex(Complex s) {
  std::ostringstream out;
  out.precision(17);
  out << s.real();
  if (s.imag() != 0.0) out << (s.imag() < 0 ? " - " : " + ") << std::abs(s.imag()) << "i";
  return out.str();
}

// Lazily extended (log m_k, log M_k) table shared by the evaluations of one
// residue estimate.
class BlockLogTable {
 public:
  BlockLogTable(const DistinctSpectrum& spectrum, std::size_t budget)
      : cursor_(spectrum.Open()), budget_(budget) {}

  // True when block `index` (0-based) is available.
  bool Ensure(std::size_t index) {
    while (log_m_.size() <= index) {
      if (done_ || log_m_.size() >= budget_) return false;
      auto block = cursor_->Next();
      if (!block) {
        done_ = true;
        return false;
      }
      log_m_.push_back(LogBig(block->multiplicity));
      log_cum_.push_back(LogBig(block->cumulated));
      cum_.push_back(ToDouble(block->cumulated));
    }
    return true;
  }
  bool exhausted() const { return done_; }

  double log_m(std::size_t i) const { return log_m_[i]; }
  double log_cum(std::size_t i) const { return log_cum_[i]; }
  double cum(std::size_t i) const { return cum_[i]; }

 private:
  std::unique_ptr<BlockCursor> cursor_;
  std::size_t budget_;
  bool done_ = false;
  std::vector<double> log_m_, log_cum_, cum_;
};

ZetaValue HarmonicZeta(Complex s, double tol) {
  CompensatedSum<Complex> head;
  for (int n = 1; n <= kHarmonicHead; ++n) head.Add(std::exp(-s * std::log(static_cast<double>(n))));
  const SeriesValue tail = HurwitzZeta(s, kHarmonicHead + 1.0);
  ZetaValue out{s, head.value() + tail.value, tail.error_bound, kHarmonicHead};
  if (out.tail_bound > tol) {
    Fail(ErrorKind::kTolUnreachable, "Euler-Maclaurin tail bound " +
                                         std::to_string(out.tail_bound) + " exceeds tol");
  }
  return out;
}

// Max of log(M_k/M_{k-1}) and of m_k over the second half of blocks [0, count).
struct TailShape {
  double log_ratio = 0.0;
  double multiplicity = 0.0;
};

TailShape ObservedTailShape(const BlockLogTable& table, std::size_t count) {
  TailShape shape;
  for (std::size_t i = std::max<std::size_t>(1, count / 2); i < count; ++i) {
    shape.log_ratio = std::max(shape.log_ratio, table.log_cum(i) - table.log_cum(i - 1));
    shape.multiplicity = std::max(shape.multiplicity, std::exp(table.log_m(i)));
  }
  return shape;
}

ZetaValue TableZeta(BlockLogTable& table, Complex s, double tol, ZetaMode mode) {
  const double sigma = s.real();
  CompensatedSum<Complex> sum;
  std::size_t k = 0;
  std::size_t next_check = 16;
  double bound = std::numeric_limits<double>::infinity();
  Complex tail = 0.0;
  while (table.Ensure(k)) {
    sum.Add(std::exp(table.log_m(k) - s * table.log_cum(k)));
    ++k;
    if (mode == ZetaMode::kCertified) {
      bound = std::exp((1.0 - sigma) * table.log_cum(k - 1)) / (sigma - 1.0);
      if (bound <= tol) break;
    } else if (k >= next_check) {
      next_check = k + k / 8 + 1;
      const double a = table.cum(k - 1) + 1.0;
      const SeriesValue hz = HurwitzZeta(s, a);
      const TailShape shape = ObservedTailShape(table, k);
      // Per block, |M_k^{-s} - n^{-s}| <= |s|·min(log(M_k/M_{k-1})·n^{-σ}, m_k·n^{-σ-1}).
      const double by_ratio =
          shape.log_ratio * HurwitzZeta(Complex(sigma, 0.0), a).value.real();
      const double by_mult =
          shape.multiplicity * HurwitzZeta(Complex(sigma + 1.0, 0.0), a).value.real();
      tail = hz.value;
      bound = std::abs(s) * std::min(by_ratio, by_mult) + hz.error_bound;
      if (bound <= tol) break;
    }
  }
  if (table.exhausted() && !table.Ensure(k)) {
    return ZetaValue{s, sum.value(), 0.0, k};
  }
  if (bound > tol) {
    Fail(ErrorKind::kTolUnreachable, "block budget exhausted after " + std::to_string(k) +
                                         " blocks with tail bound " + std::to_string(bound));
  }
  return ZetaValue{s, sum.value() + tail, bound, k};
}

}  // namespace

ZetaValue ZetaEval(const DistinctSpectrum& spectrum, Complex s, double tol, ZetaMode mode,
                   std::size_t block_budget) {
  if (s.real() <= 1.0) {
    Fail(ErrorKind::kDivergent, "zeta series diverges at s = " + FormatComplex(s));
  }
  if (!(tol > 0.0)) Fail(ErrorKind::kOutOfRange, "tol must be positive");
  if (spectrum.traits().harmonic_weights) return HarmonicZeta(s, tol);
  BlockLogTable table(spectrum, block_budget);
  return TableZeta(table, s, tol, mode);
}

ResidueEstimate EstimateResidue(const DistinctSpectrum& spectrum, double tol,
                                const ResidueOptions& options) {
  if (!(tol > 0.0)) Fail(ErrorKind::kOutOfRange, "tol must be positive");
  if (options.first_level < 1 || options.last_level < options.first_level + kRichardsonOrder + 2) {
    Fail(ErrorKind::kOutOfRange, "residue levels leave too few extrapolants");
  }
  const bool harmonic = spectrum.traits().harmonic_weights;
  BlockLogTable table(spectrum, options.block_budget);
  ResidueEstimate est;
  std::vector<double> previous;
  std::string stop_reason = "budget of levels exhausted";
  for (int j = options.first_level; j <= options.last_level; ++j) {
    const double h = std::ldexp(1.0, -j);
    const double point_tol = tol / (kRichardsonGain * h);
    double g = 0.0;
    try {
      const ZetaValue z = harmonic ? HarmonicZeta(1.0 + h, point_tol)
                                   : TableZeta(table, 1.0 + h, point_tol, options.mode);
      g = h * z.value.real();
    } catch (const Error& e) {
      stop_reason = std::string("evaluation at s = 1 + 2^-") + std::to_string(j) +
                    " failed: " + e.what();
      break;
    }
    std::vector<double> row{g};
    for (int m = 1; m <= kRichardsonOrder && m <= static_cast<int>(previous.size()); ++m) {
      const double f = std::ldexp(1.0, m);
      row.push_back((f * row[m - 1] - previous[m - 1]) / (f - 1.0));
    }
    est.levels_used = j - options.first_level + 1;
    if (row.size() == kRichardsonOrder + 1) {
      est.extrapolants.push_back(row.back());
      const std::size_t n = est.extrapolants.size();
      if (n >= 3) {
        const double d1 = std::abs(est.extrapolants[n - 1] - est.extrapolants[n - 2]);
        const double d2 = std::abs(est.extrapolants[n - 2] - est.extrapolants[n - 3]);
        if (d1 < tol && d2 < tol) {
          est.value = est.extrapolants.back();
          est.last_change = d1;
          return est;
        }
      }
    }
    previous = std::move(row);
  }
  Fail(ErrorKind::kNoConvergence, "residue extrapolants did not settle within tol (" +
                                      stop_reason + ")");
}

std::string EvidenceName(Evidence e) {
  switch (e) {
    case Evidence::kConverging: return "converging";
    case Evidence::kDiverging: return "diverging";
    case Evidence::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

CriteriaReport CriteriaCheck(const DistinctSpectrum& spectrum, std::size_t blocks,
                             const std::vector<double>& alphas) {
  if (blocks < kMinCriteriaBlocks) {
    Fail(ErrorKind::kInsufficientBlocks, "criteria check needs K >= 20 blocks");
  }
  std::vector<SpectralPoint> prefix = spectrum.Prefix(blocks);
  if (prefix.size() < blocks) {
    Fail(ErrorKind::kInsufficientBlocks, "spectrum '" + spectrum.name() + "' has only " +
                                             std::to_string(prefix.size()) + " blocks");
  }
  CriteriaReport r;
  r.blocks = blocks;
  CompensatedSum<double> sum_sq;
  std::vector<double> log_k, log_sq, log_m, log_cum, log_rem, log_phi;
  const std::size_t tail_from = blocks / 2;
  for (std::size_t i = 0; i < blocks; ++i) {
    const double rel = RatioBig(prefix[i].multiplicity, prefix[i].cumulated);
    sum_sq.Add(rel * rel);
    if (i < tail_from) continue;
    log_k.push_back(std::log(static_cast<double>(prefix[i].k)));
    log_sq.push_back(2.0 * std::log(rel));
    log_m.push_back(LogBig(prefix[i].multiplicity));
    log_cum.push_back(LogBig(prefix[i].cumulated));
    if (i + 1 < blocks) {
      // At the midpoint between knots, N - φ = m_{k+1}/2 and φ = (M_k + M_{k+1})/2.
      log_rem.push_back(LogBig(prefix[i + 1].multiplicity) - std::log(2.0));
      log_phi.push_back(LogBig(prefix[i].cumulated + prefix[i + 1].cumulated) - std::log(2.0));
    }
  }
  r.sum_relmult_sq_partial = sum_sq.value();
  r.relmult_sq_decay = -FitLine(log_k, log_sq).slope;
  if (r.relmult_sq_decay > 1.1) {
    r.sum_relmult_sq_evidence = Evidence::kConverging;
  } else if (r.relmult_sq_decay < 0.9) {
    r.sum_relmult_sq_evidence = Evidence::kDiverging;
  }

  try {
    r.alpha_slope = FitLine(log_cum, log_m).slope;
    if (r.alpha_slope <= 1.05) r.alpha_fit = std::clamp(r.alpha_slope, 0.0, 1.0);
  } catch (const Error&) {
    // Flat M_k leaves α undetermined.
  }
  for (double alpha : alphas) {
    r.alpha_criterion.push_back({alpha, r.alpha_fit && *r.alpha_fit <= alpha + 1e-9});
  }
  try {
    r.remainder_exponent = FitLine(log_phi, log_rem).slope;
  } catch (const Error&) {
  }
  return r;
}

ZetaValue FreeGroupZeta(int p, Complex s, double tol) {
  if (p < 2) Fail(ErrorKind::kInvalidSpec, "p: free group rank must be >= 2");
  if (s.real() <= 0.0) Fail(ErrorKind::kDivergent, "continuation is only defined for Re s > 0");
  if (!(tol > 0.0)) Fail(ErrorKind::kOutOfRange, "tol must be positive");
  const double q = 2.0 * p - 1.0;
  const double log_q = std::log(q);
  const Complex w = (1.0 - s) * log_q;
  const Complex one_minus = -Expm1(w);  // 1 - q^{1-s}
  if (std::abs(one_minus) < 1e-12) {
    Fail(ErrorKind::kPoleAt, "pole of the continuation at s = " + FormatComplex(s));
  }
  const Complex z1 = std::exp(w) / one_minus;
  const Complex phi = std::exp((1.0 - s) * std::log(2.0 * p) + s * std::log(2.0 * p - 2.0)) / q;

  // |1-(1-ε)^s| <= |s|·log(1/(1-ε)) with ε = q^{-k} and |(1-ε)^{-s}| <= (q/(q-1))^{σ} gives
  // |term_k| <= C·q^{-kσ}, C = |s|·(q/(q-1))^{σ+1}.
  const double sigma = s.real();
  const double c = std::abs(s) * std::pow(q / (q - 1.0), sigma + 1.0);
  const double ratio = std::pow(q, -sigma);
  CompensatedSum<Complex> z2;
  double bound = std::numeric_limits<double>::infinity();
  std::uint64_t k = 0;
  constexpr std::uint64_t kMaxTerms = 10'000'000;
  while (k < kMaxTerms) {
    ++k;
    const double kd = static_cast<double>(k);
    const double eps = std::exp(-kd * log_q);
    const Complex dev = -Expm1(-s * std::log1p(-eps));  // 1 - (1-ε)^{-s}
    z2.Add(std::exp(kd * (1.0 - s) * log_q) * dev);
    bound = std::abs(phi) * c * std::exp(-(kd + 1.0) * sigma * log_q) / (1.0 - ratio);
    if (bound <= tol) break;
  }
  if (bound > tol) Fail(ErrorKind::kTolUnreachable, "Z_2 tail did not close within the term budget");
  return ZetaValue{s, phi * (z1 - z2.value()), bound, k};
}

ZetaValue RiemannZeta(Complex s) {
  if (s == Complex(1.0, 0.0)) Fail(ErrorKind::kPoleAt, "Riemann zeta pole at s = 1");
  if (s.real() <= 0.0) Fail(ErrorKind::kOutOfRange, "reference zeta needs Re s > 0");
  const SeriesValue v = HurwitzZeta(s, 1.0);
  return ZetaValue{s, v.value, v.error_bound, 0};
}

double PowerDeviationBound(double eps, Complex s) {
  if (!(eps >= 0.0 && eps < 1.0)) Fail(ErrorKind::kOutOfRange, "ε must lie in [0, 1)");
  return -std::abs(s) * std::log1p(-eps);
}

Complex PowerDeviation(double eps, Complex s) {
  if (!(eps >= 0.0 && eps < 1.0)) Fail(ErrorKind::kOutOfRange, "ε must lie in [0, 1)");
  return -Expm1(s * std::log1p(-eps));
}

}  // namespace nspec
