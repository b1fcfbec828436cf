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

#include "nspec/hypertrace.hpp"

#include <algorithm>
#include <cmath>

#include "nspec/error.hpp"
#include "nspec/fit.hpp"

namespace nspec {
namespace {

double TailMax(const std::vector<double>& v) {
  const std::size_t tail = std::max<std::size_t>(1, v.size() / 5);
  return *std::max_element(v.end() - static_cast<std::ptrdiff_t>(tail), v.end());
}

double TailMin(const std::vector<double>& v) {
  const std::size_t tail = std::max<std::size_t>(1, v.size() / 5);
  return *std::min_element(v.end() - static_cast<std::ptrdiff_t>(tail), v.end());
}

Complex ParseEntry(const nlohmann::json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  Fail(ErrorKind::kInvalidSpec, "matrix entries must be numbers or [re, im] pairs");
}

}  // namespace

std::string EvidenceLabelName(EvidenceLabel e) {
  switch (e) {
    case EvidenceLabel::kHolds: return "holds";
    case EvidenceLabel::kFails: return "fails";
    case EvidenceLabel::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string OverallName(Overall o) {
  switch (o) {
    case Overall::kHypothesesHold: return "HypothesesHold";
    case Overall::kHypothesesFail: return "HypothesesFail";
    case Overall::kInconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

HypertraceVerdict CheckHypotheses(const DistinctSpectrum& spectrum, std::size_t blocks) {
  if (blocks < 20) Fail(ErrorKind::kInsufficientBlocks, "hypothesis check needs K >= 20 blocks");
  const GrowthDiagnostics growth = ComputeGrowthDiagnostics(spectrum, blocks);
  const Window w = growth.window;

  HypertraceVerdict v;
  v.blocks = blocks;
  v.relmult_tail = growth.tail_limsup_relmult;
  std::vector<double> slope_ratio, log_k, log_gap;
  auto cursor = spectrum.Open();
  std::optional<SpectralPoint> previous;
  while (true) {
    auto block = cursor->Next();
    if (!block || block->k > w.burn_in + w.length + 1) break;
    if (previous && previous->k > w.burn_in) {
      const double gap = block->eigenvalue - previous->eigenvalue;
      const double rel = RatioBig(previous->multiplicity, previous->cumulated);
      v.gap_sequence.push_back(rel / gap);
      slope_ratio.push_back(RatioBig(block->multiplicity, previous->cumulated) / gap);
      log_k.push_back(std::log(static_cast<double>(previous->k)));
      log_gap.push_back(std::log(gap));
    }
    previous = std::move(block);
  }
  if (v.gap_sequence.size() < 2) {
    Fail(ErrorKind::kInsufficientBlocks, "too few consecutive blocks in the tail window");
  }

  switch (growth.classification) {
    case GrowthClass::kAsymptoticallyContinuous:
      v.asympt_continuous = EvidenceLabel::kHolds;
      break;
    case GrowthClass::kGeometricGrowth:
      v.asympt_continuous = EvidenceLabel::kFails;
      break;
    case GrowthClass::kIrregular:
      v.asympt_continuous = growth.tail_limsup_relmult >= kContinuityRelmultThreshold
                                ? EvidenceLabel::kFails
                                : EvidenceLabel::kInconclusive;
      break;
  }

  v.gap_tail_max = TailMax(v.gap_sequence);
  v.gap_trend = TrendSlope(v.gap_sequence);
  if (v.gap_tail_max < kGapThreshold && v.gap_trend <= 0.0) {
    v.gap_condition = EvidenceLabel::kHolds;
  } else if (TailMin(v.gap_sequence) >= kGapThreshold && v.gap_trend >= 0.0) {
    v.gap_condition = EvidenceLabel::kFails;
  }
  v.phi_logderiv_tail = *std::max_element(slope_ratio.begin(), slope_ratio.end());
  v.gap_inf = std::exp(*std::min_element(log_gap.begin(), log_gap.end()));
  try {
    v.gaps_bounded_below = FitLine(log_k, log_gap).slope >= -0.1;
  } catch (const Error&) {
    v.gaps_bounded_below = true;  // all gaps at one scale
  }

  if (v.asympt_continuous == EvidenceLabel::kFails) {
    v.overall = Overall::kHypothesesFail;
  } else if (v.gap_condition == EvidenceLabel::kHolds ||
             v.phi_logderiv_tail < kLogDerivThreshold) {
    v.overall = Overall::kHypothesesHold;
  }
  return v;
}

TruncatedOperator ShiftOperator(std::size_t n, std::size_t power) {
  if (n == 0) Fail(ErrorKind::kDimensionMismatch, "shift needs dimension >= 1");
  SparseMatrix m(static_cast<Eigen::Index>(n + power), static_cast<Eigen::Index>(n));
  std::vector<Eigen::Triplet<Complex>> t;
  for (std::size_t j = 0; j < n; ++j) {
    t.emplace_back(static_cast<Eigen::Index>(j + power), static_cast<Eigen::Index>(j), 1.0);
  }
  m.setFromTriplets(t.begin(), t.end());
  return {power == 1 ? "shift" : "shift^" + std::to_string(power), std::move(m)};
}

TruncatedOperator IdentityOperator(std::size_t n) {
  if (n == 0) Fail(ErrorKind::kDimensionMismatch, "identity needs dimension >= 1");
  SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setIdentity();
  return {"identity", std::move(m)};
}

TruncatedOperator DenseOperator(const Eigen::MatrixXcd& m, std::string label) {
  if (m.rows() == 0 || m.cols() == 0) Fail(ErrorKind::kDimensionMismatch, "empty matrix");
  if (!m.allFinite()) Fail(ErrorKind::kInvalidSpec, "matrix entries must be finite");
  return {std::move(label), m.sparseView()};
}

TruncatedOperator ParseOperator(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object()) Fail(ErrorKind::kInvalidSpec, "operator spec must be a JSON object");
  for (const auto& item : j.items()) {
    if (item.key() != "label" && item.key() != "dense" && item.key() != "power") {
      Fail(ErrorKind::kInvalidSpec, "unknown operator key '" + item.key() + "'");
    }
  }
  const std::string label = j.contains("label") && j.at("label").is_string()
                                ? j.at("label").get<std::string>()
                                : std::string("dense");
  if (j.contains("dense")) {
    const auto& rows = j.at("dense");
    if (!rows.is_array() || rows.empty() || !rows[0].is_array() || rows[0].empty()) {
      Fail(ErrorKind::kInvalidSpec, "dense: expected a nonempty array of rows");
    }
    Eigen::MatrixXcd m(rows.size(), rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != rows[0].size()) {
        Fail(ErrorKind::kDimensionMismatch, "dense: rows must have equal length");
      }
      for (std::size_t c = 0; c < rows[r].size(); ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = ParseEntry(rows[r][c]);
      }
    }
    return DenseOperator(m, label);
  }
  if (label == "shift") {
    std::size_t power = 1;
    if (j.contains("power")) {
      if (!j.at("power").is_number_unsigned() || j.at("power").get<std::size_t>() == 0) {
        Fail(ErrorKind::kInvalidSpec, "power: must be a positive integer");
      }
      power = j.at("power").get<std::size_t>();
    }
    return ShiftOperator(n, power);
  }
  if (label == "identity") return IdentityOperator(n);
  Fail(ErrorKind::kInvalidSpec, "unknown operator label '" + label + "'");
}

std::vector<double> FunctionValues(const DistinctSpectrum& spectrum, std::size_t count, double s,
                                   PhiKind phi) {
  std::vector<double> f;
  f.reserve(count);
  auto cursor = spectrum.Open();
  while (f.size() < count) {
    auto block = cursor->Next();
    if (!block) {
      Fail(ErrorKind::kInsufficientBlocks, "spectrum '" + spectrum.name() + "' has fewer than " +
                                               std::to_string(count) + " eigenvalues");
    }
    if (block->multiplicity != 1) {
      Fail(ErrorKind::kMultiplicityUnsupported,
           "block " + std::to_string(block->k) + " has multiplicity " +
               ToString(block->multiplicity) + "; matrix checks need multiplicity one");
    }
    const double base = phi == PhiKind::kIdentity ? std::log(block->eigenvalue)
                                                  : LogBig(block->cumulated);
    f.push_back(std::exp(-s * base));
  }
  return f;
}

SparseMatrix ChainRuleCommutator(const std::vector<double>& f, const SparseMatrix& a) {
  if (f.size() < static_cast<std::size_t>(std::max(a.rows(), a.cols()))) {
    Fail(ErrorKind::kDimensionMismatch, "too few function values for the operator size");
  }
  std::vector<Eigen::Triplet<Complex>> t;
  for (Eigen::Index col = 0; col < a.outerSize(); ++col) {
    for (SparseMatrix::InnerIterator it(a, col); it; ++it) {
      const Complex value = (f[it.row()] - f[it.col()]) * it.value();
      if (value != Complex(0.0)) t.emplace_back(it.row(), it.col(), value);
    }
  }
  SparseMatrix c(a.rows(), a.cols());
  c.setFromTriplets(t.begin(), t.end());
  return c;
}

double TraceNorm(const SparseMatrix& m, TraceNormMethod method) {
  if (method == TraceNormMethod::kAuto) {
    std::vector<int> row_count(m.rows(), 0), col_count(m.cols(), 0);
    bool partial_permutation = true;
    CompensatedSum<double> sum;
    for (Eigen::Index col = 0; col < m.outerSize() && partial_permutation; ++col) {
      for (SparseMatrix::InnerIterator it(m, col); it; ++it) {
        if (it.value() == Complex(0.0)) continue;
        if (++row_count[it.row()] > 1 || ++col_count[it.col()] > 1) {
          partial_permutation = false;
          break;
        }
        sum.Add(std::abs(it.value()));
      }
    }
    if (partial_permutation) return sum.value();
  }
  if (static_cast<std::size_t>(std::max(m.rows(), m.cols())) > kMaxSvdDimension) {
    Fail(ErrorKind::kOutOfRange, "dense SVD is limited to dimension " +
                                     std::to_string(kMaxSvdDimension));
  }
  const Eigen::MatrixXcd dense(m);
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(dense);
  CompensatedSum<double> sum;
  const auto& sv = svd.singularValues();
  for (Eigen::Index i = sv.size(); i-- > 0;) sum.Add(sv[i]);
  return sum.value();
}

double CommutatorTraceNorm(const DistinctSpectrum& spectrum, const TruncatedOperator& a, double s,
                           PhiKind phi, TraceNormMethod method) {
  if (!(s > 1.0)) Fail(ErrorKind::kOutOfRange, "commutator trace norm needs s > 1");
  const auto dim = static_cast<std::size_t>(std::max(a.entries.rows(), a.entries.cols()));
  const std::vector<double> f = FunctionValues(spectrum, dim, s, phi);
  return TraceNorm(ChainRuleCommutator(f, a.entries), method);
}

WeightedTrace ComputeWeightedTrace(const DistinctSpectrum& spectrum, const TruncatedOperator& a,
                                   double s, std::size_t truncation) {
  if (!(s > 1.0)) Fail(ErrorKind::kOutOfRange, "weighted trace needs s > 1");
  const auto square = static_cast<std::size_t>(std::min(a.entries.rows(), a.entries.cols()));
  if (truncation == 0 || truncation > square) {
    Fail(ErrorKind::kDimensionMismatch, "truncation must lie in [1, " + std::to_string(square) + "]");
  }
  const std::vector<double> f =
      FunctionValues(spectrum, truncation, s, PhiKind::kCountingInterpolant);
  CompensatedSum<Complex> sum;
  double max_diag = 0.0;
  for (std::size_t n = 0; n < truncation; ++n) {
    const Complex d = a.entries.coeff(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    if (d == Complex(0.0)) continue;
    max_diag = std::max(max_diag, std::abs(d));
    sum.Add(d * f[n]);
  }
  WeightedTrace w;
  w.value = sum.value();
  w.scaled = (s - 1.0) * w.value;
  w.truncation = truncation;
  // Σ_{n>N} M_n^{-s} <= Σ_{n>N} n^{-s} <= N^{1-s}/(s-1).
  w.diagonal_tail_bound =
      max_diag * std::pow(static_cast<double>(truncation), 1.0 - s) / (s - 1.0);
  return w;
}

}  // namespace nspec
