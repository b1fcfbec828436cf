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

#ifndef NSPEC_HYPERTRACE_HPP_
#define NSPEC_HYPERTRACE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <nlohmann/json.hpp>

#include "nspec/special.hpp"
#include "nspec/spectrum.hpp"

namespace nspec {

enum class EvidenceLabel { kHolds, kFails, kInconclusive };
std::string EvidenceLabelName(EvidenceLabel e);

enum class Overall { kHypothesesHold, kHypothesesFail, kInconclusive };
std::string OverallName(Overall o);

struct HypertraceVerdict {
  std::size_t blocks = 0;
  EvidenceLabel asympt_continuous = EvidenceLabel::kInconclusive;
  EvidenceLabel gap_condition = EvidenceLabel::kInconclusive;
  std::vector<double> gap_sequence;  // (m_k/M_k)/(λ̃_{k+1} - λ̃_k) over the window
  double gap_tail_max = 0.0;
  double gap_trend = 0.0;
  double phi_logderiv_tail = 0.0;  // sup of (M_{k+1}-M_k)/((λ̃_{k+1}-λ̃_k)·M_k)
  bool gaps_bounded_below = false;
  double gap_inf = 0.0;
  double relmult_tail = 0.0;
  Overall overall = Overall::kInconclusive;
};

inline constexpr std::size_t kDefaultHypothesisBlocks = 20000;
inline constexpr double kGapThreshold = 0.02;
inline constexpr double kLogDerivThreshold = 0.02;

HypertraceVerdict CheckHypotheses(const DistinctSpectrum& spectrum,
                                  std::size_t blocks = kDefaultHypothesisBlocks);

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Matrix of an operator in the eigenbasis n = 1..rows (rows may exceed the
// column count, as for truncated shifts S^k: e_n -> e_{n+k}).
struct TruncatedOperator {
  std::string label;
  SparseMatrix entries;
};

TruncatedOperator ShiftOperator(std::size_t n, std::size_t power = 1);
TruncatedOperator IdentityOperator(std::size_t n);
TruncatedOperator DenseOperator(const Eigen::MatrixXcd& m, std::string label = "dense");
// {"label": "shift", "power": k}, {"label": "identity"} or {"dense": [[...]]};
// entries may be numbers or [re, im] pairs. `n` sizes the built-in families.
TruncatedOperator ParseOperator(const nlohmann::json& j, std::size_t n);

enum class PhiKind { kCountingInterpolant, kIdentity };
enum class TraceNormMethod { kAuto, kDenseSvd };

inline constexpr std::size_t kMaxSvdDimension = 2000;

// f(λ̃_k) for k = 1..count with f = φ^{-s}: M_k^{-s} or λ̃_k^{-s}. Requires
// a multiplicity-one prefix.
std::vector<double> FunctionValues(const DistinctSpectrum& spectrum, std::size_t count, double s,
                                   PhiKind phi);

// [a, f(L)] entrywise by the chain rule: (f_i - f_j)·a_ij.
SparseMatrix ChainRuleCommutator(const std::vector<double>& f, const SparseMatrix& a);

// Σ of singular values. Weighted partial permutations (at most one nonzero
// per row and column) are summed exactly; everything else goes through SVD.
double TraceNorm(const SparseMatrix& m, TraceNormMethod method = TraceNormMethod::kAuto);

double CommutatorTraceNorm(const DistinctSpectrum& spectrum, const TruncatedOperator& a, double s,
                           PhiKind phi = PhiKind::kCountingInterpolant,
                           TraceNormMethod method = TraceNormMethod::kAuto);

struct WeightedTrace {
  Complex value;
  Complex scaled;  // (s-1)·value
  double diagonal_tail_bound = 0.0;
  std::size_t truncation = 0;
};

// Σ_{n<=N} a_nn·φ(λ̃_n)^{-s} over the leading N×N block of a.
WeightedTrace ComputeWeightedTrace(const DistinctSpectrum& spectrum, const TruncatedOperator& a,
                                   double s, std::size_t truncation);

}  // namespace nspec

#endif  // NSPEC_HYPERTRACE_HPP_
