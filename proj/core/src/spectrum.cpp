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

#include "nspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nspec/error.hpp"
#include "nspec/fit.hpp"

namespace nspec {
namespace {

constexpr double kRelativeTieTolerance = 1e-12;

class MergingCursor final : public BlockCursor {
 public:
  MergingCursor(RawSource source, TieRule rule) : source_(std::move(source)), rule_(rule) {}

  std::optional<SpectralPoint> Next() override {
    std::optional<RawPair> head = Pull();
    if (!head) return std::nullopt;
    RawPair block = std::move(*head);
    while (true) {
      std::optional<RawPair> peek = Pull();
      if (!peek) break;
      if (Tied(block.eigenvalue, peek->eigenvalue)) {
        block.multiplicity += peek->multiplicity;
      } else {
        pending_ = std::move(peek);
        break;
      }
    }
    if (last_eigenvalue_ && !(block.eigenvalue > *last_eigenvalue_)) {
      std::ostringstream msg;
      msg << "eigenvalues must be nondecreasing in the raw stream (got " << block.eigenvalue
          << " after " << *last_eigenvalue_ << ")";
      Fail(ErrorKind::kInvalidSpec, msg.str());
    }
    last_eigenvalue_ = block.eigenvalue;
    cumulated_ += block.multiplicity;
    ++index_;
    return SpectralPoint{index_, block.eigenvalue, std::move(block.multiplicity), cumulated_};
  }

 private:
  std::optional<RawPair> Pull() {
    if (pending_) {
      std::optional<RawPair> out = std::move(pending_);
      pending_.reset();
      return out;
    }
    while (true) {
      std::optional<RawPair> raw = source_();
      if (!raw) return std::nullopt;
      if (!std::isfinite(raw->eigenvalue) || raw->eigenvalue < 0.0) {
        Fail(ErrorKind::kInvalidSpec, "eigenvalues must be finite and nonnegative");
      }
      if (raw->multiplicity <= 0) Fail(ErrorKind::kInvalidSpec, "multiplicities must be positive");
      if (raw->eigenvalue == 0.0) continue;  // kernel is never represented
      return raw;
    }
  }

  bool Tied(double a, double b) const {
    if (rule_ == TieRule::kExact) return a == b;
    return std::abs(a - b) <= kRelativeTieTolerance * std::max(std::abs(a), std::abs(b));
  }

  RawSource source_;
  TieRule rule_;
  std::optional<RawPair> pending_;
  std::optional<double> last_eigenvalue_;
  BigInt cumulated_ = 0;
  std::uint64_t index_ = 0;
};

double MaxOfTail(const std::vector<double>& samples) {
  const std::size_t tail = std::max<std::size_t>(1, samples.size() / 5);
  return *std::max_element(samples.end() - static_cast<std::ptrdiff_t>(tail), samples.end());
}

}  // namespace

std::unique_ptr<BlockCursor> MakeMergingCursor(RawSource source, TieRule rule) {
  return std::make_unique<MergingCursor>(std::move(source), rule);
}

DistinctSpectrum::DistinctSpectrum(std::string name, nlohmann::json parameters,
                                   CursorFactory factory, SpectrumTraits traits,
                                   KnownConstants known)
    : name_(std::move(name)),
      parameters_(std::move(parameters)),
      factory_(std::move(factory)),
      traits_(std::move(traits)),
      known_(known) {}

std::unique_ptr<BlockCursor> DistinctSpectrum::Open() const { return factory_(); }

std::vector<SpectralPoint> DistinctSpectrum::Prefix(std::size_t count) const {
  std::vector<SpectralPoint> out;
  out.reserve(std::min<std::size_t>(count, 1 << 20));
  auto cursor = Open();
  while (out.size() < count) {
    auto block = cursor->Next();
    if (!block) break;
    out.push_back(std::move(*block));
  }
  return out;
}

BigInt Counting(const DistinctSpectrum& spectrum, double x) {
  if (!std::isfinite(x)) Fail(ErrorKind::kOutOfRange, "counting needs a finite argument");
  if (x <= 0.0) return 0;
  if (spectrum.traits().law_counting) return spectrum.traits().law_counting(x);
  BigInt count = 0;
  auto cursor = spectrum.Open();
  while (auto block = cursor->Next()) {
    if (block->eigenvalue > x) break;
    count = block->cumulated;
  }
  return count;
}

BigInt CountingLeft(const DistinctSpectrum& spectrum, double x) {
  if (!std::isfinite(x) || x <= 0.0) Fail(ErrorKind::kOutOfRange, "left limit needs x > 0");
  if (spectrum.traits().law_counting) {
    // N^-(x) = N(x) - m at x when x is an eigenvalue; for unit laws m = 1.
    const BigInt n = spectrum.traits().law_counting(x);
    if (n > 0 && spectrum.traits().law_eigenvalue(ToDouble(n)) == x) return n - 1;
    return n;
  }
  BigInt count = 0;
  auto cursor = spectrum.Open();
  while (auto block = cursor->Next()) {
    if (block->eigenvalue >= x) break;
    count = block->cumulated;
  }
  return count;
}

Rational WeightEigenvalue(const DistinctSpectrum& spectrum, const BigInt& n) {
  if (n < 1) Fail(ErrorKind::kOutOfRange, "weight eigenvalue index must be >= 1");
  if (spectrum.traits().harmonic_weights) return Rational(BigInt(1), n);
  auto cursor = spectrum.Open();
  while (auto block = cursor->Next()) {
    if (block->cumulated >= n) return Rational(BigInt(1), block->cumulated);
  }
  Fail(ErrorKind::kOutOfRange, "index " + ToString(n) + " exceeds the spectrum size");
}

std::string GrowthClassName(GrowthClass c) {
  switch (c) {
    case GrowthClass::kAsymptoticallyContinuous: return "AsymptoticallyContinuous";
    case GrowthClass::kGeometricGrowth: return "GeometricGrowth";
    case GrowthClass::kIrregular: return "Irregular";
  }
  return "Irregular";
}

Window DefaultWindow(std::size_t blocks) {
  Window w;
  w.burn_in = std::max<std::size_t>(10, blocks / 2);
  w.length = blocks > w.burn_in ? blocks - w.burn_in : 0;
  return w;
}

GrowthDiagnostics ComputeGrowthDiagnostics(const DistinctSpectrum& spectrum, std::size_t blocks,
                                           std::optional<Window> window) {
  const Window w = window.value_or(DefaultWindow(blocks));
  if (w.length == 0) {
    Fail(ErrorKind::kInsufficientBlocks, "growth window is empty for " + std::to_string(blocks) +
                                             " blocks");
  }
  if (w.burn_in + w.length > blocks) {
    Fail(ErrorKind::kInsufficientBlocks, "window exceeds the requested block count");
  }

  GrowthDiagnostics d;
  d.window = w;
  d.ratio_samples.reserve(w.length);
  d.relmult_samples.reserve(w.length);

  auto cursor = spectrum.Open();
  BigInt previous = 0;
  std::size_t seen = 0;
  while (seen < w.burn_in + w.length) {
    auto block = cursor->Next();
    if (!block) {
      Fail(ErrorKind::kInsufficientBlocks,
           "spectrum '" + spectrum.name() + "' ended after " + std::to_string(seen) +
               " blocks; growth window needs " + std::to_string(w.burn_in + w.length));
    }
    ++seen;
    if (seen > w.burn_in) {
      d.relmult_samples.push_back(RatioBig(block->multiplicity, block->cumulated));
      // M_0 = 0, so the ratio is only defined from k = 2 on; the first block
      // can only enter the window with K₀ = 0 and is then skipped.
      if (previous > 0) d.ratio_samples.push_back(RatioBig(block->cumulated, previous));
    }
    previous = block->cumulated;
  }
  if (d.ratio_samples.empty()) d.ratio_samples.push_back(1.0 / (1.0 - d.relmult_samples.back()));

  d.tail_limsup_ratio = MaxOfTail(d.ratio_samples);
  d.tail_limsup_relmult = MaxOfTail(d.relmult_samples);
  d.max_relmult = *std::max_element(d.relmult_samples.begin(), d.relmult_samples.end());
  d.relmult_trend = TrendSlope(d.relmult_samples);

  double sum = 0.0;
  for (double r : d.ratio_samples) sum += r;
  d.ratio_mean = sum / static_cast<double>(d.ratio_samples.size());
  double spread = 0.0;
  for (double r : d.ratio_samples) spread = std::max(spread, std::abs(r - d.ratio_mean));
  d.ratio_spread = spread / d.ratio_mean;

  if (d.ratio_spread < kGeometricSpreadThreshold && d.ratio_mean > kGeometricMinRatio) {
    d.classification = GrowthClass::kGeometricGrowth;
    d.growth_constant = d.ratio_mean;
  } else if (d.max_relmult < kContinuityRelmultThreshold && d.relmult_trend <= 0.0) {
    d.classification = GrowthClass::kAsymptoticallyContinuous;
  } else {
    d.classification = GrowthClass::kIrregular;
  }
  return d;
}

double InterpolantAt(const DistinctSpectrum& spectrum, double x) {
  if (!std::isfinite(x)) Fail(ErrorKind::kOutOfRange, "interpolant needs a finite argument");
  auto cursor = spectrum.Open();
  std::optional<SpectralPoint> previous;
  while (auto block = cursor->Next()) {
    if (block->eigenvalue >= x) {
      if (!previous) {
        if (block->eigenvalue == x) return ToDouble(block->cumulated);
        Fail(ErrorKind::kOutOfRange, "interpolant is undefined below the first eigenvalue");
      }
      const double t = (x - previous->eigenvalue) / (block->eigenvalue - previous->eigenvalue);
      const double lo = ToDouble(previous->cumulated);
      const double hi = ToDouble(block->cumulated);
      return lo + t * (hi - lo);
    }
    previous = std::move(block);
  }
  Fail(ErrorKind::kOutOfRange, "x lies beyond the generated spectrum");
}

}  // namespace nspec
