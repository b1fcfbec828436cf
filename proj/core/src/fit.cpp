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

#include "nspec/fit.hpp"

#include <cmath>
#include <vector>

#include "nspec/error.hpp"

namespace nspec {

LineFit FitLine(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size()) Fail(ErrorKind::kDimensionMismatch, "fit abscissa/ordinate size mismatch");
  if (n < 2) Fail(ErrorKind::kIllConditionedFit, "need at least two points for a line fit");

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  const double scale = std::max(std::abs(mean_x), 1e-300);
  if (!(sxx > 1e-20 * scale * scale * static_cast<double>(n))) {
    Fail(ErrorKind::kIllConditionedFit, "abscissae are numerically indistinguishable");
  }

  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    sse += r * r;
  }
  fit.residual_rms = std::sqrt(sse / static_cast<double>(n));
  fit.r_squared = syy > 0.0 ? 1.0 - sse / syy : 1.0;
  if (n > 2) {
    const double sigma2 = sse / static_cast<double>(n - 2);
    fit.slope_stderr = std::sqrt(sigma2 / sxx);
    fit.intercept_stderr =
        std::sqrt(sigma2 * (1.0 / static_cast<double>(n) + mean_x * mean_x / sxx));
  }
  return fit;
}

double TrendSlope(std::span<const double> y) {
  if (y.size() < 2) return 0.0;
  std::vector<double> index(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) index[i] = static_cast<double>(i);
  return FitLine(index, y).slope;
}

}  // namespace nspec
