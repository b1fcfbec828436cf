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

#ifndef NSPEC_FIT_HPP_
#define NSPEC_FIT_HPP_

#include <span>

namespace nspec {

struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_stderr = 0.0;
  double slope_stderr = 0.0;
  double residual_rms = 0.0;
  double r_squared = 1.0;
};

// Ordinary least squares y = intercept + slope * x. Throws IllConditionedFit
// when the abscissae are (numerically) all equal.
LineFit FitLine(std::span<const double> x, std::span<const double> y);

// Least-squares slope of y against its index 0..n-1.
double TrendSlope(std::span<const double> y);

}  // namespace nspec

#endif  // NSPEC_FIT_HPP_
