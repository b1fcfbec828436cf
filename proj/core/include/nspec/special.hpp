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

#ifndef NSPEC_SPECIAL_HPP_
#define NSPEC_SPECIAL_HPP_

#include <complex>

#include "nspec/bigint.hpp"

namespace nspec {

using Complex = std::complex<double>;

// Compensated (Neumaier) accumulator. The order of Add calls fixes the result
// bit-for-bit, which is what the determinism guarantees rely on.
template <typename T>
class CompensatedSum {
 public:
  void Add(T x) {
    const T t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

struct SeriesValue {
  Complex value;
  double error_bound = 0.0;
};

// Σ_{n>=0} (a+n)^{-s} for Re(s) > 0, s != 1, a >= 1 by Euler-Maclaurin with
// Backlund's remainder bound.
SeriesValue HurwitzZeta(Complex s, double a);

// H_N = Σ_{n<=N} 1/n. Direct below 1000 terms, asymptotic expansion above.
double HarmonicNumber(const BigInt& n);

// e^z - 1 without cancellation for small |z|.
Complex Expm1(Complex z);

double GammaFn(double x);

double EulerGamma();

}  // namespace nspec

#endif  // NSPEC_SPECIAL_HPP_
