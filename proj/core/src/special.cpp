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

#include "nspec/special.hpp"

#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "nspec/error.hpp"

namespace nspec {
namespace {

constexpr int kBernoulliTerms = 14;

}  // namespace

SeriesValue HurwitzZeta(Complex s, double a) {
  if (s.real() <= 0.0) Fail(ErrorKind::kOutOfRange, "Hurwitz zeta needs Re(s) > 0");
  if (std::abs(s - 1.0) == 0.0) Fail(ErrorKind::kPoleAt, "Hurwitz zeta pole at s = 1");
  if (!(a >= 1.0)) Fail(ErrorKind::kOutOfRange, "Hurwitz zeta needs a >= 1");

  // Shift the expansion point until the asymptotic series is comfortably
  // convergent for the requested s.
  const double min_base = 24.0 + 1.5 * std::abs(s.imag()) + std::abs(s.real());
  CompensatedSum<Complex> head;
  double b = a;
  while (b < min_base) {
    head.Add(std::exp(-s * std::log(b)));
    b += 1.0;
  }

  const double log_b = std::log(b);
  const Complex b_pow = std::exp(-s * log_b);  // b^{-s}
  Complex total = head.value() + b * b_pow / (s - 1.0) + 0.5 * b_pow;

  // Term k: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * b^{-s-2k+1}.
  Complex rising = s;  // s(s+1)...(s+2k-2) for k = 1
  Complex power = b_pow / b;
  Complex last_term = 0.0;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    const double coeff = boost::math::bernoulli_b2n<double>(k) /
                         boost::math::factorial<double>(2 * k);
    last_term = coeff * rising * power;
    total += last_term;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    power /= b * b;
  }
  // Backlund: |R_p| <= |s + 2p + 1| / (Re s + 2p + 1) * |T_{p+1}|.
  const int p = kBernoulliTerms;
  const double next_coeff = boost::math::bernoulli_b2n<double>(p + 1) /
                            boost::math::factorial<double>(2 * p + 2);
  const double next_term = std::abs(next_coeff * rising * power);
  const double factor = std::abs(s + static_cast<double>(2 * p + 1)) /
                        (s.real() + 2.0 * p + 1.0);
  SeriesValue out;
  out.value = total;
  out.error_bound = factor * next_term + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(total);
  return out;
}

double HarmonicNumber(const BigInt& n) {
  if (n <= 0) return 0.0;
  if (n <= 1000) {
    const auto count = n.convert_to<std::int64_t>();
    CompensatedSum<double> sum;
    for (std::int64_t k = count; k >= 1; --k) sum.Add(1.0 / static_cast<double>(k));
    return sum.value();
  }
  const double x = ToDouble(n);
  const double inv2 = 1.0 / (x * x);
  // ln n + γ + 1/(2n) - Σ B_{2k}/(2k n^{2k})
  double correction = 0.0;
  double power = inv2;
  for (int k = 1; k <= 4; ++k) {
    correction += boost::math::bernoulli_b2n<double>(k) / (2.0 * k) * power;
    power *= inv2;
  }
  return LogBig(n) + EulerGamma() + 0.5 / x - correction;
}

Complex Expm1(Complex z) {
  const double x = z.real();
  const double y = z.imag();
  const double sin_half = std::sin(0.5 * y);
  const double re = std::expm1(x) * std::cos(y) - 2.0 * sin_half * sin_half;
  const double im = std::exp(x) * std::sin(y);
  return {re, im};
}

double GammaFn(double x) { return std::tgamma(x); }

double EulerGamma() { return boost::math::constants::euler<double>(); }

}  // namespace nspec
