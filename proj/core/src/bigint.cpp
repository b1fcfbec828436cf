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

#include "nspec/bigint.hpp"

#include <cmath>
#include <limits>

#include "nspec/error.hpp"

namespace nspec {
namespace {

constexpr unsigned kKeepBits = 900;

}  // namespace

double LogBig(const BigInt& x) {
  if (x <= 0) Fail(ErrorKind::kOutOfRange, "logarithm of a non-positive integer");
  const unsigned msb = boost::multiprecision::msb(x);
  if (msb < kKeepBits) return std::log(x.convert_to<double>());
  const unsigned shift = msb - 64;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double RatioBig(const BigInt& a, const BigInt& b) {
  if (b <= 0) Fail(ErrorKind::kOutOfRange, "ratio with non-positive denominator");
  if (a == 0) return 0.0;
  const unsigned top = std::max(boost::multiprecision::msb(boost::multiprecision::abs(a)),
                                boost::multiprecision::msb(b));
  if (top < kKeepBits) return a.convert_to<double>() / b.convert_to<double>();
  const unsigned shift = top - kKeepBits + 1;
  const BigInt as = a >> shift;
  const BigInt bs = b >> shift;
  if (bs == 0) return std::numeric_limits<double>::infinity();
  return as.convert_to<double>() / bs.convert_to<double>();
}

double ToDouble(const BigInt& x) {
  if (x == 0) return 0.0;
  if (boost::multiprecision::msb(boost::multiprecision::abs(x)) >= 1024) {
    return x > 0 ? std::numeric_limits<double>::infinity()
                 : -std::numeric_limits<double>::infinity();
  }
  return x.convert_to<double>();
}

BigInt RoundProduct(const BigInt& x, double c) {
  if (!std::isfinite(c)) Fail(ErrorKind::kOutOfRange, "non-finite scale factor");
  int exponent = 0;
  const double mantissa = std::frexp(c, &exponent);
  // mantissa * 2^53 is an exact integer.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mantissa, 53));
  exponent -= 53;
  BigInt product = x * BigInt(scaled);
  if (exponent >= 0) return product << exponent;
  const unsigned shift = static_cast<unsigned>(-exponent);
  const bool negative = product < 0;
  if (negative) product = -product;
  BigInt rounded = (product + (BigInt(1) << (shift - 1))) >> shift;
  return negative ? BigInt(-rounded) : rounded;
}

std::string ToString(const BigInt& x) { return x.str(); }

BigInt ParseBigInt(const std::string& text) {
  try {
    return BigInt(text);
  } catch (const std::exception&) {
    Fail(ErrorKind::kInvalidSpec, "not an integer: '" + text + "'");
  }
}

}  // namespace nspec
