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

#ifndef NSPEC_BIGINT_HPP_
#define NSPEC_BIGINT_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace nspec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural logarithm of a strictly positive integer of any size. Values past
// the double range are shifted down first so the result keeps ~15 digits.
double LogBig(const BigInt& x);

// a / b as a double for arbitrary-size operands; b > 0.
double RatioBig(const BigInt& a, const BigInt& b);

// Nearest double, +inf when x exceeds the double range.
double ToDouble(const BigInt& x);

// Round-to-nearest (ties away from zero) of x * c where c is a finite double.
// Exact: c is decomposed into its binary mantissa and exponent.
BigInt RoundProduct(const BigInt& x, double c);

std::string ToString(const BigInt& x);
BigInt ParseBigInt(const std::string& text);

}  // namespace nspec

#endif  // NSPEC_BIGINT_HPP_
