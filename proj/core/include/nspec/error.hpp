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

#ifndef NSPEC_ERROR_HPP_
#define NSPEC_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace nspec {

enum class ErrorKind {
  kInsufficientBlocks,
  kInvalidSpec,
  kSieveLimitExceeded,
  kOutOfRange,
  kGridTooShort,
  kIllConditionedFit,
  kDivergent,
  kTolUnreachable,
  kNoConvergence,
  kPoleAt,
  kNotNuclear,
  kMultiplicityUnsupported,
  kDimensionMismatch,
  kConfigError,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so that
// callers (and the report writer) can branch on it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& message);

}  // namespace nspec

#endif  // NSPEC_ERROR_HPP_
