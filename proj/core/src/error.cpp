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

#include "nspec/error.hpp"

namespace nspec {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInsufficientBlocks: return "InsufficientBlocks";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
    case ErrorKind::kSieveLimitExceeded: return "SieveLimitExceeded";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kGridTooShort: return "GridTooShort";
    case ErrorKind::kIllConditionedFit: return "IllConditionedFit";
    case ErrorKind::kDivergent: return "Divergent";
    case ErrorKind::kTolUnreachable: return "TolUnreachable";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kPoleAt: return "PoleAt";
    case ErrorKind::kNotNuclear: return "NotNuclear";
    case ErrorKind::kMultiplicityUnsupported: return "MultiplicityUnsupported";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kConfigError: return "ConfigError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace nspec
