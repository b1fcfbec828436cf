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

#ifndef NSPEC_CLI_CLI_HPP_
#define NSPEC_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

#include "nspec/bigint.hpp"

namespace nspec::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kSectionFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kRuntimeError = 3;

// args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "a,b,c", "lin:a:b:n" or "geom:a:b:n".
std::vector<double> ParseGrid(const std::string& text);

// Integer grid for schedules; geom/lin points are floored and deduplicated.
std::vector<BigInt> ParseIntegerGrid(const std::string& text);

}  // namespace nspec::cli

#endif  // NSPEC_CLI_CLI_HPP_
