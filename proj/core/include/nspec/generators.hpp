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

#ifndef NSPEC_GENERATORS_HPP_
#define NSPEC_GENERATORS_HPP_

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspec/spectrum.hpp"

namespace nspec {

struct ExplicitSpec {
  std::vector<std::pair<double, BigInt>> pairs;
};
struct NaturalsSpec {};
struct PrimesSpec {
  std::uint64_t limit = 10'000'000;
};
struct FreeGroupSpec {
  int p = 2;
};
struct Torus2Spec {};
struct WeylPowerSpec {
  double c = 1.0;
  double gamma = 1.0;
};
struct LogWeylSpec {};
struct FractalLawSpec {
  double c = 1.0;
  double d_s = 2.0;
};
struct GeometricSpec {
  double c = 2.0;
};
struct FiltrationSpec {
  std::vector<BigInt> dims;
};

using GeneratorSpec =
    std::variant<ExplicitSpec, NaturalsSpec, PrimesSpec, FreeGroupSpec, Torus2Spec, WeylPowerSpec,
                 LogWeylSpec, FractalLawSpec, GeometricSpec, FiltrationSpec>;

// Accepts {"kind": "...", ...}; unknown kinds or keys raise InvalidSpec.
GeneratorSpec ParseGeneratorSpec(const nlohmann::json& j);
nlohmann::json GeneratorSpecToJson(const GeneratorSpec& spec);

// Validates the family invariants and returns the stream.
DistinctSpectrum Generate(const GeneratorSpec& spec);
DistinctSpectrum Generate(const nlohmann::json& j);

DistinctSpectrum Explicit(std::vector<std::pair<double, BigInt>> pairs);
DistinctSpectrum Naturals();
DistinctSpectrum Primes(std::uint64_t limit = 10'000'000);
DistinctSpectrum FreeGroup(int p);
DistinctSpectrum Torus2();
DistinctSpectrum WeylPower(double c, double gamma);
DistinctSpectrum LogWeyl();
DistinctSpectrum FractalLaw(double c, double d_s);
DistinctSpectrum Geometric(double c);
DistinctSpectrum Filtration(std::vector<BigInt> dims);

// Smallest x > 1 with (1/π)·x·ln x = n, to relative 1e-12.
double LogWeylEigenvalue(double n);

}  // namespace nspec

#endif  // NSPEC_GENERATORS_HPP_
