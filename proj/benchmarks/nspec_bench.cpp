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

#include <cmath>

#include <benchmark/benchmark.h>

#include "nspec/dixmier.hpp"
#include "nspec/generators.hpp"
#include "nspec/hypertrace.hpp"
#include "nspec/spectrum.hpp"
#include "nspec/tauberian.hpp"
#include "nspec/zeta.hpp"

namespace nspec {
namespace {

void BM_BlockScan(benchmark::State& state) {
  const auto spec = Primes();
  const auto blocks = static_cast<std::size_t>(state.range(0));
  spec.Prefix(1);  // sieve once, outside the timed region
  for (auto _ : state) {
    auto cursor = spec.Open();
    std::size_t n = 0;
    while (n < blocks && cursor->Next()) ++n;
    benchmark::DoNotOptimize(n);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BlockScan)->Arg(1 << 12)->Arg(1 << 16);

void BM_TorusGeneration(benchmark::State& state) {
  const auto x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Counting(Torus2(), x));
}
BENCHMARK(BM_TorusGeneration)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_LogPartialSumFreeGroup(benchmark::State& state) {
  const auto spec = FreeGroup(2);
  const auto n = spec.Prefix(static_cast<std::size_t>(state.range(0))).back().cumulated;
  for (auto _ : state) benchmark::DoNotOptimize(LogPartialSum(spec, n));
}
BENCHMARK(BM_LogPartialSumFreeGroup)->Arg(50)->Arg(200);

void BM_RiemannZeta(benchmark::State& state) {
  const auto spec = Naturals();
  const Complex s(1.5, static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ZetaEval(spec, s, 1e-10));
}
BENCHMARK(BM_RiemannZeta)->Arg(0)->Arg(50);

void BM_TorusZeta(benchmark::State& state) {
  const auto spec = Torus2();
  for (auto _ : state) benchmark::DoNotOptimize(ZetaEval(spec, 3.0, 1e-8));
}
BENCHMARK(BM_TorusZeta)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const auto spec = WeylPower(1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(Partition(spec, 1e-3));
}
BENCHMARK(BM_Partition);

void BM_CommutatorShift(benchmark::State& state) {
  const auto shift = ShiftOperator(static_cast<std::size_t>(state.range(0)));
  const auto spec = Naturals();
  for (auto _ : state) {
    benchmark::DoNotOptimize(CommutatorTraceNorm(spec, shift, 1.5, PhiKind::kIdentity));
  }
}
BENCHMARK(BM_CommutatorShift)->Arg(1000)->Arg(100'000);

void BM_CommutatorSvd(benchmark::State& state) {
  const auto n = static_cast<Eigen::Index>(state.range(0));
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(std::sin(i + 2.0 * j), std::cos(i - j));
  }
  const auto op = DenseOperator(a);
  const auto spec = Naturals();
  for (auto _ : state) benchmark::DoNotOptimize(CommutatorTraceNorm(spec, op, 1.5));
}
BENCHMARK(BM_CommutatorSvd)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace nspec

BENCHMARK_MAIN();
