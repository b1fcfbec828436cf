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

// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nspec/dixmier.hpp"
#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "nspec/hypertrace.hpp"
#include "nspec/spectrum.hpp"
#include "nspec/tauberian.hpp"
#include "nspec/zeta.hpp"
#include "oracles.hpp"
#include "property_cases.hpp"

namespace nspec {
namespace {

// Tolerances.
constexpr double kFreeGroupDixmierTol = 5e-3;
constexpr double kFreeGroupZetaTol = 1e-6;
constexpr double kFreeGroupSeconds = 1.0;
constexpr double kNaturalsResidueTol = 1e-5;
constexpr double kWeylResidueTol = 1e-3;
constexpr double kResidueSeconds = 5.0;
constexpr double kRiemannTol = 1e-8;
constexpr double kGeometricTol = 5e-3;
constexpr double kNaturalsDixmierTol = 0.01;
constexpr double kHarmonicTol = 1e-6;
constexpr double kGaussTol = 1e-2;
constexpr double kRvTol = 0.02;
constexpr double kTauberTol = 0.02;
constexpr double kTelescopeTol = 1e-10;
constexpr double kRelmultTol = 0.02;
constexpr double kBlockSumTol = 1e-12;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

void FreeGroupValue(Outcome& o) {
  const auto start = Clock::now();
  const double target = 2.0 / (3.0 * std::log(3.0));
  const auto spec = FreeGroup(2);
  const auto est = EstimateTrace(spec, BlockEndSchedule(spec, 200));
  const double h = 1e-6;
  const double residue = h * FreeGroupZeta(2, 1.0 + h, 1e-12).value.real();
  const double elapsed = Seconds(start);
  o.detail << "dixmier=" << est.value << " zeta=" << residue << " target=" << target
           << " time=" << elapsed << "s";
  o.Check(std::abs(est.value - target) < kFreeGroupDixmierTol, "dixmier route");
  o.Check(std::abs(residue - target) < kFreeGroupZetaTol, "zeta route");
  o.Check(elapsed < kFreeGroupSeconds, "runtime");
}

void UnitalResidue(Outcome& o) {
  const auto start = Clock::now();
  const double nat = EstimateResidue(Naturals(), 1e-6).value;
  const double weyl = EstimateResidue(WeylPower(1.0, 2.0), 1e-4).value;
  const double elapsed = Seconds(start);
  o.detail << "naturals=" << nat << " weyl_power(1,2)=" << weyl << " time=" << elapsed << "s";
  o.Check(std::abs(nat - 1.0) < kNaturalsResidueTol, "naturals");
  o.Check(std::abs(weyl - 1.0) < kWeylResidueTol, "weyl_power");
  o.Check(elapsed < kResidueSeconds, "runtime");
}

void RiemannAgreement(Outcome& o) {
  double worst = 0.0;
  for (double s : {1.5, 2.0, 2.5, 3.0}) {
    const Complex got = ZetaEval(Naturals(), s, 1e-10).value;
    worst = std::max(worst, std::abs(got - RiemannZeta(s).value));
    worst = std::max(worst, std::abs(got - oracle::RiemannZeta(s)));
  }
  o.detail << "max |zeta_eval - reference| = " << worst;
  o.Check(worst < kRiemannTol, "agreement");
}

void GeometricFamily(Outcome& o) {
  const auto spec = Geometric(2.0);
  const auto est = EstimateTrace(spec, BlockEndSchedule(spec, 40));
  const double target = 1.0 / (2.0 * std::log(2.0));
  o.detail << "value=" << est.value << " target=" << target << " verdict=" << VerdictName(est.verdict);
  o.Check(std::abs(est.value - target) < kGeometricTol, "value");
  o.Check(est.verdict == Verdict::kMeasurableValue, "verdict");
}

void EstimatorSanity(Outcome& o) {
  const auto start = Clock::now();
  const auto est = EstimateTrace(Naturals(), DecadeSchedule(2, 8));
  const double elapsed = Seconds(start);
  const double s100 = LogPartialSum(Naturals(), 100);
  const double direct = static_cast<double>(oracle::Harmonic(100) / std::log(100.0L));
  o.detail << "value=" << est.value << " S_100=" << s100 << " direct=" << direct
           << " time=" << elapsed << "s";
  o.Check(std::abs(est.value - 1.0) < kNaturalsDixmierTol, "extrapolated value");
  o.Check(std::abs(s100 - direct) < kHarmonicTol, "S_100");
  // A 10^8-term summation would take far longer than this.
  o.Check(elapsed < 0.05, "closed-form runtime");
}

void GaussCircle(Outcome& o) {
  const auto torus = Torus2();
  const double x = 1e6;
  const double rel = std::abs(ToDouble(Counting(torus, x)) / (M_PI * x) - 1.0);
  const BigInt at_1e4 = Counting(torus, 1e4);
  const std::uint64_t brute = oracle::LatticeCount(10000);
  o.detail << "N(1e6)=" << ToString(Counting(torus, x)) << " |N/(pi x)-1|=" << rel
           << " N(1e4)=" << ToString(at_1e4) << " brute=" << brute;
  o.Check(rel < kGaussTol, "Gauss circle");
  o.Check(at_1e4 == brute, "lattice enumeration");
}

void PrimeNumberTheorem(Outcome& o) {
  const auto primes = Primes();
  const auto sieve = oracle::PrimesUpTo(1000000);
  bool exact = true;
  std::size_t idx = 0;
  for (std::uint32_t x = 1000; x <= 1000000; x += 1000) {
    while (idx < sieve.size() && sieve[idx] <= x) ++idx;
    if (Counting(primes, x) != idx) exact = false;
  }
  const BigInt pi6 = Counting(primes, 1e6);
  std::vector<double> ratio;
  for (double x : {1e4, 1e5, 1e6}) ratio.push_back(ToDouble(Counting(primes, x)) * std::log(x) / x);
  o.detail << "pi(1e6)=" << ToString(pi6) << " N ln x/x = " << ratio[0] << ", " << ratio[1] << ", "
           << ratio[2];
  o.Check(exact && pi6 == 78498 && sieve.size() == 78498, "sieve agreement");
  o.Check(ratio[0] > ratio[1] && ratio[1] > ratio[2], "decreasing");
  o.Check(ratio[2] >= 1.0 && ratio[2] <= 1.2, "range at 1e6");
}

void Karamata(Outcome& o) {
  const auto weyl = TauberCheck(WeylPower(1.0, 2.0), {1e2, 1e3, 1e4});
  const double nat = EstimateRvIndex(Naturals(), DefaultBetaGrid()).gamma;
  o.detail << "weyl gamma=" << weyl.rv.gamma << " max_dev=" << weyl.max_deviation
           << " naturals gamma=" << nat;
  o.Check(std::abs(weyl.rv.gamma - 2.0) < kRvTol, "weyl rv index");
  o.Check(weyl.max_deviation < kTauberTol, "tauber deviation");
  o.Check(std::abs(nat - 1.0) < kRvTol, "naturals rv index");
}

void CommutatorDecay(Outcome& o) {
  const auto shift = ShiftOperator(1000);
  double worst = 0.0;
  double prev = INFINITY;
  bool decreasing = true;
  for (double s : {1.5, 1.25, 1.125}) {
    const double v = CommutatorTraceNorm(Naturals(), shift, s, PhiKind::kIdentity);
    worst = std::max(worst, std::abs(v - (1.0 - std::pow(1001.0, -s))));
    const double scaled = (s - 1.0) * v;
    o.detail << "(s-1)|[S,L^-s]|_1(" << s << ")=" << scaled << " ";
    decreasing = decreasing && scaled < prev;
    prev = scaled;
  }
  o.detail << "max telescoping error=" << worst;
  o.Check(worst < kTelescopeTol, "telescoping");
  o.Check(decreasing, "decreasing");
}

void OffDiagonalVanishing(Outcome& o) {
  bool zero = true;
  for (std::size_t k = 1; k <= 5; ++k) {
    zero = zero && ComputeWeightedTrace(Naturals(), ShiftOperator(1000, k), 1.5, 1000).value ==
                       Complex(0.0, 0.0);
  }
  const Complex p = ComputeWeightedTrace(Primes(), ShiftOperator(1000), 1.5, 1000).value;
  o.detail << "naturals S^k (k=1..5) and primes shift: " << (zero && p == Complex(0.0) ? "0" : "nonzero");
  o.Check(zero, "naturals");
  o.Check(p == Complex(0.0, 0.0), "primes");
}

void HypothesisCheckers(Outcome& o) {
  const auto nat = CheckHypotheses(Naturals());
  const auto pr = CheckHypotheses(Primes());
  const auto weyl = CheckHypotheses(WeylPower(1.0, 2.0));
  const auto fg = CheckHypotheses(FreeGroup(2), 200);
  o.detail << "naturals=" << OverallName(nat.overall) << " primes=" << OverallName(pr.overall)
           << " weyl_power=" << OverallName(weyl.overall) << " free_group=" << OverallName(fg.overall)
           << " relmult_tail=" << fg.relmult_tail;
  o.Check(nat.overall == Overall::kHypothesesHold, "naturals");
  o.Check(pr.overall == Overall::kHypothesesHold, "primes");
  o.Check(weyl.overall == Overall::kHypothesesHold, "weyl_power");
  o.Check(fg.overall == Overall::kHypothesesFail, "free_group");
  o.Check(std::abs(fg.relmult_tail - 2.0 / 3.0) < kRelmultTol, "relmult tail");
}

void PropertySuites(Outcome& o) {
  int prefix_fail = 0, sum_fail = 0, bound_fail = 0;
  std::mt19937_64 rng_a(20260101), rng_b(7), rng_c(31);
  for (int c = 0; c < kPrefixCases; ++c) {
    if (!testing_support::CheckPrefix(testing_support::RandomPrefixCase(rng_a)).empty()) ++prefix_fail;
  }
  double worst = 0.0;
  for (int c = 0; c < kBlockSumCases; ++c) {
    const auto ec = testing_support::RandomExplicitCase(rng_b);
    const double rel = std::abs(LogPartialSum(ec.spectrum, ec.n) / ec.naive - 1.0);
    worst = std::max(worst, rel);
    if (!(rel < kBlockSumTol)) ++sum_fail;
  }
  for (int c = 0; c < kBoundCases; ++c) {
    const auto lc = testing_support::RandomBoundCase(rng_c);
    if (!(lc.direct <= PowerDeviationBound(lc.eps, lc.s) * (1.0 + 1e-12))) ++bound_fail;
  }
  o.detail << kPrefixCases << " prefixes (" << prefix_fail << " bad), " << kBlockSumCases
           << " block sums (worst rel " << worst << "), " << kBoundCases << " bound samples ("
           << bound_fail << " bad)";
  o.Check(prefix_fail == 0, "prefix invariants");
  o.Check(sum_fail == 0, "block sums");
  o.Check(bound_fail == 0, "power bound");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace
}  // namespace nspec

int main() {
  using namespace nspec;
  const std::vector<Criterion> criteria{
      {1, "free-group Dixmier value", FreeGroupValue},
      {2, "unital residue", UnitalResidue},
      {3, "Riemann agreement", RiemannAgreement},
      {4, "geometric family", GeometricFamily},
      {5, "Dixmier estimator sanity", EstimatorSanity},
      {6, "Gauss circle", GaussCircle},
      {7, "prime number theorem", PrimeNumberTheorem},
      {8, "Karamata consistency", Karamata},
      {9, "commutator decay", CommutatorDecay},
      {10, "off-diagonal vanishing", OffDiagonalVanishing},
      {11, "hypothesis checkers", HypothesisCheckers},
      {12, "property suites", PropertySuites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    o.detail.precision(10);
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
