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

// Brute-force reference computations. Nothing here calls into the library.

#ifndef NSPEC_TESTS_ORACLES_HPP_
#define NSPEC_TESTS_ORACLES_HPP_

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Nonzero lattice points m in Z^2 with |m|^2 <= x.
inline std::uint64_t LatticeCount(std::int64_t x) {
  std::uint64_t count = 0;
  for (std::int64_t a = -x; a <= x; ++a) {
    if (a * a > x) continue;
    for (std::int64_t b = -x; b <= x; ++b) {
      if (a * a + b * b <= x && (a != 0 || b != 0)) ++count;
    }
  }
  return count;
}

// (|m|^2, r_2) pairs in increasing order, for |m|^2 <= x.
inline std::vector<std::pair<std::int64_t, std::int64_t>> LatticeBlocks(std::int64_t x) {
  std::map<std::int64_t, std::int64_t> r2;
  for (std::int64_t a = -x; a <= x; ++a) {
    for (std::int64_t b = -x; b <= x; ++b) {
      const std::int64_t n = a * a + b * b;
      if (n > 0 && n <= x) ++r2[n];
    }
  }
  return {r2.begin(), r2.end()};
}

inline std::vector<std::uint32_t> PrimesUpTo(std::uint32_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

inline long double Harmonic(std::uint64_t n) {
  long double h = 0.0L;
  for (std::uint64_t k = n; k >= 1; --k) h += 1.0L / static_cast<long double>(k);
  return h;
}

// Borwein's algorithm for eta(s), then zeta(s) = eta(s) / (1 - 2^{1-s}).
inline std::complex<double> RiemannZeta(std::complex<double> s, int n = 60) {
  using C = std::complex<long double>;
  std::vector<long double> d(n + 1);
  long double term = 1.0L / n;
  long double acc = term;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0L * (n + i - 1) * (n - i + 1) / ((2.0L * i - 1) * (2.0L * i));
    acc += term;
    d[i] = acc * n;
  }
  d[0] *= n;
  const C sl(s.real(), s.imag());
  C eta = 0.0L;
  for (int k = 0; k < n; ++k) {
    const C v = (d[k] - d[n]) * std::exp(-sl * std::log(static_cast<long double>(k + 1)));
    eta += (k % 2 == 0) ? v : -v;
  }
  eta /= -d[n];
  const C z = eta / (1.0L - std::exp((1.0L - sl) * std::log(2.0L)));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Direct series for the free group on p generators:
// sum_k m_k M_k^{-s}, m_k = 2p(2p-1)^{k-1}, M_k = p((2p-1)^k - 1)/(p-1).
inline double FreeGroupSeries(int p, double s, int terms = 200) {
  const long double q = 2.0L * p - 1.0L;
  long double sum = 0.0L;
  for (int k = 1; k <= terms; ++k) {
    const long double m = 2.0L * p * std::pow(q, k - 1);
    const long double big_m = p * (std::pow(q, k) - 1.0L) / (p - 1.0L);
    sum += m * std::pow(big_m, -static_cast<long double>(s));
  }
  return static_cast<double>(sum);
}

}  // namespace oracle

#endif  // NSPEC_TESTS_ORACLES_HPP_
