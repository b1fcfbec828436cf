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

#include "nspec/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <queue>
#include <set>
#include <string>

#include "nspec/error.hpp"

namespace nspec {
namespace {

using nlohmann::json;

// Largest integer below which every double count is exact.
constexpr double kMaxExactCount = 9007199254740992.0;

std::unique_ptr<BlockCursor> Cursor(RawSource source, TieRule rule) {
  return MakeMergingCursor(std::move(source), rule);
}

// Unit-multiplicity family with n-th eigenvalue law(n). The counting function
// starts from an analytic guess and is corrected against the same law the
// stream uses, so both always agree.
DistinctSpectrum LawSpectrum(std::string name, json parameters, std::function<double(double)> law,
                             std::function<double(double)> guess, bool integer_valued) {
  SpectrumTraits traits;
  traits.harmonic_weights = true;
  traits.integer_valued = integer_valued;
  traits.law_eigenvalue = law;
  traits.smooth_law = true;
  traits.law_counting = [law, guess](double x) -> BigInt {
    double n = std::floor(std::clamp(guess(x), 0.0, kMaxExactCount));
    while (n < kMaxExactCount && law(n + 1.0) <= x) n += 1.0;
    while (n > 0.0 && law(n) > x) n -= 1.0;
    return BigInt(static_cast<std::uint64_t>(n));
  };
  KnownConstants known;
  known.dixmier_value = 1.0;
  known.residue = 1.0;
  const TieRule rule = integer_valued ? TieRule::kExact : TieRule::kRelative;
  auto factory = [law, rule]() {
    auto n = std::make_shared<double>(0.0);
    return Cursor(
        [law, n]() -> std::optional<RawPair> {
          *n += 1.0;
          return RawPair{law(*n), BigInt(1)};
        },
        rule);
  };
  return DistinctSpectrum(std::move(name), std::move(parameters), factory, traits, known);
}

class PrimeTable {
 public:
  explicit PrimeTable(std::uint64_t limit) : limit_(limit) {}

  const std::vector<std::uint64_t>& primes() const {
    std::call_once(once_, [this] { Sieve(); });
    return primes_;
  }
  std::uint64_t limit() const { return limit_; }

 private:
  void Sieve() const {
    std::vector<bool> composite(limit_ + 1, false);
    for (std::uint64_t i = 2; i <= limit_; ++i) {
      if (composite[i]) continue;
      primes_.push_back(i);
      for (std::uint64_t j = i * i; j <= limit_; j += i) composite[j] = true;
    }
  }

  std::uint64_t limit_;
  mutable std::once_flag once_;
  mutable std::vector<std::uint64_t> primes_;
};

// Distinct values of a²+b² over nonzero (a,b) ∈ Z², in increasing order.
// Octant representatives a >= b >= 0 are merged with a heap over rows a; rows
// are added in doubling batches once the heap top reaches the next row's a².
class Torus2Source {
 public:
  std::optional<RawPair> operator()() {
    EnsureFrontier();
    const Entry top = heap_.top();
    const std::uint64_t value = top.value;
    std::uint64_t count = 0;
    while (!heap_.empty() && heap_.top().value == value) {
      Entry e = heap_.top();
      heap_.pop();
      count += Weight(e.a, e.b);
      if (e.b < e.a) {
        ++e.b;
        e.value = e.a * e.a + e.b * e.b;
        heap_.push(e);
      }
      EnsureFrontier();
    }
    return RawPair{static_cast<double>(value), BigInt(count)};
  }

 private:
  struct Entry {
    std::uint64_t value, a, b;
    bool operator>(const Entry& o) const { return value > o.value; }
  };

  static std::uint64_t Weight(std::uint64_t a, std::uint64_t b) {
    if (b == 0 || a == b) return 4;
    return 8;
  }

  void EnsureFrontier() {
    while (heap_.empty() || heap_.top().value >= rows_ * rows_) {
      for (std::uint64_t a = rows_; a < 2 * rows_; ++a) heap_.push({a * a, a, 0});
      rows_ *= 2;
    }
  }

  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap_;
  std::uint64_t rows_ = 1;
};

void RequireKeys(const json& j, std::initializer_list<const char*> allowed) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  ok.insert("kind");
  for (const auto& item : j.items()) {
    if (!ok.count(item.key())) {
      Fail(ErrorKind::kInvalidSpec,
           "unknown key '" + item.key() + "' for kind '" + j.at("kind").get<std::string>() + "'");
    }
  }
}

double NumberField(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) Fail(ErrorKind::kInvalidSpec, std::string("field '") + key + "' must be a number");
  return v.get<double>();
}

BigInt BigIntValue(const json& v, const std::string& where) {
  if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
  if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  if (v.is_string()) return ParseBigInt(v.get<std::string>());
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (std::isfinite(d) && d == std::floor(d) && std::abs(d) < kMaxExactCount) {
      return BigInt(static_cast<std::int64_t>(d));
    }
  }
  Fail(ErrorKind::kInvalidSpec, where + " must be an integer");
}

json BigIntJson(const BigInt& x) {
  if (x >= 0 && x <= std::numeric_limits<std::uint64_t>::max()) {
    return json(x.convert_to<std::uint64_t>());
  }
  return json(ToString(x));
}

struct Validator {
  void operator()(const ExplicitSpec& s) const {
    for (std::size_t i = 0; i < s.pairs.size(); ++i) {
      const std::string where = "pairs[" + std::to_string(i) + "]";
      if (!std::isfinite(s.pairs[i].first) || s.pairs[i].first < 0.0) {
        Fail(ErrorKind::kInvalidSpec, where + ": eigenvalue must be finite and >= 0");
      }
      if (s.pairs[i].second < 1) Fail(ErrorKind::kInvalidSpec, where + ": multiplicity must be >= 1");
    }
  }
  void operator()(const NaturalsSpec&) const {}
  void operator()(const PrimesSpec& s) const {
    if (s.limit < 2 || s.limit > 4'000'000'000ULL) {
      Fail(ErrorKind::kInvalidSpec, "limit: sieve limit must lie in [2, 4e9]");
    }
  }
  void operator()(const FreeGroupSpec& s) const {
    if (s.p < 2) Fail(ErrorKind::kInvalidSpec, "p: free group rank must be an integer >= 2");
  }
  void operator()(const Torus2Spec&) const {}
  void operator()(const WeylPowerSpec& s) const {
    if (!(s.c > 0.0) || !std::isfinite(s.c)) Fail(ErrorKind::kInvalidSpec, "c: must be > 0");
    if (!(s.gamma > 0.0) || !std::isfinite(s.gamma)) {
      Fail(ErrorKind::kInvalidSpec, "gamma: must be > 0");
    }
  }
  void operator()(const LogWeylSpec&) const {}
  void operator()(const FractalLawSpec& s) const {
    if (!(s.c > 0.0) || !std::isfinite(s.c)) Fail(ErrorKind::kInvalidSpec, "c: must be > 0");
    if (!(s.d_s > 0.0) || !std::isfinite(s.d_s)) Fail(ErrorKind::kInvalidSpec, "d_s: must be > 0");
  }
  void operator()(const GeometricSpec& s) const {
    if (!(s.c > 1.0) || !std::isfinite(s.c)) Fail(ErrorKind::kInvalidSpec, "c: must be > 1");
  }
  void operator()(const FiltrationSpec& s) const {
    if (s.dims.empty()) Fail(ErrorKind::kInvalidSpec, "dims: must be nonempty");
    BigInt previous = 0;
    for (std::size_t i = 0; i < s.dims.size(); ++i) {
      if (s.dims[i] <= previous) {
        Fail(ErrorKind::kInvalidSpec,
             "dims[" + std::to_string(i) + "]: must be strictly increasing positive integers");
      }
      previous = s.dims[i];
    }
  }
};

struct Builder {
  DistinctSpectrum operator()(const ExplicitSpec& s) const { return Explicit(s.pairs); }
  DistinctSpectrum operator()(const NaturalsSpec&) const { return Naturals(); }
  DistinctSpectrum operator()(const PrimesSpec& s) const { return Primes(s.limit); }
  DistinctSpectrum operator()(const FreeGroupSpec& s) const { return FreeGroup(s.p); }
  DistinctSpectrum operator()(const Torus2Spec&) const { return Torus2(); }
  DistinctSpectrum operator()(const WeylPowerSpec& s) const { return WeylPower(s.c, s.gamma); }
  DistinctSpectrum operator()(const LogWeylSpec&) const { return LogWeyl(); }
  DistinctSpectrum operator()(const FractalLawSpec& s) const { return FractalLaw(s.c, s.d_s); }
  DistinctSpectrum operator()(const GeometricSpec& s) const { return Geometric(s.c); }
  DistinctSpectrum operator()(const FiltrationSpec& s) const { return Filtration(s.dims); }
};

}  // namespace

GeneratorSpec ParseGeneratorSpec(const json& j) {
  if (!j.is_object()) Fail(ErrorKind::kInvalidSpec, "generator spec must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    Fail(ErrorKind::kInvalidSpec, "kind: missing or not a string");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "explicit") {
    RequireKeys(j, {"pairs"});
    ExplicitSpec s;
    if (!j.contains("pairs") || !j.at("pairs").is_array()) {
      Fail(ErrorKind::kInvalidSpec, "pairs: expected an array of [eigenvalue, multiplicity]");
    }
    const json& pairs = j.at("pairs");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const std::string where = "pairs[" + std::to_string(i) + "]";
      const json& p = pairs[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number()) {
        Fail(ErrorKind::kInvalidSpec, where + ": expected [eigenvalue, multiplicity]");
      }
      s.pairs.emplace_back(p[0].get<double>(), BigIntValue(p[1], where + "[1]"));
    }
    return s;
  }
  if (kind == "naturals") {
    RequireKeys(j, {});
    return NaturalsSpec{};
  }
  if (kind == "primes") {
    RequireKeys(j, {"limit"});
    PrimesSpec s;
    if (j.contains("limit")) {
      const BigInt limit = BigIntValue(j.at("limit"), "limit");
      if (limit < 2 || limit > 4'000'000'000ULL) {
        Fail(ErrorKind::kInvalidSpec, "limit: sieve limit must lie in [2, 4e9]");
      }
      s.limit = limit.convert_to<std::uint64_t>();
    }
    return s;
  }
  if (kind == "free_group") {
    RequireKeys(j, {"p"});
    FreeGroupSpec s;
    if (j.contains("p")) {
      const BigInt p = BigIntValue(j.at("p"), "p");
      if (p < 2 || p > 1'000'000) Fail(ErrorKind::kInvalidSpec, "p: must be an integer in [2, 1e6]");
      s.p = p.convert_to<int>();
    }
    return s;
  }
  if (kind == "torus2") {
    RequireKeys(j, {});
    return Torus2Spec{};
  }
  if (kind == "weyl_power") {
    RequireKeys(j, {"c", "gamma"});
    return WeylPowerSpec{NumberField(j, "c", 1.0), NumberField(j, "gamma", 1.0)};
  }
  if (kind == "log_weyl") {
    RequireKeys(j, {});
    return LogWeylSpec{};
  }
  if (kind == "fractal_law") {
    RequireKeys(j, {"c", "d_s"});
    return FractalLawSpec{NumberField(j, "c", 1.0), NumberField(j, "d_s", 2.0)};
  }
  if (kind == "geometric") {
    RequireKeys(j, {"c"});
    return GeometricSpec{NumberField(j, "c", 2.0)};
  }
  if (kind == "filtration") {
    RequireKeys(j, {"dims"});
    FiltrationSpec s;
    if (!j.contains("dims") || !j.at("dims").is_array()) {
      Fail(ErrorKind::kInvalidSpec, "dims: expected an array of integers");
    }
    const json& dims = j.at("dims");
    for (std::size_t i = 0; i < dims.size(); ++i) {
      s.dims.push_back(BigIntValue(dims[i], "dims[" + std::to_string(i) + "]"));
    }
    return s;
  }
  Fail(ErrorKind::kInvalidSpec, "kind: unknown generator kind '" + kind + "'");
}

json GeneratorSpecToJson(const GeneratorSpec& spec) {
  struct Emit {
    json operator()(const ExplicitSpec& s) const {
      json pairs = json::array();
      for (const auto& [e, m] : s.pairs) pairs.push_back(json::array({e, BigIntJson(m)}));
      return {{"kind", "explicit"}, {"pairs", pairs}};
    }
    json operator()(const NaturalsSpec&) const { return {{"kind", "naturals"}}; }
    json operator()(const PrimesSpec& s) const { return {{"kind", "primes"}, {"limit", s.limit}}; }
    json operator()(const FreeGroupSpec& s) const { return {{"kind", "free_group"}, {"p", s.p}}; }
    json operator()(const Torus2Spec&) const { return {{"kind", "torus2"}}; }
    json operator()(const WeylPowerSpec& s) const {
      return {{"kind", "weyl_power"}, {"c", s.c}, {"gamma", s.gamma}};
    }
    json operator()(const LogWeylSpec&) const { return {{"kind", "log_weyl"}}; }
    json operator()(const FractalLawSpec& s) const {
      return {{"kind", "fractal_law"}, {"c", s.c}, {"d_s", s.d_s}};
    }
    json operator()(const GeometricSpec& s) const { return {{"kind", "geometric"}, {"c", s.c}}; }
    json operator()(const FiltrationSpec& s) const {
      json dims = json::array();
      for (const auto& d : s.dims) dims.push_back(BigIntJson(d));
      return {{"kind", "filtration"}, {"dims", dims}};
    }
  };
  return std::visit(Emit{}, spec);
}

DistinctSpectrum Generate(const GeneratorSpec& spec) {
  std::visit(Validator{}, spec);
  return std::visit(Builder{}, spec);
}

DistinctSpectrum Generate(const json& j) { return Generate(ParseGeneratorSpec(j)); }

DistinctSpectrum Explicit(std::vector<std::pair<double, BigInt>> pairs) {
  ExplicitSpec spec{pairs};
  Validator{}(spec);
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  auto data = std::make_shared<const std::vector<std::pair<double, BigInt>>>(std::move(pairs));
  auto factory = [data]() {
    auto i = std::make_shared<std::size_t>(0);
    return Cursor(
        [data, i]() -> std::optional<RawPair> {
          if (*i >= data->size()) return std::nullopt;
          const auto& [e, m] = (*data)[(*i)++];
          return RawPair{e, m};
        },
        TieRule::kRelative);
  };
  return DistinctSpectrum("explicit", GeneratorSpecToJson(spec), factory);
}

DistinctSpectrum Naturals() {
  return LawSpectrum(
      "naturals", GeneratorSpecToJson(NaturalsSpec{}), [](double n) { return n; },
      [](double x) { return std::floor(x); }, true);
}

DistinctSpectrum Primes(std::uint64_t limit) {
  Validator{}(PrimesSpec{limit});
  auto table = std::make_shared<const PrimeTable>(limit);
  SpectrumTraits traits;
  traits.harmonic_weights = true;
  traits.integer_valued = true;
  traits.law_eigenvalue = [table](double n) {
    const auto& primes = table->primes();
    if (n < 1.0 || n > static_cast<double>(primes.size())) {
      Fail(ErrorKind::kSieveLimitExceeded, "prime index beyond the sieve limit " +
                                               std::to_string(table->limit()));
    }
    return static_cast<double>(primes[static_cast<std::size_t>(n) - 1]);
  };
  traits.law_counting = [table](double x) -> BigInt {
    if (x > static_cast<double>(table->limit())) {
      Fail(ErrorKind::kSieveLimitExceeded,
           "counting at x beyond the sieve limit " + std::to_string(table->limit()));
    }
    if (x < 2.0) return 0;
    const auto& primes = table->primes();
    const auto bound = static_cast<std::uint64_t>(std::floor(x));
    return BigInt(std::upper_bound(primes.begin(), primes.end(), bound) - primes.begin());
  };
  KnownConstants known;
  known.dixmier_value = 1.0;
  known.residue = 1.0;
  auto factory = [table]() {
    auto i = std::make_shared<std::size_t>(0);
    return Cursor(
        [table, i]() -> std::optional<RawPair> {
          const auto& primes = table->primes();
          if (*i >= primes.size()) {
            Fail(ErrorKind::kSieveLimitExceeded,
                 "prime stream driven past the sieve limit " + std::to_string(table->limit()));
          }
          return RawPair{static_cast<double>(primes[(*i)++]), BigInt(1)};
        },
        TieRule::kExact);
  };
  return DistinctSpectrum("primes", GeneratorSpecToJson(PrimesSpec{limit}), factory, traits, known);
}

DistinctSpectrum FreeGroup(int p) {
  Validator{}(FreeGroupSpec{p});
  const int q = 2 * p - 1;
  SpectrumTraits traits;
  traits.integer_valued = true;
  KnownConstants known;
  known.growth_ratio = q;
  known.dixmier_value = (2.0 * p - 2.0) / (q * std::log(static_cast<double>(q)));
  known.residue = known.dixmier_value;
  auto factory = [p, q]() {
    auto k = std::make_shared<std::uint64_t>(0);
    auto m = std::make_shared<BigInt>(2 * p);
    return Cursor(
        [k, m, q]() -> std::optional<RawPair> {
          if (++*k > 1) *m *= q;
          return RawPair{static_cast<double>(*k), *m};
        },
        TieRule::kExact);
  };
  return DistinctSpectrum("free_group", GeneratorSpecToJson(FreeGroupSpec{p}), factory, traits,
                          known);
}

DistinctSpectrum Torus2() {
  SpectrumTraits traits;
  traits.integer_valued = true;
  KnownConstants known;
  known.dixmier_value = 1.0;
  known.residue = 1.0;
  auto factory = []() {
    auto source = std::make_shared<Torus2Source>();
    return Cursor([source]() { return (*source)(); }, TieRule::kExact);
  };
  return DistinctSpectrum("torus2", GeneratorSpecToJson(Torus2Spec{}), factory, traits, known);
}

DistinctSpectrum WeylPower(double c, double gamma) {
  Validator{}(WeylPowerSpec{c, gamma});
  std::function<double(double)> law;
  if (gamma == 1.0) {
    law = [c](double n) { return n / c; };
  } else if (gamma == 2.0) {
    law = [c](double n) { return std::sqrt(n / c); };
  } else {
    law = [c, gamma](double n) { return std::pow(n / c, 1.0 / gamma); };
  }
  return LawSpectrum(
      "weyl_power", GeneratorSpecToJson(WeylPowerSpec{c, gamma}), law,
      [c, gamma](double x) { return c * std::pow(x, gamma); }, false);
}

double LogWeylEigenvalue(double n) {
  const double target = std::numbers::pi * n;
  double lo = 1.0;
  double hi = std::max(std::numbers::e, target);
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::log(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

DistinctSpectrum LogWeyl() {
  return LawSpectrum(
      "log_weyl", GeneratorSpecToJson(LogWeylSpec{}), LogWeylEigenvalue,
      [](double x) { return x > 1.0 ? x * std::log(x) / std::numbers::pi : 0.0; }, false);
}

DistinctSpectrum FractalLaw(double c, double d_s) {
  Validator{}(FractalLawSpec{c, d_s});
  DistinctSpectrum base = WeylPower(c, d_s / 2.0);
  return DistinctSpectrum("fractal_law", GeneratorSpecToJson(FractalLawSpec{c, d_s}),
                          [base]() { return base.Open(); }, base.traits(), base.known());
}

DistinctSpectrum Geometric(double c) {
  Validator{}(GeometricSpec{c});
  SpectrumTraits traits;
  traits.integer_valued = true;
  KnownConstants known;
  known.growth_ratio = c;
  known.dixmier_value = (c - 1.0) / (c * std::log(c));
  known.residue = known.dixmier_value;
  auto factory = [c]() {
    auto k = std::make_shared<std::uint64_t>(0);
    auto cumulated = std::make_shared<BigInt>(0);
    return Cursor(
        [c, k, cumulated]() -> std::optional<RawPair> {
          BigInt next;
          if (++*k == 1) {
            next = std::max(BigInt(2), RoundProduct(BigInt(1), c));
          } else {
            // Rounding may stall for c close to 1; every block keeps m_k >= 1.
            next = std::max(BigInt(*cumulated + 1), RoundProduct(*cumulated, c));
          }
          RawPair out{static_cast<double>(*k), next - *cumulated};
          *cumulated = std::move(next);
          return out;
        },
        TieRule::kExact);
  };
  return DistinctSpectrum("geometric", GeneratorSpecToJson(GeometricSpec{c}), factory, traits,
                          known);
}

DistinctSpectrum Filtration(std::vector<BigInt> dims) {
  FiltrationSpec spec{dims};
  Validator{}(spec);
  SpectrumTraits traits;
  traits.integer_valued = true;
  auto data = std::make_shared<const std::vector<BigInt>>(std::move(dims));
  auto factory = [data]() {
    auto i = std::make_shared<std::size_t>(0);
    return Cursor(
        [data, i]() -> std::optional<RawPair> {
          if (*i >= data->size()) return std::nullopt;
          const BigInt previous = *i == 0 ? BigInt(0) : (*data)[*i - 1];
          const std::size_t k = ++*i;
          return RawPair{static_cast<double>(k), (*data)[k - 1] - previous};
        },
        TieRule::kExact);
  };
  return DistinctSpectrum("filtration", GeneratorSpecToJson(spec), factory, traits);
}

}  // namespace nspec
