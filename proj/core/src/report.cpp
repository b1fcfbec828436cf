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

#include "nspec/report.hpp"

#include <atomic>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "nspec/hypertrace.hpp"

namespace nspec {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SpectrumSection, spec, name, prefix_digest,
                                                digest_blocks)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(GrowthSection, blocks, burn_in, window,
                                                tail_limsup_ratio, tail_limsup_relmult,
                                                max_relmult, relmult_trend, ratio_mean,
                                                ratio_spread, classification, growth_constant)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DixmierRow, n, partial_sum, cesaro)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(DixmierSection, value, value_stderr,
                                                model_residual, tail_spread, cesaro_variation,
                                                model, schedule, verdict, prediction_kind,
                                                prediction_value, samples)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ZetaRow, s_re, s_im, re, im, tail_bound,
                                                terms_used, error)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CriteriaSection, blocks, sum_relmult_sq_partial,
                                                relmult_sq_decay, sum_relmult_sq_evidence,
                                                alpha_fit, alpha_criterion, remainder_exponent)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(ZetaSection, mode, residue, residue_error,
                                                continuation_residue, samples, criteria,
                                                criteria_error)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(TauberRow, x, counting, partition, deviation)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(PartitionRow, beta, z, energy)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(TauberSection, nuclear, not_nuclear, gamma_hat,
                                                gamma_stderr, r_squared, regularly_varying,
                                                max_deviation, beta_grid, x_grid, points,
                                                partition)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(HypertraceSection, blocks, asympt_continuous,
                                                gap_condition, gap_tail_max, gap_trend,
                                                phi_logderiv_tail, gaps_bounded_below, gap_inf,
                                                relmult_tail, overall)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(SectionError, kind, message)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(CrossChecks, dixmier_vs_zeta_residue_delta)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE_WITH_DEFAULT(Timing, section_seconds, total_seconds, threads)

void to_json(nlohmann::json& j, const AnalysisReport& r) {
  j = nlohmann::json{{"schema_version", r.schema_version},
                     {"library_version", r.library_version},
                     {"spectrum", r.spectrum},
                     {"growth", r.growth},
                     {"dixmier", r.dixmier},
                     {"zeta", r.zeta},
                     {"tauber", r.tauber},
                     {"hypertrace", r.hypertrace},
                     {"errors", r.errors},
                     {"cross_checks", r.cross_checks},
                     {"timing", r.timing}};
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
  const AnalysisReport defaults;
  r.schema_version = j.value("schema_version", defaults.schema_version);
  r.library_version = j.value("library_version", defaults.library_version);
  r.spectrum = j.value("spectrum", defaults.spectrum);
  r.growth = j.value("growth", defaults.growth);
  r.dixmier = j.value("dixmier", defaults.dixmier);
  r.zeta = j.value("zeta", defaults.zeta);
  r.tauber = j.value("tauber", defaults.tauber);
  r.hypertrace = j.value("hypertrace", defaults.hypertrace);
  r.errors = j.value("errors", defaults.errors);
  r.cross_checks = j.value("cross_checks", defaults.cross_checks);
  r.timing = j.value("timing", defaults.timing);
}

namespace {

using nlohmann::json;

constexpr std::size_t kDigestBlocks = 64;
constexpr double kContinuationStep = 1e-6;

std::optional<double> Finite(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

[[noreturn]] void ConfigFail(const std::string& where, const std::string& what) {
  Fail(ErrorKind::kConfigError, where + ": " + what);
}

void AllowKeys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) ConfigFail(where, "expected an object");
  const std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& item : j.items()) {
    if (!ok.count(item.key())) ConfigFail(where + "." + item.key(), "unknown key");
  }
}

double ReadNumber(const json& j, const std::string& where) {
  if (!j.is_number()) ConfigFail(where, "expected a number");
  return j.get<double>();
}

std::size_t ReadCount(const json& j, const std::string& where) {
  if (!j.is_number_unsigned()) ConfigFail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<double> ReadNumbers(const json& j, const std::string& where) {
  if (!j.is_array()) ConfigFail(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(ReadNumber(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::string Fmt(double x) {
  std::ostringstream out;
  out << std::setprecision(17) << x;
  return out.str();
}

std::string FmtComplex(Complex z) {
  if (z.imag() == 0.0) return Fmt(z.real());
  return Fmt(z.real()) + (z.imag() < 0 ? "" : "+") + Fmt(z.imag()) + "i";
}

SectionError ToSectionError(const std::exception& e) {
  if (const auto* err = dynamic_cast<const Error*>(&e)) {
    return {std::string(ErrorKindName(err->kind())), err->what()};
  }
  return {"Internal", e.what()};
}

GrowthSection MakeGrowth(const GrowthDiagnostics& d, std::size_t blocks) {
  GrowthSection g;
  g.blocks = blocks;
  g.burn_in = d.window.burn_in;
  g.window = d.window.length;
  g.tail_limsup_ratio = d.tail_limsup_ratio;
  g.tail_limsup_relmult = d.tail_limsup_relmult;
  g.max_relmult = d.max_relmult;
  g.relmult_trend = d.relmult_trend;
  g.ratio_mean = d.ratio_mean;
  g.ratio_spread = d.ratio_spread;
  g.classification = GrowthClassName(d.classification);
  if (d.classification == GrowthClass::kGeometricGrowth) g.growth_constant = d.growth_constant;
  return g;
}

DixmierSection MakeDixmier(const DixmierEstimate& e) {
  DixmierSection d;
  d.value = e.value;
  d.value_stderr = e.value_stderr;
  d.model_residual = e.model_residual;
  d.tail_spread = e.tail_spread;
  d.cesaro_variation = e.cesaro_variation;
  d.model = FitModelName(e.model);
  d.schedule = e.schedule;
  d.verdict = VerdictName(e.verdict);
  if (e.prediction) {
    d.prediction_kind = PredictionKindName(e.prediction->kind);
    d.prediction_value = e.prediction->value;
  }
  for (const auto& s : e.samples) d.samples.push_back({ToString(s.n), s.partial_sum, s.cesaro});
  return d;
}

ZetaMode ChooseMode(const DistinctSpectrum& spectrum, std::size_t blocks, std::string* label) {
  if (spectrum.traits().harmonic_weights) {
    *label = "harmonic";
    return ZetaMode::kCertified;
  }
  try {
    if (ComputeGrowthDiagnostics(spectrum, blocks).classification ==
        GrowthClass::kAsymptoticallyContinuous) {
      *label = "asymptotic";
      return ZetaMode::kAsymptotic;
    }
  } catch (const Error&) {
  }
  *label = "certified";
  return ZetaMode::kCertified;
}

ZetaSection MakeZeta(const DistinctSpectrum& spectrum, const AnalysisConfig& config) {
  ZetaSection z;
  const ZetaMode mode = ChooseMode(spectrum, config.growth_blocks, &z.mode);
  for (double s : config.s_grid) {
    ZetaRow row;
    row.s_re = s;
    try {
      const ZetaValue v = ZetaEval(spectrum, s, config.zeta_tol, mode);
      row.re = v.value.real();
      row.im = v.value.imag();
      row.tail_bound = v.tail_bound;
      row.terms_used = v.terms_used;
    } catch (const Error& e) {
      row.error = e.what();
    }
    z.samples.push_back(std::move(row));
  }
  try {
    ResidueOptions options;
    options.mode = mode;
    z.residue = EstimateResidue(spectrum, config.residue_tol, options).value;
  } catch (const Error& e) {
    z.residue_error = e.what();
  }
  if (spectrum.name() == "free_group") {
    const int p = spectrum.parameters().at("p").get<int>();
    const ZetaValue v = FreeGroupZeta(p, 1.0 + kContinuationStep, 1e-12);
    z.continuation_residue = kContinuationStep * v.value.real();
  }
  try {
    const CriteriaReport c = CriteriaCheck(spectrum, config.criteria_blocks, config.alphas);
    CriteriaSection cs;
    cs.blocks = c.blocks;
    cs.sum_relmult_sq_partial = c.sum_relmult_sq_partial;
    cs.relmult_sq_decay = c.relmult_sq_decay;
    cs.sum_relmult_sq_evidence = EvidenceName(c.sum_relmult_sq_evidence);
    cs.alpha_fit = c.alpha_fit;
    for (const auto& a : c.alpha_criterion) cs.alpha_criterion[Fmt(a.alpha)] = a.holds;
    if (c.remainder_exponent) cs.remainder_exponent = Finite(*c.remainder_exponent);
    z.criteria = std::move(cs);
  } catch (const Error& e) {
    z.criteria_error = e.what();
  }
  return z;
}

TauberSection MakeTauber(const DistinctSpectrum& spectrum, const AnalysisConfig& config) {
  TauberSection t;
  t.beta_grid = config.beta_grid;
  t.x_grid = config.x_grid;
  try {
    for (double b : config.beta_grid) {
      const PartitionValue p = Partition(spectrum, b);
      t.partition.push_back({b, p.value, p.value > 0.0 ? p.energy_sum / p.value : 0.0});
    }
    const TauberReport r = TauberCheck(spectrum, config.x_grid, config.beta_grid);
    t.gamma_hat = r.rv.gamma;
    t.gamma_stderr = r.rv.gamma_stderr;
    t.r_squared = r.rv.r_squared;
    t.regularly_varying = r.rv.regularly_varying;
    t.max_deviation = Finite(r.max_deviation);
    for (const auto& p : r.points) {
      t.points.push_back({p.x, ToString(p.counting), p.partition, p.deviation});
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotNuclear) throw;
    t.nuclear = false;
    t.not_nuclear = e.what();
    t.partition.clear();
  }
  return t;
}

HypertraceSection MakeHypertrace(const HypertraceVerdict& v) {
  HypertraceSection h;
  h.blocks = v.blocks;
  h.asympt_continuous = EvidenceLabelName(v.asympt_continuous);
  h.gap_condition = EvidenceLabelName(v.gap_condition);
  h.gap_tail_max = v.gap_tail_max;
  h.gap_trend = v.gap_trend;
  h.phi_logderiv_tail = v.phi_logderiv_tail;
  h.gaps_bounded_below = v.gaps_bounded_below;
  h.gap_inf = v.gap_inf;
  h.relmult_tail = v.relmult_tail;
  h.overall = OverallName(v.overall);
  return h;
}

struct Task {
  std::string name;
  std::function<void()> run;
  std::optional<SectionError> error = std::nullopt;
  double seconds = 0.0;
};

void RunTasks(std::vector<Task>& tasks, unsigned threads) {
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto start = std::chrono::steady_clock::now();
      try {
        tasks[i].run();
      } catch (const std::exception& e) {
        tasks[i].error = ToSectionError(e);
      }
      tasks[i].seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace

AnalysisConfig ParseConfig(const json& j) {
  AllowKeys(j, "config",
            {"spectrum", "analyses", "growth", "dixmier", "zeta", "tauber", "hypertrace",
             "threads"});
  AnalysisConfig c;
  if (!j.contains("spectrum")) ConfigFail("config.spectrum", "missing generator spec");
  try {
    c.spectrum = GeneratorSpecToJson(ParseGeneratorSpec(j.at("spectrum")));
    Generate(c.spectrum);
  } catch (const Error& e) {
    ConfigFail("config.spectrum", e.what());
  }
  if (j.contains("analyses")) {
    const json& a = j.at("analyses");
    if (a.is_string() && a.get<std::string>() == "all") {
      // defaults
    } else if (a.is_array()) {
      c.growth = c.dixmier = c.zeta = c.tauber = c.hypertrace = false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string where = "config.analyses[" + std::to_string(i) + "]";
        if (!a[i].is_string()) ConfigFail(where, "expected a string");
        const std::string name = a[i].get<std::string>();
        if (name == "growth") {
          c.growth = true;
        } else if (name == "dixmier") {
          c.dixmier = true;
        } else if (name == "zeta") {
          c.zeta = true;
        } else if (name == "tauber") {
          c.tauber = true;
        } else if (name == "hypertrace") {
          c.hypertrace = true;
        } else {
          ConfigFail(where, "unknown analysis '" + name + "'");
        }
      }
    } else {
      ConfigFail("config.analyses", "expected \"all\" or an array of analysis names");
    }
  }
  if (j.contains("growth")) {
    const json& g = j.at("growth");
    AllowKeys(g, "config.growth", {"blocks"});
    if (g.contains("blocks")) c.growth_blocks = ReadCount(g.at("blocks"), "config.growth.blocks");
  }
  if (j.contains("dixmier")) {
    const json& d = j.at("dixmier");
    AllowKeys(d, "config.dixmier", {"schedule", "model"});
    if (d.contains("schedule") && !(d.at("schedule").is_string() && d.at("schedule") == "default")) {
      const json& s = d.at("schedule");
      if (!s.is_array()) ConfigFail("config.dixmier.schedule", "expected an array or \"default\"");
      std::vector<BigInt> points;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string where = "config.dixmier.schedule[" + std::to_string(i) + "]";
        if (s[i].is_number_unsigned()) {
          points.emplace_back(s[i].get<std::uint64_t>());
        } else if (s[i].is_string()) {
          try {
            points.push_back(ParseBigInt(s[i].get<std::string>()));
          } catch (const Error& e) {
            ConfigFail(where, e.what());
          }
        } else {
          ConfigFail(where, "expected a positive integer");
        }
      }
      c.schedule = std::move(points);
    }
    if (d.contains("model")) {
      const json& m = d.at("model");
      if (m == "ConstPlusInvLog") {
        c.model = FitModel::kConstPlusInvLog;
      } else if (m == "ConstOnly") {
        c.model = FitModel::kConstOnly;
      } else {
        ConfigFail("config.dixmier.model", "expected \"ConstPlusInvLog\" or \"ConstOnly\"");
      }
    }
  }
  if (j.contains("zeta")) {
    const json& z = j.at("zeta");
    AllowKeys(z, "config.zeta", {"s_grid", "tol", "residue_tol", "criteria_blocks", "alphas"});
    if (z.contains("s_grid")) c.s_grid = ReadNumbers(z.at("s_grid"), "config.zeta.s_grid");
    if (z.contains("tol")) c.zeta_tol = ReadNumber(z.at("tol"), "config.zeta.tol");
    if (z.contains("residue_tol")) {
      c.residue_tol = ReadNumber(z.at("residue_tol"), "config.zeta.residue_tol");
    }
    if (z.contains("criteria_blocks")) {
      c.criteria_blocks = ReadCount(z.at("criteria_blocks"), "config.zeta.criteria_blocks");
    }
    if (z.contains("alphas")) c.alphas = ReadNumbers(z.at("alphas"), "config.zeta.alphas");
  }
  if (j.contains("tauber")) {
    const json& t = j.at("tauber");
    AllowKeys(t, "config.tauber", {"beta_grid", "x_grid"});
    if (t.contains("beta_grid")) {
      c.beta_grid = ReadNumbers(t.at("beta_grid"), "config.tauber.beta_grid");
    }
    if (t.contains("x_grid")) c.x_grid = ReadNumbers(t.at("x_grid"), "config.tauber.x_grid");
  }
  if (j.contains("hypertrace")) {
    const json& h = j.at("hypertrace");
    AllowKeys(h, "config.hypertrace", {"blocks"});
    if (h.contains("blocks")) {
      c.hypothesis_blocks = ReadCount(h.at("blocks"), "config.hypertrace.blocks");
    }
  }
  if (j.contains("threads")) {
    const std::size_t t = ReadCount(j.at("threads"), "config.threads");
    if (t == 0) ConfigFail("config.threads", "must be >= 1");
    c.threads = static_cast<unsigned>(t);
  }
  return c;
}

unsigned ResolveThreads(const std::optional<unsigned>& requested) {
  if (requested && *requested > 0) return *requested;
  if (const char* env = std::getenv("NSPEC_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string PrefixDigest(const DistinctSpectrum& spectrum, std::size_t blocks) {
  std::uint64_t h = 1469598103934665603ULL;
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  try {
    auto cursor = spectrum.Open();
    for (std::size_t i = 0; i < blocks; ++i) {
      auto block = cursor->Next();
      if (!block) break;
      std::ostringstream rec;
      rec << block->k << ':' << std::hexfloat << block->eigenvalue << ':'
          << ToString(block->multiplicity) << ':' << ToString(block->cumulated) << ';';
      feed(rec.str());
    }
  } catch (const Error&) {
    // A bounded stream (sieve limit) simply ends the digest early.
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

AnalysisReport RunAnalyze(const AnalysisConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  DistinctSpectrum spectrum = [&] {
    try {
      return Generate(config.spectrum);
    } catch (const Error& e) {
      ConfigFail("config.spectrum", e.what());
    }
  }();

  AnalysisReport report;
  report.spectrum.spec = config.spectrum;
  report.spectrum.name = spectrum.name();
  report.spectrum.prefix_digest = PrefixDigest(spectrum, kDigestBlocks);
  {
    std::size_t n = 0;
    try {
      n = spectrum.Prefix(kDigestBlocks).size();
    } catch (const Error&) {
    }
    report.spectrum.digest_blocks = n;
  }

  std::optional<GrowthSection> growth;
  std::optional<DixmierSection> dixmier;
  std::optional<ZetaSection> zeta;
  std::optional<TauberSection> tauber;
  std::optional<HypertraceSection> hyper;
  std::vector<Task> tasks;
  if (config.growth) {
    tasks.push_back({"growth", [&] {
                       growth = MakeGrowth(
                           ComputeGrowthDiagnostics(spectrum, config.growth_blocks),
                           config.growth_blocks);
                     }});
  }
  if (config.dixmier) {
    tasks.push_back({"dixmier", [&] {
                       const Schedule schedule =
                           config.schedule ? ExplicitSchedule(*config.schedule)
                                           : DefaultSchedule(spectrum, config.growth_blocks);
                       EstimateOptions options;
                       options.model = config.model;
                       options.growth_blocks = config.growth_blocks;
                       dixmier = MakeDixmier(EstimateTrace(spectrum, schedule, options));
                     }});
  }
  if (config.zeta) tasks.push_back({"zeta", [&] { zeta = MakeZeta(spectrum, config); }});
  if (config.tauber) tasks.push_back({"tauber", [&] { tauber = MakeTauber(spectrum, config); }});
  if (config.hypertrace) {
    tasks.push_back({"hypertrace", [&] {
                       hyper = MakeHypertrace(CheckHypotheses(spectrum, config.hypothesis_blocks));
                     }});
  }
  const unsigned threads = ResolveThreads(config.threads);
  RunTasks(tasks, threads);

  report.growth = std::move(growth);
  report.dixmier = std::move(dixmier);
  report.zeta = std::move(zeta);
  report.tauber = std::move(tauber);
  report.hypertrace = std::move(hyper);
  for (const Task& t : tasks) {
    report.timing.section_seconds[t.name] = t.seconds;
    if (t.error) report.errors[t.name] = *t.error;
  }
  if (report.dixmier && report.zeta) {
    const std::optional<double> residue =
        report.zeta->residue ? report.zeta->residue : report.zeta->continuation_residue;
    if (residue) report.cross_checks.dixmier_vs_zeta_residue_delta = report.dixmier->value - *residue;
  }
  report.timing.threads = threads;
  report.timing.total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string DixmierCsv(const std::vector<DixmierSample>& samples) {
  std::string out = "N,S_N,cesaro\n";
  for (const auto& s : samples) {
    out += ToString(s.n) + "," + Fmt(s.partial_sum) + "," + Fmt(s.cesaro) + "\n";
  }
  return out;
}

std::string ZetaCsv(const std::vector<ZetaValue>& values) {
  std::string out = "s,re,im,tail_bound\n";
  for (const auto& v : values) {
    out += FmtComplex(v.s) + "," + Fmt(v.value.real()) + "," + Fmt(v.value.imag()) + "," +
           Fmt(v.tail_bound) + "\n";
  }
  return out;
}

std::string PartitionCsv(const std::vector<PartitionValue>& values) {
  std::string out = "beta,Z,energy\n";
  for (const auto& v : values) {
    const double energy = v.value > 0.0 ? v.energy_sum / v.value : 0.0;
    out += Fmt(v.beta) + "," + Fmt(v.value) + "," + Fmt(energy) + "\n";
  }
  return out;
}

json DixmierJson(const DixmierEstimate& estimate) { return json(MakeDixmier(estimate)); }

json ZetaJson(const std::vector<ZetaValue>& values) {
  json rows = json::array();
  for (const auto& v : values) {
    rows.push_back({{"s_re", v.s.real()},
                    {"s_im", v.s.imag()},
                    {"re", v.value.real()},
                    {"im", v.value.imag()},
                    {"tail_bound", v.tail_bound},
                    {"terms_used", v.terms_used}});
  }
  return rows;
}

json PartitionJson(const std::vector<PartitionValue>& values) {
  json rows = json::array();
  for (const auto& v : values) {
    rows.push_back({{"beta", v.beta},
                    {"z", v.value},
                    {"energy", v.value > 0.0 ? v.energy_sum / v.value : 0.0},
                    {"tail_bound", v.tail_bound},
                    {"terms_used", v.terms_used}});
  }
  return rows;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) Fail(ErrorKind::kIoError, "cannot open '" + path + "': " + std::strerror(errno));
  out << text;
  out.flush();
  if (!out) Fail(ErrorKind::kIoError, "write to '" + path + "' failed: " + std::strerror(errno));
}

}  // namespace nspec
