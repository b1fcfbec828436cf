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

#include "nspec_cli/cli.hpp"

#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "nspec/dixmier.hpp"
#include "nspec/error.hpp"
#include "nspec/generators.hpp"
#include "nspec/hypertrace.hpp"
#include "nspec/report.hpp"
#include "nspec/tauberian.hpp"
#include "nspec/zeta.hpp"

namespace nspec::cli {
namespace {

using nlohmann::json;

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double ToNumber(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    Fail(ErrorKind::kConfigError, "grid: '" + s + "' is not a number");
  }
  return v;
}

// Inline JSON when the argument looks like an object, otherwise a file path.
json LoadJson(const std::string& arg, const std::string& what) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || arg[first] != '{') {
    std::ifstream in(arg);
    if (!in) Fail(ErrorKind::kIoError, "cannot read " + what + " file '" + arg + "'");
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    Fail(ErrorKind::kConfigError, what + ": " + e.what());
  }
}

DistinctSpectrum LoadSpectrum(const std::string& arg) {
  try {
    return Generate(LoadJson(arg, "--spec"));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kInvalidSpec) Fail(ErrorKind::kConfigError, std::string("--spec: ") + e.what());
    throw;
  }
}

void Emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    WriteText(path, text);
  }
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

int ExitCodeFor(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kConfigError:
    case ErrorKind::kInvalidSpec:
    case ErrorKind::kGridTooShort:
      return kUsageError;
    default:
      return kRuntimeError;
  }
}

struct Common {
  std::string spec;
  std::string out;
  std::string format;
};

void AddCommon(CLI::App* cmd, Common& c, const std::string& default_format, bool spec_required) {
  auto* opt = cmd->add_option("--spec", c.spec, "generator spec: JSON file or inline JSON");
  if (spec_required) opt->required();
  cmd->add_option("--out", c.out, "output path (default: stdout)");
  c.format = default_format;
  cmd->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

int RunAnalyze(const Common& c, const std::string& config_arg, const std::string& schedule,
               const std::string& s_grid, const std::string& beta_grid, std::size_t blocks,
               unsigned threads, std::ostream& out, std::ostream& err) {
  if (c.format != "json") Fail(ErrorKind::kConfigError, "analyze only writes json");
  json cfg = config_arg.empty() ? json::object() : LoadJson(config_arg, "--config");
  if (!cfg.is_object()) Fail(ErrorKind::kConfigError, "--config: expected a JSON object");
  if (!c.spec.empty()) cfg["spectrum"] = LoadJson(c.spec, "--spec");
  AnalysisConfig config = ParseConfig(cfg);
  if (!schedule.empty()) config.schedule = ParseIntegerGrid(schedule);
  if (!s_grid.empty()) config.s_grid = ParseGrid(s_grid);
  if (!beta_grid.empty()) config.beta_grid = ParseGrid(beta_grid);
  if (blocks > 0) config.growth_blocks = blocks;
  if (threads > 0) config.threads = threads;
  const AnalysisReport report = RunAnalyze(config);
  Emit(Dump(json(report)), c.out, out);
  if (report.errors.empty()) return kOk;
  err << "sections failed:";
  for (const auto& [name, e] : report.errors) err << ' ' << name << " (" << e.kind << ")";
  err << '\n';
  return kSectionFailed;
}

Schedule ScheduleFrom(const DistinctSpectrum& spectrum, const std::string& text,
                      std::size_t growth_blocks) {
  if (text.empty() || text == "default") return DefaultSchedule(spectrum, growth_blocks);
  if (text.rfind("blocks:", 0) == 0) {
    const auto parts = Split(text, ':');
    if (parts.size() < 2 || parts.size() > 3) {
      Fail(ErrorKind::kConfigError, "schedule: expected blocks:K[:n]");
    }
    const auto k = static_cast<std::size_t>(ToNumber(parts[1]));
    const std::size_t n = parts.size() == 3 ? static_cast<std::size_t>(ToNumber(parts[2])) : 20;
    return BlockEndSchedule(spectrum, k, n);
  }
  return ExplicitSchedule(ParseIntegerGrid(text));
}

FitModel ModelFrom(const std::string& text) {
  if (text == "ConstOnly" || text == "const") return FitModel::kConstOnly;
  if (text == "ConstPlusInvLog" || text == "const+invlog") return FitModel::kConstPlusInvLog;
  Fail(ErrorKind::kConfigError, "--model: expected ConstPlusInvLog or ConstOnly");
}

}  // namespace

std::vector<double> ParseGrid(const std::string& text) {
  if (text.empty()) Fail(ErrorKind::kConfigError, "grid: empty");
  const auto parts = Split(text, ':');
  if (parts.size() == 1) {
    std::vector<double> out;
    for (const auto& item : Split(text, ',')) out.push_back(ToNumber(item));
    return out;
  }
  if (parts.size() != 4 || (parts[0] != "lin" && parts[0] != "geom")) {
    Fail(ErrorKind::kConfigError, "grid: expected a,b,c or lin:a:b:n or geom:a:b:n");
  }
  const double a = ToNumber(parts[1]);
  const double b = ToNumber(parts[2]);
  const double nd = ToNumber(parts[3]);
  if (nd < 1 || nd != std::floor(nd)) Fail(ErrorKind::kConfigError, "grid: n must be a positive integer");
  const auto n = static_cast<std::size_t>(nd);
  if (parts[0] == "geom" && !(a > 0.0 && b > 0.0)) {
    Fail(ErrorKind::kConfigError, "grid: geom endpoints must be > 0");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
    out.push_back(parts[0] == "lin" ? a + t * (b - a) : a * std::pow(b / a, t));
  }
  if (n > 1) out.back() = b;
  return out;
}

std::vector<BigInt> ParseIntegerGrid(const std::string& text) {
  std::vector<BigInt> out;
  auto push = [&out](const BigInt& v) {
    if (out.empty() || v > out.back()) out.push_back(v);
  };
  if (text.find(':') == std::string::npos) {
    for (const auto& item : Split(text, ',')) {
      if (item.find_first_of(".eE") == std::string::npos) {
        try {
          push(ParseBigInt(item));
        } catch (const Error&) {
          Fail(ErrorKind::kConfigError, "schedule: '" + item + "' is not an integer");
        }
      } else {
        push(BigInt(static_cast<std::uint64_t>(std::floor(ToNumber(item)))));
      }
    }
    return out;
  }
  for (double v : ParseGrid(text)) {
    if (!(v >= 0.0) || v > 1.8e19) Fail(ErrorKind::kConfigError, "schedule: point out of range");
    push(BigInt(static_cast<std::uint64_t>(std::floor(v + 1e-9 * v))));
  }
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral weights, Dixmier traces, zeta residues and Tauberian checks"};
  app.name("nspec");
  app.require_subcommand(1);

  Common analyze_c, dixmier_c, zeta_c, tauber_c, hyper_c;
  std::string config_arg, schedule, s_grid, beta_grid, x_grid, model = "ConstPlusInvLog";
  std::string mode = "auto", operator_arg;
  std::size_t blocks = 0;
  unsigned threads = 0;
  double tol = 1e-8, residue_tol = 1e-6, s_value = 1.5;
  bool with_residue = false;
  std::size_t dimension = 1000;

  auto* analyze = app.add_subcommand("analyze", "run every analysis and write a JSON report");
  AddCommon(analyze, analyze_c, "json", false);
  analyze->add_option("--config", config_arg, "analysis config: JSON file or inline JSON");
  analyze->add_option("--schedule", schedule, "Dixmier N-grid");
  analyze->add_option("--s-grid", s_grid, "zeta sample points");
  analyze->add_option("--beta-grid", beta_grid, "partition-function β grid (decreasing)");
  analyze->add_option("--blocks", blocks, "blocks for growth diagnostics");
  analyze->add_option("--threads", threads, "worker threads (default: NSPEC_THREADS or cores)");

  auto* dixmier = app.add_subcommand("dixmier", "log partial sums S_N and the trace estimate");
  AddCommon(dixmier, dixmier_c, "csv", true);
  dixmier->add_option("--schedule", schedule, "N-grid: list, lin:a:b:n, geom:a:b:n, blocks:K[:n]");
  dixmier->add_option("--model", model, "ConstPlusInvLog or ConstOnly")->capture_default_str();
  dixmier->add_option("--blocks", blocks, "blocks for growth diagnostics");

  auto* zeta = app.add_subcommand("zeta", "evaluate ζ_L(s) on a grid");
  AddCommon(zeta, zeta_c, "csv", true);
  zeta->add_option("--s-grid", s_grid, "s values (Re s > 1)");
  zeta->add_option("--tol", tol, "truncation tolerance")->capture_default_str();
  zeta->add_option("--mode", mode, "auto, certified or asymptotic")
      ->check(CLI::IsMember({"auto", "certified", "asymptotic"}))
      ->capture_default_str();
  zeta->add_flag("--residue", with_residue, "also estimate the residue at s = 1 (json only)");
  zeta->add_option("--residue-tol", residue_tol, "residue tolerance")->capture_default_str();

  auto* tauber = app.add_subcommand("tauber", "partition function, mean energy, Karamata check");
  AddCommon(tauber, tauber_c, "csv", true);
  tauber->add_option("--beta-grid", beta_grid, "β values, decreasing");
  tauber->add_option("--x-grid", x_grid, "x values for the Karamata check (json only)");

  auto* hyper = app.add_subcommand("hypertrace", "spectral hypothesis checks and commutator norms");
  AddCommon(hyper, hyper_c, "json", true);
  hyper->add_option("--blocks", blocks, "blocks to sample");
  hyper->add_option("--operator", operator_arg, "truncated operator JSON for commutator demos");
  hyper->add_option("--s", s_value, "exponent s > 1 for the operator demos")->capture_default_str();
  hyper->add_option("--dimension", dimension, "truncation dimension")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (analyze->parsed()) {
      if (analyze_c.spec.empty() && config_arg.empty()) {
        Fail(ErrorKind::kConfigError, "analyze needs --spec or --config");
      }
      return RunAnalyze(analyze_c, config_arg, schedule, s_grid, beta_grid, blocks, threads, out,
                        err);
    }
    if (dixmier->parsed()) {
      const DistinctSpectrum spectrum = LoadSpectrum(dixmier_c.spec);
      const std::size_t growth_blocks = blocks > 0 ? blocks : 200;
      EstimateOptions options;
      options.model = ModelFrom(model);
      options.growth_blocks = growth_blocks;
      const DixmierEstimate est =
          EstimateTrace(spectrum, ScheduleFrom(spectrum, schedule, growth_blocks), options);
      Emit(dixmier_c.format == "csv" ? DixmierCsv(est.samples) : Dump(DixmierJson(est)),
           dixmier_c.out, out);
      return kOk;
    }
    if (zeta->parsed()) {
      const DistinctSpectrum spectrum = LoadSpectrum(zeta_c.spec);
      ZetaMode zmode = ZetaMode::kCertified;
      if (mode == "asymptotic") {
        zmode = ZetaMode::kAsymptotic;
      } else if (mode == "auto" && !spectrum.traits().harmonic_weights) {
        try {
          if (ComputeGrowthDiagnostics(spectrum, 200).classification ==
              GrowthClass::kAsymptoticallyContinuous) {
            zmode = ZetaMode::kAsymptotic;
          }
        } catch (const Error&) {
        }
      }
      std::vector<ZetaValue> values;
      for (double s : ParseGrid(s_grid.empty() ? "lin:1.1:2.0:10" : s_grid)) {
        values.push_back(ZetaEval(spectrum, s, tol, zmode));
      }
      if (zeta_c.format == "csv") {
        Emit(ZetaCsv(values), zeta_c.out, out);
        return kOk;
      }
      json j{{"samples", ZetaJson(values)}};
      if (with_residue) {
        ResidueOptions ro;
        ro.mode = zmode;
        try {
          j["residue"] = EstimateResidue(spectrum, residue_tol, ro).value;
        } catch (const Error& e) {
          j["residue"] = nullptr;
          j["residue_error"] = e.what();
        }
      }
      Emit(Dump(j), zeta_c.out, out);
      return kOk;
    }
    if (tauber->parsed()) {
      const DistinctSpectrum spectrum = LoadSpectrum(tauber_c.spec);
      const std::vector<double> betas = beta_grid.empty() ? DefaultBetaGrid() : ParseGrid(beta_grid);
      std::vector<PartitionValue> values;
      for (double b : betas) values.push_back(Partition(spectrum, b));
      if (tauber_c.format == "csv") {
        Emit(PartitionCsv(values), tauber_c.out, out);
        return kOk;
      }
      const std::vector<double> xs = x_grid.empty() ? std::vector<double>{1e2, 1e3, 1e4}
                                                    : ParseGrid(x_grid);
      const TauberReport r = TauberCheck(spectrum, xs, betas);
      json points = json::array();
      for (const auto& p : r.points) {
        points.push_back({{"x", p.x},
                          {"counting", ToString(p.counting)},
                          {"partition", p.partition},
                          {"deviation", p.deviation}});
      }
      json j{{"partition", PartitionJson(values)},
             {"gamma_hat", r.rv.gamma},
             {"gamma_stderr", r.rv.gamma_stderr},
             {"r_squared", r.rv.r_squared},
             {"regularly_varying", r.rv.regularly_varying},
             {"tauber_max_deviation", r.max_deviation},
             {"points", points}};
      Emit(Dump(j), tauber_c.out, out);
      return kOk;
    }
    if (hyper->parsed()) {
      const DistinctSpectrum spectrum = LoadSpectrum(hyper_c.spec);
      const HypertraceVerdict v =
          CheckHypotheses(spectrum, blocks > 0 ? blocks : kDefaultHypothesisBlocks);
      if (hyper_c.format == "csv") {
        std::string csv = "index,gap_ratio\n";
        for (std::size_t i = 0; i < v.gap_sequence.size(); ++i) {
          std::ostringstream row;
          row.precision(17);
          row << i + 1 << ',' << v.gap_sequence[i] << '\n';
          csv += row.str();
        }
        Emit(csv, hyper_c.out, out);
        return kOk;
      }
      json j{{"asympt_continuous", EvidenceLabelName(v.asympt_continuous)},
             {"gap_condition", EvidenceLabelName(v.gap_condition)},
             {"gap_tail_max", v.gap_tail_max},
             {"gap_trend", v.gap_trend},
             {"phi_logderiv_tail", v.phi_logderiv_tail},
             {"gaps_bounded_below", v.gaps_bounded_below},
             {"gap_inf", v.gap_inf},
             {"relmult_tail", v.relmult_tail},
             {"overall", OverallName(v.overall)},
             {"blocks", v.blocks}};
      if (!operator_arg.empty()) {
        const TruncatedOperator a = ParseOperator(LoadJson(operator_arg, "--operator"), dimension);
        const double norm = CommutatorTraceNorm(spectrum, a, s_value);
        const WeightedTrace w = ComputeWeightedTrace(
            spectrum, a, s_value,
            static_cast<std::size_t>(std::min(a.entries.rows(), a.entries.cols())));
        j["operator"] = {{"label", a.label},
                         {"s", s_value},
                         {"commutator_trace_norm", norm},
                         {"weighted_trace", {w.value.real(), w.value.imag()}},
                         {"weighted_trace_scaled", {w.scaled.real(), w.scaled.imag()}},
                         {"diagonal_tail_bound", w.diagonal_tail_bound}};
      }
      Emit(Dump(j), hyper_c.out, out);
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
  return kUsageError;
}

}  // namespace nspec::cli
