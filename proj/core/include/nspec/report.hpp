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

#ifndef NSPEC_REPORT_HPP_
#define NSPEC_REPORT_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nspec/dixmier.hpp"
#include "nspec/tauberian.hpp"
#include "nspec/zeta.hpp"

namespace nlohmann {
template <typename T>
struct adl_serializer<std::optional<T>> {
  static void to_json(json& j, const std::optional<T>& v) {
    if (v) {
      j = *v;
    } else {
      j = nullptr;
    }
  }
  static void from_json(const json& j, std::optional<T>& v) {
    if (j.is_null()) {
      v.reset();
    } else {
      v = j.get<T>();
    }
  }
};
}  // namespace nlohmann

namespace nspec {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kLibraryVersion = "0.1.0";

struct SpectrumSection {
  nlohmann::json spec;
  std::string name;
  std::string prefix_digest;  // FNV-1a over the first digest_blocks blocks
  std::size_t digest_blocks = 0;
};

struct GrowthSection {
  std::size_t blocks = 0;
  std::size_t burn_in = 0;
  std::size_t window = 0;
  double tail_limsup_ratio = 0.0;
  double tail_limsup_relmult = 0.0;
  double max_relmult = 0.0;
  double relmult_trend = 0.0;
  double ratio_mean = 0.0;
  double ratio_spread = 0.0;
  std::string classification;
  std::optional<double> growth_constant;
};

struct DixmierRow {
  std::string n;
  double partial_sum = 0.0;
  double cesaro = 0.0;
};

struct DixmierSection {
  double value = 0.0;
  double value_stderr = 0.0;
  double model_residual = 0.0;
  double tail_spread = 0.0;
  double cesaro_variation = 0.0;
  std::string model;
  std::string schedule;
  std::string verdict;
  std::optional<std::string> prediction_kind;
  std::optional<double> prediction_value;
  std::vector<DixmierRow> samples;
};

struct ZetaRow {
  double s_re = 0.0;
  double s_im = 0.0;
  std::optional<double> re;
  std::optional<double> im;
  std::optional<double> tail_bound;
  std::uint64_t terms_used = 0;
  std::optional<std::string> error;
};

struct CriteriaSection {
  std::size_t blocks = 0;
  double sum_relmult_sq_partial = 0.0;
  double relmult_sq_decay = 0.0;
  std::string sum_relmult_sq_evidence;
  std::optional<double> alpha_fit;
  std::map<std::string, bool> alpha_criterion;
  std::optional<double> remainder_exponent;
};

struct ZetaSection {
  std::string mode;
  std::optional<double> residue;
  std::optional<std::string> residue_error;
  // (s-1)·ζ at s = 1 + 1e-6 through the closed-form continuation (free groups).
  std::optional<double> continuation_residue;
  std::vector<ZetaRow> samples;
  std::optional<CriteriaSection> criteria;
  std::optional<std::string> criteria_error;
};

struct TauberRow {
  double x = 0.0;
  std::string counting;
  double partition = 0.0;
  double deviation = 0.0;
};

struct PartitionRow {
  double beta = 0.0;
  double z = 0.0;
  double energy = 0.0;
};

struct TauberSection {
  bool nuclear = true;
  std::optional<std::string> not_nuclear;  // reason when nuclear is false
  std::optional<double> gamma_hat;
  std::optional<double> gamma_stderr;
  std::optional<double> r_squared;
  std::optional<bool> regularly_varying;
  std::optional<double> max_deviation;
  std::vector<double> beta_grid;
  std::vector<double> x_grid;
  std::vector<TauberRow> points;
  std::vector<PartitionRow> partition;
};

struct HypertraceSection {
  std::size_t blocks = 0;
  std::string asympt_continuous;
  std::string gap_condition;
  double gap_tail_max = 0.0;
  double gap_trend = 0.0;
  double phi_logderiv_tail = 0.0;
  bool gaps_bounded_below = false;
  double gap_inf = 0.0;
  double relmult_tail = 0.0;
  std::string overall;
};

struct SectionError {
  std::string kind;
  std::string message;
};

struct CrossChecks {
  std::optional<double> dixmier_vs_zeta_residue_delta;
};

struct Timing {
  std::map<std::string, double> section_seconds;
  double total_seconds = 0.0;
  unsigned threads = 1;
};

struct AnalysisReport {
  int schema_version = kReportSchemaVersion;
  std::string library_version = kLibraryVersion;
  SpectrumSection spectrum;
  std::optional<GrowthSection> growth;
  std::optional<DixmierSection> dixmier;
  std::optional<ZetaSection> zeta;
  std::optional<TauberSection> tauber;
  std::optional<HypertraceSection> hypertrace;
  std::map<std::string, SectionError> errors;
  CrossChecks cross_checks;
  Timing timing;
};

void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

struct AnalysisConfig {
  nlohmann::json spectrum;
  bool growth = true;
  bool dixmier = true;
  bool zeta = true;
  bool tauber = true;
  bool hypertrace = true;

  std::size_t growth_blocks = 200;
  std::optional<std::vector<BigInt>> schedule;
  FitModel model = FitModel::kConstPlusInvLog;
  std::vector<double> s_grid{1.5, 2.0, 2.5, 3.0};
  double zeta_tol = 1e-8;
  double residue_tol = 1e-6;
  std::size_t criteria_blocks = 200;
  std::vector<double> alphas{0.0, 0.25, 0.5, 0.75, 0.99, 1.0};
  std::vector<double> beta_grid = DefaultBetaGrid();
  std::vector<double> x_grid{1e2, 1e3, 1e4};
  std::size_t hypothesis_blocks = 20000;
  std::optional<unsigned> threads;
};

// Throws ConfigError naming the offending location.
AnalysisConfig ParseConfig(const nlohmann::json& j);

// Section failures are recorded in report.errors; only a bad spectrum spec
// throws (ConfigError).
AnalysisReport RunAnalyze(const AnalysisConfig& config);

// Worker count: config, then NSPEC_THREADS, then hardware concurrency.
unsigned ResolveThreads(const std::optional<unsigned>& requested);

std::string PrefixDigest(const DistinctSpectrum& spectrum, std::size_t blocks);

enum class OutputFormat { kCsv, kJson };

// Stable CSV layouts: N,S_N,cesaro / s,re,im,tail_bound / beta,Z,energy.
std::string DixmierCsv(const std::vector<DixmierSample>& samples);
std::string ZetaCsv(const std::vector<ZetaValue>& values);
std::string PartitionCsv(const std::vector<PartitionValue>& values);

nlohmann::json DixmierJson(const DixmierEstimate& estimate);
nlohmann::json ZetaJson(const std::vector<ZetaValue>& values);
nlohmann::json PartitionJson(const std::vector<PartitionValue>& values);

// Writes text to `path`; IoError carries the OS message verbatim.
void WriteText(const std::string& path, const std::string& text);

}  // namespace nspec

#endif  // NSPEC_REPORT_HPP_
