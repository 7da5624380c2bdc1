#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "hhverify/io.hpp"
#include "hhverify/quadrature.hpp"
#include "hhverify/rng.hpp"
#include "hhverify/verdict.hpp"
#include "hhverify/version.hpp"

namespace hhv {

struct CampaignConfig {
  std::uint64_t seed = 42;
  std::vector<int> dims{2, 4, 8};
  int trials_per_check = 1000;
  double spectra_lo = 0.1;
  double spectra_hi = 10.0;
  std::vector<std::string> function_set;  // empty -> default_function_set()
  std::vector<std::string> checks;        // empty -> every default check
  LoewnerTolerance tolerance;
  QuadratureSpec quadrature;
  std::string witness_dir = "witnesses";
  int workers = 0;  // 0 -> hardware concurrency
};

/// Fills defaulted fields and validates invariants (ConfigError).
CampaignConfig normalize_config(CampaignConfig cfg);
json config_to_json(const CampaignConfig& cfg);
CampaignConfig config_from_json(const json& j);

struct TrialOutcome {
  Verdict verdict;
  double norm_margin = 0.0;  // margin / claim scale
  std::string cause;         // non-empty marks a numerical failure
};

/// A registered check: `generate` draws one operand bag from the trial's
/// RNG substream; `evaluate` is a pure function of the bag, so witnesses
/// replay bit-exactly.
struct CheckDef {
  std::string id;
  bool exploratory = false;  // reported, excluded from the exit status
  bool in_default = true;
  std::function<json(CounterRng&, const CampaignConfig&, int dim)> generate;
  std::function<TrialOutcome(const json& bag, const CampaignConfig&)> evaluate;
};

const std::vector<CheckDef>& check_registry();
const CheckDef& find_check(const std::string& id);

/// Operand bag for one fresh instance of a check.
json generate_bag(const std::string& check_id, const CampaignConfig& cfg,
                  std::uint64_t seed, std::uint64_t trial, int dim);

/// Evaluates a bag ({"check", "dim", "params", "operands"}); the entry
/// point used by replay and by campaign trials alike.
TrialOutcome evaluate_bag(const json& bag, const CampaignConfig& cfg);

struct TrialRow {
  std::string check;
  int dim = 0;
  std::uint64_t trial = 0;
  double min_margin = 0.0;
  double norm_margin = 0.0;
  Status status = Status::Inconclusive;
};

struct CheckSummary {
  std::string check;
  bool exploratory = false;
  long trials = 0, holds = 0, violated = 0, inconclusive = 0, skipped = 0;
  double min_margin = 0.0;
  double median_margin = 0.0;
  double min_norm_margin = 0.0;
  std::vector<std::string> witness_refs;
  std::vector<std::string> causes;
};

struct CampaignReport {
  int schema_version = kReportSchemaVersion;
  std::string version = kVersion;
  CampaignConfig config;
  std::vector<CheckSummary> summaries;
  std::vector<TrialRow> rows;
  double duration_seconds = 0.0;
  long asserted_violations = 0;
  long numerical_failures = 0;
};

/// Runs every configured check for trials_per_check trials. Trial k of a
/// check draws its inputs from substream (seed, check id, k) and trials are
/// aggregated by index, so parallel and serial runs produce the same report.
/// Violated trials write a witness dossier under cfg.witness_dir.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// strip_timing removes the wall-clock field for byte comparisons.
json report_to_json(const CampaignReport& r, bool strip_timing = false);

/// One row per trial: check, dim, trial index, min margin, normalized
/// margin, verdict.
void write_report_csv(const CampaignReport& r, std::ostream& out);

/// 0: all holds; 1: an asserted check violated; 3: numerical failure with
/// no violation.
int exit_code_for(const CampaignReport& r);

}  // namespace hhv
