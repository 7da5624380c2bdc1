#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hhverify/campaign.hpp"
#include "hhverify/errors.hpp"

using namespace hhv;

namespace {

CampaignConfig tiny_config(std::vector<std::string> checks, int trials = 1) {
  CampaignConfig cfg;
  cfg.seed = 42;
  cfg.trials_per_check = trials;
  cfg.checks = std::move(checks);
  cfg.witness_dir =
      (std::filesystem::temp_directory_path() / "hhv_test_witnesses").string();
  return cfg;
}

}  // namespace

TEST_CASE("single-trial campaign produces a well-formed report") {
  const auto report = run_campaign(tiny_config({"operator_exp_special_chain"}));
  REQUIRE(report.summaries.size() == 1);
  CHECK(report.summaries[0].trials == 1);
  CHECK(report.summaries[0].holds == 1);
  CHECK(report.summaries[0].violated == 0);
  CHECK(report.asserted_violations == 0);
  CHECK(report.rows.size() == 1);
  CHECK(exit_code_for(report) == 0);
}

TEST_CASE("identical configs produce byte-identical reports modulo timing") {
  const auto cfg = tiny_config({"scalar_hh_chain_basic", "trace_cauchy_schwarz"}, 8);
  const auto r1 = run_campaign(cfg);
  const auto r2 = run_campaign(cfg);
  CHECK(report_to_json(r1, true).dump() == report_to_json(r2, true).dump());
}

TEST_CASE("parallel and serial execution agree") {
  auto cfg = tiny_config({"operator_hh_log_chain", "trace_dannan_block"}, 6);
  cfg.workers = 1;
  const auto serial = run_campaign(cfg);
  cfg.workers = 4;
  const auto parallel = run_campaign(cfg);
  auto j1 = report_to_json(serial, true);
  auto j2 = report_to_json(parallel, true);
  j1["config"].erase("workers");
  j2["config"].erase("workers");
  CHECK(j1.dump() == j2.dump());
}

TEST_CASE("forced violation writes a witness that replays identically") {
  const auto dir = std::filesystem::temp_directory_path() / "hhv_hook_witness";
  std::filesystem::remove_all(dir);
  auto cfg = tiny_config({"hook_inverted_amgm"}, 2);
  cfg.witness_dir = dir.string();
  const auto report = run_campaign(cfg);
  CHECK(report.summaries[0].violated == 2);
  CHECK(report.asserted_violations == 2);
  CHECK(exit_code_for(report) == 1);
  REQUIRE(report.summaries[0].witness_refs.size() == 2);

  for (const auto& ref : report.summaries[0].witness_refs) {
    std::ifstream in(ref);
    REQUIRE(in.good());
    json dossier;
    in >> dossier;
    const auto replay = evaluate_bag(dossier, normalize_config(cfg));
    CHECK(to_string(replay.verdict.status) ==
          dossier.at("verdict").at("status").get<std::string>());
    CHECK(replay.verdict.margin ==
          dossier.at("verdict").at("margin").get<double>());
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("numerical failures downgrade trials instead of aborting") {
  // log is not positive on (0, 1), so the log chain raises DomainViolation
  // on generic spectra; the campaign must absorb that as inconclusive.
  auto cfg = tiny_config({"operator_hh_log_chain"}, 4);
  cfg.function_set = {"log"};
  const auto report = run_campaign(cfg);
  CHECK(report.summaries[0].trials == 4);
  CHECK(report.summaries[0].violated == 0);
  CHECK(report.summaries[0].inconclusive == 4);
  CHECK(report.numerical_failures == 4);
  CHECK_FALSE(report.summaries[0].causes.empty());
  CHECK(exit_code_for(report) == 3);
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(run_campaign(tiny_config({"no_such_check"})), ConfigError);
  auto cfg = tiny_config({"trace_axioms"});
  cfg.trials_per_check = 0;
  CHECK_THROWS_AS(run_campaign(cfg), ConfigError);
  cfg = tiny_config({"trace_axioms"});
  cfg.spectra_lo = -1.0;
  CHECK_THROWS_AS(run_campaign(cfg), ConfigError);
  cfg = tiny_config({"trace_axioms"});
  cfg.dims = {};
  CHECK_THROWS_AS(run_campaign(cfg), ConfigError);
}

TEST_CASE("config json round-trip") {
  CampaignConfig cfg;
  cfg.seed = 123;
  cfg.dims = {2, 4};
  cfg.trials_per_check = 17;
  cfg.spectra_lo = 0.5;
  cfg.spectra_hi = 2.0;
  cfg.function_set = {"exp"};
  cfg.checks = {"trace_axioms"};
  cfg.workers = 3;
  const auto back = config_from_json(json::parse(config_to_json(cfg).dump()));
  CHECK(back.seed == cfg.seed);
  CHECK(back.dims == cfg.dims);
  CHECK(back.trials_per_check == cfg.trials_per_check);
  CHECK(back.spectra_lo == cfg.spectra_lo);
  CHECK(back.function_set == cfg.function_set);
  CHECK(back.checks == cfg.checks);
  CHECK(back.workers == cfg.workers);
}

TEST_CASE("default config covers every default check") {
  const auto cfg = normalize_config({});
  size_t default_count = 0;
  for (const auto& def : check_registry())
    if (def.in_default) ++default_count;
  CHECK(cfg.checks.size() == default_count);
  CHECK(default_count >= 25);
  // The forced-violation hook stays out of the default set.
  for (const auto& id : cfg.checks) CHECK(id != "hook_inverted_amgm");
}

TEST_CASE("csv export has one row per trial") {
  const auto report =
      run_campaign(tiny_config({"trace_axioms", "scalar_geo_convex"}, 5));
  std::ostringstream out;
  write_report_csv(report, out);
  const std::string text = out.str();
  size_t lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 1 + 2 * 5);
  CHECK(text.rfind("check,dim,trial,min_margin,norm_margin,verdict", 0) == 0);
}

TEST_CASE("generated bags are deterministic and replayable") {
  const auto cfg = normalize_config({});
  const auto b1 = generate_bag("trace_bhatia_davis", cfg, 7, 3, 4);
  const auto b2 = generate_bag("trace_bhatia_davis", cfg, 7, 3, 4);
  CHECK(b1.dump() == b2.dump());
  const auto o1 = evaluate_bag(b1, cfg);
  const auto o2 = evaluate_bag(json::parse(b1.dump()), cfg);
  CHECK(o1.verdict.margin == o2.verdict.margin);
  CHECK(o1.verdict.status == o2.verdict.status);
}

TEST_CASE("report json carries schema version and config echo") {
  const auto report = run_campaign(tiny_config({"trace_axioms"}, 2));
  const auto j = report_to_json(report);
  CHECK(j.at("schema_version").get<int>() == kReportSchemaVersion);
  CHECK(j.at("version").get<std::string>() == kVersion);
  CHECK(j.contains("duration_seconds"));
  CHECK(j.at("config").at("trials_per_check").get<int>() == 2);
  CHECK(j.at("checks").size() == 1);
  const auto stripped = report_to_json(report, true);
  CHECK_FALSE(stripped.contains("duration_seconds"));
}
