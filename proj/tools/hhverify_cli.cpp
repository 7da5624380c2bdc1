// Command-line surface: single-instance checks with replayable operand
// files, seeded verification campaigns, and closed-form oracle queries.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hhverify/campaign.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/means.hpp"
#include "hhverify/version.hpp"

namespace {

using hhv::json;

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hhv::ConfigError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw hhv::ConfigError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

std::vector<int> parse_dims(const std::string& s) {
  std::vector<int> dims;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) dims.push_back(std::stoi(tok));
  return dims;
}

std::vector<std::string> parse_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(tok);
  return out;
}

int status_exit_code(hhv::Status s) {
  return s == hhv::Status::Violated ? 1 : 0;
}

int run_check(const std::string& check_id, const std::string& file,
              const std::string& replay, double* alpha, double* r, double* nu,
              std::uint64_t seed, int dim) {
  hhv::CampaignConfig cfg = hhv::normalize_config({});
  json bag;
  if (!replay.empty()) {
    bag = read_json_file(replay);
  } else if (!file.empty()) {
    bag = read_json_file(file);
    if (!bag.contains("check")) bag["check"] = check_id;
  } else {
    if (check_id.empty())
      throw hhv::ConfigError("check: need a check id, --file or --replay");
    bag = hhv::generate_bag(check_id, cfg, seed, 0, dim);
  }
  if (!bag.contains("params")) bag["params"] = json::object();
  if (alpha) bag["params"]["alpha"] = *alpha;
  if (r) bag["params"]["r"] = *r;
  if (nu) bag["params"]["nu_list"] = std::vector<double>{*nu};

  const hhv::TrialOutcome out = hhv::evaluate_bag(bag, cfg);
  json result{{"check", bag.at("check")},
              {"dim", bag.value("dim", dim)},
              {"params", bag.at("params")},
              {"verdict", hhv::verdict_to_json(out.verdict)}};
  if (!out.cause.empty()) result["cause"] = out.cause;
  std::cout << result.dump(2) << "\n";
  if (!out.cause.empty()) return 3;
  return status_exit_code(out.verdict.status);
}

int run_campaign_cmd(const hhv::CampaignConfig& cfg, const std::string& out_path,
                     const std::string& csv_path) {
  const hhv::CampaignReport report = hhv::run_campaign(cfg);

  for (const auto& s : report.summaries) {
    std::cout << s.check << (s.exploratory ? " [exploratory]" : "") << ": "
              << s.holds << " holds, " << s.violated << " violated, "
              << s.inconclusive << " inconclusive";
    if (s.skipped > 0) std::cout << ", " << s.skipped << " skipped";
    std::cout << " (min margin " << s.min_margin << ")\n";
  }
  std::cout << "total: " << report.asserted_violations
            << " asserted violations, " << report.numerical_failures
            << " numerical failures, " << report.duration_seconds << " s\n";

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw hhv::ConfigError("cannot write '" + out_path + "'");
    out << hhv::report_to_json(report).dump(2) << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw hhv::ConfigError("cannot write '" + csv_path + "'");
    hhv::write_report_csv(report, out);
  }
  return hhv::exit_code_for(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hhverify: numerical verification of matrix mean and trace "
               "inequality chains"};
  app.set_version_flag("--version", hhv::kVersion);
  app.require_subcommand(1);

  // check ---------------------------------------------------------------
  auto* check = app.add_subcommand("check", "run one check instance");
  std::string check_id, check_file, check_replay;
  double alpha = 0.0, rexp = 0.0, nu = 0.0;
  std::uint64_t check_seed = 0;
  int check_dim = 4;
  check->add_option("check-id", check_id, "registered check identifier");
  check->add_option("--file", check_file, "operand bag JSON");
  check->add_option("--replay", check_replay, "witness dossier to replay");
  auto* alpha_opt = check->add_option("--alpha", alpha, "alpha parameter");
  auto* r_opt = check->add_option("--r", rexp, "r exponent");
  auto* nu_opt = check->add_option("--nu", nu, "nu weight");
  check->add_option("--seed", check_seed, "seed for a generated instance");
  check->add_option("--dim", check_dim, "dimension for a generated instance");

  // campaign --------------------------------------------------------------
  auto* campaign = app.add_subcommand("campaign", "run a seeded campaign");
  std::string cfg_path, out_path, csv_path, dims_str, checks_str, witness_dir;
  std::uint64_t seed = 0;
  int trials = 0, workers = -1;
  campaign->add_option("--config", cfg_path, "campaign config JSON");
  auto* seed_opt = campaign->add_option("--seed", seed, "campaign seed");
  campaign->add_option("--dims", dims_str, "comma-separated dimensions");
  auto* trials_opt = campaign->add_option("--trials", trials, "trials per check");
  campaign->add_option("--out", out_path, "write report JSON here");
  campaign->add_option("--csv", csv_path, "write per-trial CSV here");
  campaign->add_option("--checks", checks_str, "comma-separated check ids");
  campaign->add_option("--witness-dir", witness_dir, "witness output directory");
  auto* workers_opt = campaign->add_option("--workers", workers, "worker threads");

  // oracle ----------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "closed-form diagnostic values");
  auto* logmean = oracle->add_subcommand("logmean", "scalar mean chain");
  double la = 0.0, lb = 0.0;
  logmean->add_option("--a", la, "first argument")->required();
  logmean->add_option("--b", lb, "second argument")->required();
  auto* eig_cmd = oracle->add_subcommand("eig", "spectral decomposition");
  std::string eig_file;
  eig_cmd->add_option("--file", eig_file, "matrix JSON")->required();
  oracle->require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) {
      return run_check(check_id, check_file, check_replay,
                       alpha_opt->count() ? &alpha : nullptr,
                       r_opt->count() ? &rexp : nullptr,
                       nu_opt->count() ? &nu : nullptr, check_seed, check_dim);
    }
    if (campaign->parsed()) {
      hhv::CampaignConfig cfg;
      if (!cfg_path.empty()) cfg = hhv::config_from_json(read_json_file(cfg_path));
      if (seed_opt->count()) cfg.seed = seed;
      if (!dims_str.empty()) cfg.dims = parse_dims(dims_str);
      if (trials_opt->count()) cfg.trials_per_check = trials;
      if (!checks_str.empty()) cfg.checks = parse_list(checks_str);
      if (!witness_dir.empty()) cfg.witness_dir = witness_dir;
      if (workers_opt->count()) cfg.workers = workers;
      return run_campaign_cmd(cfg, out_path, csv_path);
    }
    if (logmean->parsed()) {
      const double g = std::sqrt(la * lb);
      json j{{"a", la},
             {"b", lb},
             {"min", std::min(la, lb)},
             {"geometric_mean", g},
             {"log_mean", hhv::log_mean(la, lb)},
             {"arithmetic_mean", 0.5 * (la + lb)},
             {"max", std::max(la, lb)}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (eig_cmd->parsed()) {
      const auto h = hhv::hermitian_from_json(read_json_file(eig_file));
      const auto d = hhv::eig_hermitian(h);
      json j{{"lambda", d.lambda}, {"u", hhv::matrix_to_json(d.u)}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const hhv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const hhv::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
