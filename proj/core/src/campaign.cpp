#include "hhverify/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <thread>

#include "hhverify/calculus.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/generators.hpp"
#include "hhverify/loewner.hpp"
#include "hhverify/means.hpp"
#include "hhverify/norms.hpp"
#include "hhverify/operator_chains.hpp"
#include "hhverify/scalar_chains.hpp"
#include "hhverify/scalar_functions.hpp"
#include "hhverify/trace_checks.hpp"

namespace hhv {

namespace {

constexpr double kTwoRouteGate = 1e-10;
constexpr double kClosedFormGate = 1e-11;
constexpr double kBlockRouteGate = 1e-11;

json base_bag(const std::string& id, int dim) {
  return json{{"check", id},
              {"dim", dim},
              {"params", json::object()},
              {"operands", json::object()}};
}

std::string pick_function(CounterRng& rng, const CampaignConfig& cfg) {
  return cfg.function_set[rng.next_u64() % cfg.function_set.size()];
}

std::pair<std::string, std::string> pick_function_pair(CounterRng& rng,
                                                       const CampaignConfig& cfg) {
  const size_t n = cfg.function_set.size();
  const size_t i = rng.next_u64() % n;
  const size_t j = n > 1 ? (i + 1 + rng.next_u64() % (n - 1)) % n : i;
  return {cfg.function_set[i], cfg.function_set[j]};
}

std::pair<double, double> pick_interval(CounterRng& rng, const CampaignConfig& cfg) {
  double a = rng.log_uniform(cfg.spectra_lo, cfg.spectra_hi);
  double b = rng.log_uniform(cfg.spectra_lo, cfg.spectra_hi);
  if (a > b) std::swap(a, b);
  if (a == b) b = a * (1.0 + 1e-9);
  return {a, b};
}

double pick_from(CounterRng& rng, std::initializer_list<double> vals) {
  const size_t i = rng.next_u64() % vals.size();
  return *(vals.begin() + static_cast<std::ptrdiff_t>(i));
}

TrialOutcome outcome_from_verdict(Verdict v) {
  TrialOutcome o;
  double scale = 1.0;
  const auto it = v.details.find("scale");
  if (it != v.details.end()) scale = std::max(1.0, it->second);
  o.norm_margin = v.margin / scale;
  o.verdict = std::move(v);
  return o;
}

TrialOutcome outcome_from_operator_chain(const OperatorChainReport& r,
                                         bool expect_scalar_route,
                                         bool gate_closed_form) {
  TrialOutcome o = outcome_from_verdict(r.overall);
  for (const auto& [k, v] : r.extras) o.verdict.details.emplace(k, v);
  if (expect_scalar_route) {
    const auto it = r.extras.find("two_route_max_rel_dev");
    if (it == r.extras.end() || it->second > kTwoRouteGate)
      o.cause = "two_route_divergence";
    else if (!r.scalar_route || r.scalar_route->status != r.overall.status)
      o.cause = "two_route_verdict_mismatch";
  }
  if (gate_closed_form) {
    const auto it = r.extras.find("closed_form_rel_dev");
    if (it != r.extras.end() && it->second > kClosedFormGate)
      o.cause = "closed_form_divergence";
  }
  return o;
}

json pair_bag(const std::string& id, CounterRng& rng, const CampaignConfig& cfg,
              int dim) {
  json bag = base_bag(id, dim);
  bag["operands"]["pair"] =
      pair_to_json(gen_commuting_pair(rng, dim, cfg.spectra_lo, cfg.spectra_hi));
  return bag;
}

HermitianMatrix psd_sqrt_of_product(const HermitianMatrix& a,
                                    const HermitianMatrix& b) {
  const HermitianMatrix ab = hermitian_part(mul(a.mat(), b.mat()));
  return apply_spectral_map(eig_hermitian(ab), [](double x) {
    return std::sqrt(std::max(x, 0.0));
  });
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> reg;

  // --- scalar chains ---------------------------------------------------
  reg.push_back(CheckDef{
      "scalar_geo_convex", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int) {
        json bag = base_bag("scalar_geo_convex", 1);
        const auto [a, b] = pick_interval(rng, cfg);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"a", a}, {"b", b},
                         {"grid", 33}};
        return bag;
      },
      [](const json& bag, const CampaignConfig&) {
        const auto& p = bag.at("params");
        return outcome_from_verdict(check_geo_convex(
            parse_function(p.at("f").get<std::string>()), p.at("a").get<double>(),
            p.at("b").get<double>(), p.at("grid").get<int>()));
      }});

  reg.push_back(CheckDef{
      "scalar_hh_chain_basic", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int) {
        json bag = base_bag("scalar_hh_chain_basic", 1);
        const auto [a, b] = pick_interval(rng, cfg);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"a", a}, {"b", b}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto& p = bag.at("params");
        return outcome_from_verdict(
            hh_chain_basic(parse_function(p.at("f").get<std::string>()),
                           p.at("a").get<double>(), p.at("b").get<double>(),
                           cfg.quadrature, cfg.tolerance)
                .verdict);
      }});

  reg.push_back(CheckDef{
      "scalar_hh_refinement", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int) {
        json bag = base_bag("scalar_hh_refinement", 1);
        const auto [a, b] = pick_interval(rng, cfg);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"a", a}, {"b", b},
                         {"lambda", rng.next_double()}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto& p = bag.at("params");
        return outcome_from_verdict(
            hh_refinement(parse_function(p.at("f").get<std::string>()),
                          p.at("a").get<double>(), p.at("b").get<double>(),
                          p.at("lambda").get<double>(), cfg.quadrature,
                          cfg.tolerance)
                .verdict);
      }});

  reg.push_back(CheckDef{
      "scalar_hh_quarter_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int) {
        json bag = base_bag("scalar_hh_quarter_chain", 1);
        const auto [a, b] = pick_interval(rng, cfg);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"a", a}, {"b", b}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto& p = bag.at("params");
        return outcome_from_verdict(
            hh_quarter_chain(parse_function(p.at("f").get<std::string>()),
                             p.at("a").get<double>(), p.at("b").get<double>(),
                             cfg.quadrature, cfg.tolerance)
                .verdict);
      }});

  reg.push_back(CheckDef{
      "scalar_log_exp_transform", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int) {
        json bag = base_bag("scalar_log_exp_transform", 1);
        const auto [a, b] = pick_interval(rng, cfg);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"a", a}, {"b", b},
                         {"grid", 33}};
        return bag;
      },
      [](const json& bag, const CampaignConfig&) {
        const auto& p = bag.at("params");
        const auto f = parse_function(p.at("f").get<std::string>());
        const double a = p.at("a").get<double>();
        const double b = p.at("b").get<double>();
        const int grid = p.at("grid").get<int>();

        const auto roundtrip = exp_log_transform(log_exp_transform(f));
        double dev = 0.0, fscale = 0.0;
        for (int i = 0; i < grid; ++i) {
          const double t = a + (b - a) * i / (grid - 1);
          const double ft = f.eval(t);
          dev = std::max(dev, std::abs(roundtrip.eval(t) - ft) /
                                  std::max(std::abs(ft), 1e-30));
          fscale = std::max(fscale, std::abs(ft));
        }
        const double mid_margin = log_exp_midpoint_convexity_margin(f, a, b, grid);
        // Midpoint margins live on the log scale of f.
        Verdict v = classify_margin(mid_margin, std::log(std::max(fscale, 2.0)),
                                    LoewnerTolerance{1e-10, 1e-12});
        v.details["roundtrip_rel_dev"] = dev;
        if (dev > 1e-12) v.status = Status::Violated;
        return outcome_from_verdict(std::move(v));
      }});

  // --- operator chains --------------------------------------------------
  reg.push_back(CheckDef{
      "operator_geo_convex", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("operator_geo_convex", rng, cfg, dim);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"grid", 9}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto& p = bag.at("params");
        Verdict v = check_operator_geo_convex(
            parse_function(p.at("f").get<std::string>()),
            pair_from_json(bag.at("operands").at("pair")), p.at("grid").get<int>(),
            cfg.tolerance);
        TrialOutcome o = outcome_from_verdict(std::move(v));
        if (o.verdict.details.at("two_route_max_rel_dev") > kTwoRouteGate)
          o.cause = "two_route_divergence";
        return o;
      }});

  reg.push_back(CheckDef{
      "operator_hh_log_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("operator_hh_log_chain", rng, cfg, dim);
        bag["params"] = {{"f", pick_function(rng, cfg)}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r = hh_operator_log_chain(
            parse_function(bag.at("params").at("f").get<std::string>()),
            pair_from_json(bag.at("operands").at("pair")), cfg.quadrature,
            cfg.tolerance);
        return outcome_from_operator_chain(r, true, false);
      }});

  reg.push_back(CheckDef{
      "operator_hh_unlogged_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("operator_hh_unlogged_chain", rng, cfg, dim);
        bag["params"] = {{"f", pick_function(rng, cfg)}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r = hh_operator_unlogged_chain(
            parse_function(bag.at("params").at("f").get<std::string>()),
            pair_from_json(bag.at("operands").at("pair")), cfg.quadrature,
            cfg.tolerance);
        return outcome_from_operator_chain(r, true, false);
      }});

  reg.push_back(CheckDef{
      "operator_exp_special_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        return pair_bag("operator_exp_special_chain", rng, cfg, dim);
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r =
            exp_special_chain(pair_from_json(bag.at("operands").at("pair")),
                              cfg.quadrature, cfg.tolerance);
        return outcome_from_operator_chain(r, true, true);
      }});

  reg.push_back(CheckDef{
      "operator_convex_chain_square", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("operator_convex_chain_square", dim);
        bag["params"] = {{"f", "x^2"}};
        bag["operands"]["a"] = hermitian_to_json(gen_hermitian(rng, dim));
        bag["operands"]["b"] = hermitian_to_json(gen_hermitian(rng, dim));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r = operator_convex_hh_chain(
            parse_function(bag.at("params").at("f").get<std::string>()),
            hermitian_from_json(bag.at("operands").at("a")),
            hermitian_from_json(bag.at("operands").at("b")), cfg.quadrature,
            cfg.tolerance);
        return outcome_from_operator_chain(r, false, true);
      }});

  reg.push_back(CheckDef{
      "operator_convex_chain_inverse", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = base_bag("operator_convex_chain_inverse", dim);
        bag["params"] = {{"f", "x^-1"}};
        bag["operands"]["a"] =
            hermitian_to_json(gen_psd(rng, dim, cfg.spectra_lo, cfg.spectra_hi));
        bag["operands"]["b"] =
            hermitian_to_json(gen_psd(rng, dim, cfg.spectra_lo, cfg.spectra_hi));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r = operator_convex_hh_chain(
            parse_function(bag.at("params").at("f").get<std::string>()),
            hermitian_from_json(bag.at("operands").at("a")),
            hermitian_from_json(bag.at("operands").at("b")), cfg.quadrature,
            cfg.tolerance);
        return outcome_from_operator_chain(r, false, false);
      }});

  reg.push_back(CheckDef{
      "operator_agm", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = base_bag("operator_agm", dim);
        bag["params"]["nu_list"] = std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0};
        bag["operands"]["a"] =
            hermitian_to_json(gen_psd(rng, dim, cfg.spectra_lo, cfg.spectra_hi));
        bag["operands"]["b"] =
            hermitian_to_json(gen_psd(rng, dim, cfg.spectra_lo, cfg.spectra_hi));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto a = hermitian_from_json(bag.at("operands").at("a"));
        const auto b = hermitian_from_json(bag.at("operands").at("b"));
        Verdict acc = fold_identity();
        for (double nu : bag.at("params").at("nu_list").get<std::vector<double>>()) {
          Verdict v = agm_inequality_check(a, b, nu, cfg.tolerance);
          if (nu == 0.0) acc.details["margin_nu0"] = v.margin;
          if (nu == 1.0) acc.details["margin_nu1"] = v.margin;
          fold_verdict(acc, v);
        }
        return outcome_from_verdict(std::move(acc));
      }});

  // --- closure properties -----------------------------------------------
  const auto closure_eval = [](ClosureKind kind) {
    return [kind](const json& bag, const CampaignConfig& cfg) {
      const auto& p = bag.at("params");
      const auto f = parse_function(p.at("f").get<std::string>());
      const auto g = parse_function(p.value("g", p.at("f").get<std::string>()));
      const double m = p.value("m", 2.0);
      Verdict v = closure_check(kind, f, g,
                                pair_from_json(bag.at("operands").at("pair")),
                                p.value("grid", 9), cfg.tolerance, m);
      return outcome_from_verdict(std::move(v));
    };
  };

  reg.push_back(CheckDef{
      "closure_product", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_product", rng, cfg, dim);
        const auto [f, g] = pick_function_pair(rng, cfg);
        bag["params"] = {{"f", f}, {"g", g}, {"grid", 9}};
        return bag;
      },
      closure_eval(ClosureKind::Product)});

  reg.push_back(CheckDef{
      "closure_t_times_f", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_t_times_f", rng, cfg, dim);
        bag["params"] = {{"f", pick_function(rng, cfg)}, {"grid", 9}};
        return bag;
      },
      closure_eval(ClosureKind::TTimesF)});

  reg.push_back(CheckDef{
      "closure_scalar_multiple", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_scalar_multiple", rng, cfg, dim);
        bag["params"] = {{"f", pick_function(rng, cfg)},
                         {"m", rng.log_uniform(0.5, 4.0)},
                         {"grid", 9}};
        return bag;
      },
      closure_eval(ClosureKind::ScalarMultiple)});

  reg.push_back(CheckDef{
      "closure_norm_mcintosh", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_norm_mcintosh", rng, cfg, dim);
        bag["params"] = {{"f", "exp"}, {"grid", 9}};
        return bag;
      },
      closure_eval(ClosureKind::NormMcintosh)});

  // The printed sum-closure bound is ambiguous; both readings run as
  // exploratory checks whose hold rates are reported but not asserted.
  reg.push_back(CheckDef{
      "closure_sum_multiplicative", true, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_sum_multiplicative", rng, cfg, dim);
        const auto [f, g] = pick_function_pair(rng, cfg);
        bag["params"] = {{"f", f}, {"g", g}, {"grid", 9}};
        return bag;
      },
      closure_eval(ClosureKind::Sum)});

  reg.push_back(CheckDef{
      "closure_sum_shak_literal", true, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("closure_sum_shak_literal", rng, cfg, dim);
        const auto [f, g] = pick_function_pair(rng, cfg);
        bag["params"] = {{"f", f}, {"g", g}, {"grid", 9}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto& p = bag.at("params");
        Verdict both = closure_check(
            ClosureKind::Sum, parse_function(p.at("f").get<std::string>()),
            parse_function(p.at("g").get<std::string>()),
            pair_from_json(bag.at("operands").at("pair")), p.value("grid", 9),
            cfg.tolerance);
        Verdict v = classify_margin(both.details.at("margin_shak_literal"),
                                    both.details.at("scale_shak_literal"),
                                    cfg.tolerance);
        v.details["margin_multiplicative"] = both.details.at("margin_multiplicative");
        return outcome_from_verdict(std::move(v));
      }});

  // --- trace inequalities -----------------------------------------------
  reg.push_back(CheckDef{
      "trace_axioms", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_axioms", dim);
        bag["operands"]["a"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["t"] = matrix_to_json(gen_complex(rng, dim));
        return bag;
      },
      [](const json& bag, const CampaignConfig&) {
        return outcome_from_verdict(
            trace_axioms_check(matrix_from_json(bag.at("operands").at("a")),
                               matrix_from_json(bag.at("operands").at("t"))));
      }});

  reg.push_back(CheckDef{
      "trace_psd_product_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        return pair_bag("trace_psd_product_chain", rng, cfg, dim);
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto p = pair_from_json(bag.at("operands").at("pair"));
        return outcome_from_verdict(
            psd_trace_product_chain(p.matrix_a(), p.matrix_b(), cfg.tolerance)
                .verdict);
      }});

  reg.push_back(CheckDef{
      "trace_geo_convex", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        json bag = pair_bag("trace_geo_convex", rng, cfg, dim);
        bag["params"] = {{"grid", 9}};
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        return outcome_from_verdict(trace_geo_convex_check(
            pair_from_json(bag.at("operands").at("pair")),
            bag.at("params").at("grid").get<int>(), cfg.tolerance));
      }});

  reg.push_back(CheckDef{
      "trace_log_hh_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        return pair_bag("trace_log_hh_chain", rng, cfg, dim);
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto r =
            trace_log_hh_chain(pair_from_json(bag.at("operands").at("pair")),
                               cfg.quadrature, cfg.tolerance);
        return outcome_from_verdict(r.overall);
      }});

  reg.push_back(CheckDef{
      "trace_bhatia_davis", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_bhatia_davis", dim);
        bag["params"] = {{"r", pick_from(rng, {0.5, 1.0, 2.0})}};
        bag["operands"]["a"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["x"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["b"] = matrix_to_json(gen_complex(rng, dim));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        return outcome_from_verdict(bhatia_davis_check(
            matrix_from_json(bag.at("operands").at("a")),
            matrix_from_json(bag.at("operands").at("x")),
            matrix_from_json(bag.at("operands").at("b")),
            bag.at("params").at("r").get<double>(), cfg.tolerance));
      }});

  const auto cs_eval = [](const json& bag, const CampaignConfig& cfg) {
    return outcome_from_verdict(trace_cauchy_schwarz(
        matrix_from_json(bag.at("operands").at("a")),
        matrix_from_json(bag.at("operands").at("b")),
        matrix_from_json(bag.at("operands").at("x")), cfg.tolerance));
  };

  reg.push_back(CheckDef{
      "trace_cauchy_schwarz", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_cauchy_schwarz", dim);
        bag["operands"]["a"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["b"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["x"] = matrix_to_json(gen_complex(rng, dim));
        return bag;
      },
      cs_eval});

  reg.push_back(CheckDef{
      "trace_cauchy_schwarz_identity", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_cauchy_schwarz_identity", dim);
        bag["operands"]["a"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["b"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["x"] = matrix_to_json(ComplexMatrix::identity(dim));
        return bag;
      },
      cs_eval});

  reg.push_back(CheckDef{
      "trace_dragomir_alpha", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_dragomir_alpha", dim);
        bag["params"] = {{"alpha", pick_from(rng, {-1.0, 0.3, 2.0})}};
        bag["operands"]["a"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["b"] = matrix_to_json(gen_complex(rng, dim));
        bag["operands"]["x"] = matrix_to_json(gen_complex(rng, dim));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        return outcome_from_verdict(dragomir_alpha_check(
            matrix_from_json(bag.at("operands").at("a")),
            matrix_from_json(bag.at("operands").at("b")),
            matrix_from_json(bag.at("operands").at("x")),
            bag.at("params").at("alpha").get<double>(), cfg.tolerance));
      }});

  reg.push_back(CheckDef{
      "trace_dragomir_corollary", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        json bag = base_bag("trace_dragomir_corollary", dim);
        bag["params"] = {{"alpha", pick_from(rng, {-1.0, 0.3, 2.0})}};
        bag["operands"]["x"] = matrix_to_json(gen_complex(rng, dim));
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        return outcome_from_verdict(dragomir_trace_corollary(
            matrix_from_json(bag.at("operands").at("x")),
            bag.at("params").at("alpha").get<double>(), cfg.tolerance));
      }});

  reg.push_back(CheckDef{
      "trace_dannan_block", false, true,
      [](CounterRng& rng, const CampaignConfig&, int dim) {
        const int d = std::min(dim, 6);
        const int m = 1 + static_cast<int>(rng.next_u64() % 4);
        json bag = base_bag("trace_dannan_block", d);
        json s = json::array(), t = json::array();
        for (int i = 0; i < m; ++i) {
          s.push_back(matrix_to_json(gen_complex(rng, d)));
          t.push_back(matrix_to_json(gen_complex(rng, d)));
        }
        bag["operands"]["s_list"] = std::move(s);
        bag["operands"]["t_list"] = std::move(t);
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        std::vector<ComplexMatrix> s, t;
        for (const auto& j : bag.at("operands").at("s_list"))
          s.push_back(matrix_from_json(j));
        for (const auto& j : bag.at("operands").at("t_list"))
          t.push_back(matrix_from_json(j));
        TrialOutcome o = outcome_from_verdict(dannan_block_check(s, t, cfg.tolerance));
        if (o.verdict.details.at("block_route_lhs_rel_dev") > kBlockRouteGate ||
            o.verdict.details.at("block_route_rhs_rel_dev") > kBlockRouteGate)
          o.cause = "block_route_divergence";
        return o;
      }});

  reg.push_back(CheckDef{
      "trace_dannan_positive", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        const int d = std::min(dim, 6);
        const int m = 1 + static_cast<int>(rng.next_u64() % 4);
        json bag = base_bag("trace_dannan_positive", d);
        json s = json::array(), t = json::array();
        for (int i = 0; i < m; ++i) {
          s.push_back(hermitian_to_json(gen_psd(rng, d, cfg.spectra_lo, cfg.spectra_hi)));
          t.push_back(hermitian_to_json(gen_psd(rng, d, cfg.spectra_lo, cfg.spectra_hi)));
        }
        bag["operands"]["s_list"] = std::move(s);
        bag["operands"]["t_list"] = std::move(t);
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        std::vector<HermitianMatrix> s, t;
        for (const auto& j : bag.at("operands").at("s_list"))
          s.push_back(hermitian_from_json(j));
        for (const auto& j : bag.at("operands").at("t_list"))
          t.push_back(hermitian_from_json(j));
        return outcome_from_verdict(dannan_positive_check(s, t, cfg.tolerance));
      }});

  reg.push_back(CheckDef{
      "trace_dannan_pd_chain", false, true,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        const int d = std::min(dim, 6);
        const int m = 1 + static_cast<int>(rng.next_u64() % 4);
        // Three quarters of the instances satisfy the S_i T_i >= 0
        // hypothesis by construction (per-index commuting pairs); the rest
        // exercise the Skipped path.
        const bool commuting = rng.next_double() < 0.75;
        json bag = base_bag("trace_dannan_pd_chain", d);
        json s = json::array(), t = json::array();
        for (int i = 0; i < m; ++i) {
          if (commuting) {
            const auto p = gen_commuting_pair(rng, d, cfg.spectra_lo, cfg.spectra_hi);
            s.push_back(hermitian_to_json(p.matrix_a()));
            t.push_back(hermitian_to_json(p.matrix_b()));
          } else {
            s.push_back(hermitian_to_json(gen_psd(rng, d, cfg.spectra_lo, cfg.spectra_hi)));
            t.push_back(hermitian_to_json(gen_psd(rng, d, cfg.spectra_lo, cfg.spectra_hi)));
          }
        }
        bag["operands"]["s_list"] = std::move(s);
        bag["operands"]["t_list"] = std::move(t);
        return bag;
      },
      [](const json& bag, const CampaignConfig& cfg) {
        std::vector<HermitianMatrix> s, t;
        for (const auto& j : bag.at("operands").at("s_list"))
          s.push_back(hermitian_from_json(j));
        for (const auto& j : bag.at("operands").at("t_list"))
          t.push_back(hermitian_from_json(j));
        return outcome_from_verdict(dannan_pd_chain_check(s, t, cfg.tolerance));
      }});

  // Internal test hook: the deliberately inverted mean inequality
  // (A+B)/2 <= sqrt(AB), used to exercise witness emission and replay.
  reg.push_back(CheckDef{
      "hook_inverted_amgm", false, false,
      [](CounterRng& rng, const CampaignConfig& cfg, int dim) {
        return pair_bag("hook_inverted_amgm", rng, cfg, dim);
      },
      [](const json& bag, const CampaignConfig& cfg) {
        const auto p = pair_from_json(bag.at("operands").at("pair"));
        const auto a = p.matrix_a();
        const auto b = p.matrix_b();
        return outcome_from_verdict(loewner_leq(
            scale(add(a, b), 0.5), psd_sqrt_of_product(a, b), cfg.tolerance));
      }});

  return reg;
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> reg = build_registry();
  return reg;
}

const CheckDef& find_check(const std::string& id) {
  for (const auto& def : check_registry())
    if (def.id == id) return def;
  throw ConfigError("unknown check id '" + id + "'");
}

CampaignConfig normalize_config(CampaignConfig cfg) {
  if (cfg.function_set.empty()) cfg.function_set = default_function_set();
  if (cfg.checks.empty()) {
    for (const auto& def : check_registry())
      if (def.in_default) cfg.checks.push_back(def.id);
  }
  for (const auto& id : cfg.checks) (void)find_check(id);
  for (const auto& name : cfg.function_set) (void)parse_function(name);
  if (cfg.trials_per_check < 1) throw ConfigError("config: trials_per_check < 1");
  if (cfg.dims.empty()) throw ConfigError("config: dims must not be empty");
  for (int d : cfg.dims)
    if (d < 1 || d > 64) throw ConfigError("config: dims must lie in [1, 64]");
  if (!(cfg.spectra_lo > 0.0) || !(cfg.spectra_hi >= cfg.spectra_lo))
    throw ConfigError("config: need 0 < spectra_lo <= spectra_hi");
  if (!(cfg.tolerance.rel >= 0.0) || !(cfg.tolerance.abs_floor >= 0.0))
    throw ConfigError("config: tolerances must be nonnegative");
  if (cfg.quadrature.panels < 1 || cfg.quadrature.nodes_per_panel < 1 ||
      cfg.quadrature.panels * cfg.quadrature.nodes_per_panel < 4)
    throw ConfigError("config: quadrature needs panels x nodes >= 4");
  if (cfg.workers < 0) throw ConfigError("config: workers < 0");
  return cfg;
}

json config_to_json(const CampaignConfig& cfg) {
  return json{{"seed", cfg.seed},
              {"dims", cfg.dims},
              {"trials_per_check", cfg.trials_per_check},
              {"spectra_range", {cfg.spectra_lo, cfg.spectra_hi}},
              {"function_set", cfg.function_set},
              {"checks", cfg.checks},
              {"tolerance", {{"rel", cfg.tolerance.rel},
                             {"abs_floor", cfg.tolerance.abs_floor}}},
              {"quadrature", {{"panels", cfg.quadrature.panels},
                              {"nodes_per_panel", cfg.quadrature.nodes_per_panel}}},
              {"witness_dir", cfg.witness_dir},
              {"workers", cfg.workers}};
}

CampaignConfig config_from_json(const json& j) {
  CampaignConfig cfg;
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("dims")) cfg.dims = j.at("dims").get<std::vector<int>>();
  if (j.contains("trials_per_check"))
    cfg.trials_per_check = j.at("trials_per_check").get<int>();
  if (j.contains("spectra_range")) {
    const auto r = j.at("spectra_range").get<std::vector<double>>();
    if (r.size() != 2) throw ConfigError("config: spectra_range must be [lo, hi]");
    cfg.spectra_lo = r[0];
    cfg.spectra_hi = r[1];
  }
  if (j.contains("function_set"))
    cfg.function_set = j.at("function_set").get<std::vector<std::string>>();
  if (j.contains("checks"))
    cfg.checks = j.at("checks").get<std::vector<std::string>>();
  if (j.contains("tolerance")) {
    cfg.tolerance.rel = j.at("tolerance").value("rel", cfg.tolerance.rel);
    cfg.tolerance.abs_floor =
        j.at("tolerance").value("abs_floor", cfg.tolerance.abs_floor);
  }
  if (j.contains("quadrature")) {
    cfg.quadrature.panels = j.at("quadrature").value("panels", cfg.quadrature.panels);
    cfg.quadrature.nodes_per_panel =
        j.at("quadrature").value("nodes_per_panel", cfg.quadrature.nodes_per_panel);
  }
  if (j.contains("witness_dir")) cfg.witness_dir = j.at("witness_dir").get<std::string>();
  if (j.contains("workers")) cfg.workers = j.at("workers").get<int>();
  return cfg;
}

json generate_bag(const std::string& check_id, const CampaignConfig& cfg,
                  std::uint64_t seed, std::uint64_t trial, int dim) {
  CounterRng rng = CounterRng::substream(seed, check_id, trial);
  return find_check(check_id).generate(rng, cfg, dim);
}

TrialOutcome evaluate_bag(const json& bag, const CampaignConfig& cfg) {
  if (!bag.is_object() || !bag.contains("check"))
    throw ConfigError("operand bag: missing 'check' field");
  return find_check(bag.at("check").get<std::string>()).evaluate(bag, cfg);
}

namespace {

struct TrialResult {
  TrialRow row;
  std::string cause;
  json witness;  // null unless Violated
};

TrialResult run_one_trial(const CheckDef& def, const CampaignConfig& cfg,
                          std::uint64_t t) {
  TrialResult res;
  res.row.check = def.id;
  res.row.trial = t;
  const int dim = cfg.dims[t % cfg.dims.size()];
  res.row.dim = dim;
  try {
    CounterRng rng = CounterRng::substream(cfg.seed, def.id, t);
    json bag = def.generate(rng, cfg, dim);
    res.row.dim = bag.value("dim", dim);
    TrialOutcome out = def.evaluate(bag, cfg);
    if (!out.cause.empty()) {
      // Partial-failure policy: numerical failures downgrade the trial to
      // Inconclusive with a cause, never abort the campaign.
      out.verdict.status = Status::Inconclusive;
      res.cause = out.cause;
    }
    res.row.status = out.verdict.status;
    res.row.min_margin = out.verdict.margin;
    res.row.norm_margin = out.norm_margin;
    if (out.verdict.status == Status::Violated) {
      res.witness = bag;
      res.witness["schema_version"] = kReportSchemaVersion;
      res.witness["verdict"] = verdict_to_json(out.verdict);
    }
  } catch (const Error& e) {
    res.row.status = Status::Inconclusive;
    res.row.min_margin = 0.0;
    res.row.norm_margin = 0.0;
    res.cause = e.what();
  }
  return res;
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& raw_cfg) {
  const CampaignConfig cfg = normalize_config(raw_cfg);
  const auto t0 = std::chrono::steady_clock::now();

  CampaignReport report;
  report.config = cfg;

  const unsigned hw = std::thread::hardware_concurrency();
  const int workers = cfg.workers > 0 ? cfg.workers : static_cast<int>(hw ? hw : 1);
  bool witness_dir_ready = false;

  for (const auto& id : cfg.checks) {
    const CheckDef& def = find_check(id);
    const std::uint64_t trials = static_cast<std::uint64_t>(cfg.trials_per_check);
    std::vector<TrialResult> results(trials);

    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::uint64_t t = next.fetch_add(1);
        if (t >= trials) break;
        results[t] = run_one_trial(def, cfg, t);
      }
    };
    const int nthreads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), trials));
    if (nthreads <= 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(nthreads));
      for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    CheckSummary sum;
    sum.check = def.id;
    sum.exploratory = def.exploratory;
    std::vector<double> margins;
    std::set<std::string> causes;
    double min_margin = std::numeric_limits<double>::infinity();
    double min_norm = std::numeric_limits<double>::infinity();
    for (std::uint64_t t = 0; t < trials; ++t) {
      const auto& r = results[t];
      ++sum.trials;
      switch (r.row.status) {
        case Status::Holds: ++sum.holds; break;
        case Status::Violated: ++sum.violated; break;
        case Status::Inconclusive: ++sum.inconclusive; break;
        case Status::Skipped: ++sum.skipped; break;
      }
      if (!r.cause.empty()) {
        causes.insert(r.cause);
        ++report.numerical_failures;
      } else if (r.row.status != Status::Skipped) {
        margins.push_back(r.row.min_margin);
        min_margin = std::min(min_margin, r.row.min_margin);
        min_norm = std::min(min_norm, r.row.norm_margin);
      }
      report.rows.push_back(r.row);
      if (!r.witness.is_null()) {
        if (!witness_dir_ready) {
          std::filesystem::create_directories(cfg.witness_dir);
          witness_dir_ready = true;
        }
        const std::string path =
            cfg.witness_dir + "/" + def.id + "_t" + std::to_string(t) + ".json";
        std::ofstream out(path);
        out << r.witness.dump(2) << "\n";
        sum.witness_refs.push_back(path);
      }
    }
    if (margins.empty()) {
      sum.min_margin = 0.0;
      sum.median_margin = 0.0;
      sum.min_norm_margin = 0.0;
    } else {
      std::sort(margins.begin(), margins.end());
      sum.min_margin = min_margin;
      sum.median_margin = margins[(margins.size() - 1) / 2];
      sum.min_norm_margin = min_norm;
    }
    sum.causes.assign(causes.begin(), causes.end());
    if (!def.exploratory) report.asserted_violations += sum.violated;
    report.summaries.push_back(std::move(sum));
  }

  report.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

json report_to_json(const CampaignReport& r, bool strip_timing) {
  json checks = json::array();
  for (const auto& s : r.summaries) {
    checks.push_back(json{{"check", s.check},
                          {"exploratory", s.exploratory},
                          {"trials", s.trials},
                          {"holds", s.holds},
                          {"violated", s.violated},
                          {"inconclusive", s.inconclusive},
                          {"skipped", s.skipped},
                          {"min_margin", s.min_margin},
                          {"median_margin", s.median_margin},
                          {"min_norm_margin", s.min_norm_margin},
                          {"witnesses", s.witness_refs},
                          {"causes", s.causes}});
  }
  json j{{"schema_version", r.schema_version},
         {"version", r.version},
         {"config", config_to_json(r.config)},
         {"totals", {{"violated_asserted", r.asserted_violations},
                     {"numerical_failures", r.numerical_failures}}},
         {"checks", std::move(checks)}};
  if (!strip_timing) j["duration_seconds"] = r.duration_seconds;
  return j;
}

void write_report_csv(const CampaignReport& r, std::ostream& out) {
  out << "check,dim,trial,min_margin,norm_margin,verdict\n";
  out.precision(17);
  for (const auto& row : r.rows)
    out << row.check << "," << row.dim << "," << row.trial << ","
        << row.min_margin << "," << row.norm_margin << ","
        << to_string(row.status) << "\n";
}

int exit_code_for(const CampaignReport& r) {
  if (r.asserted_violations > 0) return 1;
  if (r.numerical_failures > 0) return 3;
  return 0;
}

}  // namespace hhv
