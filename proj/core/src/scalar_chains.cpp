#include "hhverify/scalar_chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hhverify/errors.hpp"
#include "hhverify/means.hpp"

namespace hhv {

namespace {

void require_interval_in_domain(const ScalarFunctionSpec& f, double a, double b) {
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  if (!(lo > 0.0)) throw DomainViolation("chain endpoints must be > 0");
  if (!f.domain.contains(lo) || !f.domain.contains(hi))
    throw DomainViolation("interval [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "] outside domain of " + f.name);
}

double geo_point(double a, double b, double l) {
  return std::pow(a, l) * std::pow(b, 1.0 - l);
}

double eval_checked(const ScalarFunctionSpec& f, double x) {
  const double y = f.eval(x);
  if (!std::isfinite(y))
    throw QuadratureFailure("integrand of " + f.name + " not finite at " +
                            std::to_string(x));
  return y;
}

}  // namespace

Verdict check_geo_convex(const ScalarFunctionSpec& f, double a, double b,
                         int grid) {
  if (grid < 3) throw ConfigError("check_geo_convex: grid must be >= 3");
  require_interval_in_domain(f, a, b);
  const double fa = f.eval(a);
  const double fb = f.eval(b);
  if (!(fa > 0.0) || !(fb > 0.0))
    throw DomainViolation("check_geo_convex: f must be positive at the endpoints");

  double min_margin = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double l = static_cast<double>(k) / (grid - 1);
    const double lhs = f.eval(geo_point(a, b, l));
    const double rhs = std::pow(fa, l) * std::pow(fb, 1.0 - l);
    min_margin = std::min(min_margin, rhs - lhs);
    scale = std::max({scale, std::abs(lhs), std::abs(rhs)});
  }
  Verdict v = classify_margin(min_margin, scale, LoewnerTolerance{1e-10, 1e-12});
  v.details["grid"] = grid;
  return v;
}

ChainReport hh_chain_basic(const ScalarFunctionSpec& f, double a, double b,
                           const QuadratureSpec& q, const LoewnerTolerance& tol) {
  if (!(0.0 < a && a < b)) throw DomainViolation("hh_chain_basic: need 0 < a < b");
  require_interval_in_domain(f, a, b);

  const double fa = f.eval(a);
  const double fb = f.eval(b);
  const double left = eval_checked(f, std::sqrt(a * b));
  const double mid_pairs = integrate_scalar(
      [&](double l) {
        return std::sqrt(eval_checked(f, geo_point(a, b, l)) *
                         eval_checked(f, geo_point(a, b, 1.0 - l)));
      },
      q);
  const double mid_plain = integrate_scalar(
      [&](double l) { return eval_checked(f, geo_point(a, b, l)); }, q);
  const double lmean = log_mean(fa, fb);
  const double arith = 0.5 * (fa + fb);

  return make_chain_report(
      {"f(sqrt(ab))", "int sqrt(f(t)f(ab/t))", "int f(t)", "L(f(a),f(b))",
       "(f(a)+f(b))/2"},
      {left, mid_pairs, mid_plain, lmean, arith}, tol);
}

double hh_refinement_integrated_middle(const ScalarFunctionSpec& f, double a,
                                       double b, const QuadratureSpec& q) {
  return integrate_scalar(
      [&](double l) {
        return std::sqrt(eval_checked(f, geo_point(a, b, l)) *
                         eval_checked(f, geo_point(a, b, 1.0 - l)));
      },
      q);
}

ChainReport hh_refinement(const ScalarFunctionSpec& f, double a, double b,
                          double lambda, const QuadratureSpec& q,
                          const LoewnerTolerance& tol) {
  if (!(0.0 < a && a < b)) throw DomainViolation("hh_refinement: need 0 < a < b");
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw BadWeight("hh_refinement: lambda outside [0, 1]");
  require_interval_in_domain(f, a, b);

  const double left = eval_checked(f, std::sqrt(a * b));
  const double mid = std::sqrt(eval_checked(f, geo_point(a, b, lambda)) *
                               eval_checked(f, geo_point(a, b, 1.0 - lambda)));
  const double right = std::sqrt(f.eval(a) * f.eval(b));

  ChainReport r = make_chain_report(
      {"f(sqrt(ab))", "sqrt(f(a^l b^(1-l)) f(a^(1-l) b^l))", "sqrt(f(a)f(b))"},
      {left, mid, right}, tol);

  const double mid_int = hh_refinement_integrated_middle(f, a, b, q);
  r.extras["middle_integrated"] = mid_int;
  const ChainReport integrated = make_chain_report(
      {"f(sqrt(ab))", "int middle", "sqrt(f(a)f(b))"}, {left, mid_int, right},
      tol);
  fold_verdict(r.verdict, integrated.verdict);
  return r;
}

ChainReport hh_quarter_chain(const ScalarFunctionSpec& f, double a, double b,
                             const QuadratureSpec& q, const LoewnerTolerance& tol) {
  if (!(0.0 < a && a < b)) throw DomainViolation("hh_quarter_chain: need 0 < a < b");
  require_interval_in_domain(f, a, b);

  const double fa = f.eval(a);
  const double fb = f.eval(b);
  const double f_mid = eval_checked(f, std::sqrt(a * b));
  if (!(fa > 0.0) || !(fb > 0.0) || !(f_mid > 0.0))
    throw DomainViolation("hh_quarter_chain: f must be positive on [a, b]");

  const double quarter = std::sqrt(eval_checked(f, geo_point(a, b, 0.75)) *
                                   eval_checked(f, geo_point(a, b, 0.25)));
  const double log_integral = integrate_scalar(
      [&](double l) {
        const double y = eval_checked(f, geo_point(a, b, l));
        if (!(y > 0.0))
          throw DomainViolation("hh_quarter_chain: f not positive inside [a, b]");
        return std::log(y);
      },
      q);
  const double geo_integral = std::exp(log_integral);
  const double mixed = std::sqrt(f_mid) * std::pow(fa, 0.25) * std::pow(fb, 0.25);
  const double right = std::sqrt(fa * fb);

  return make_chain_report(
      {"f(sqrt(ab))", "sqrt(f(a^3/4 b^1/4) f(a^1/4 b^3/4))",
       "exp(int log f)", "sqrt(f(sqrt(ab))) f(a)^1/4 f(b)^1/4",
       "sqrt(f(a)f(b))"},
      {f_mid, quarter, geo_integral, mixed, right}, tol);
}

double log_exp_midpoint_convexity_margin(const ScalarFunctionSpec& f, double a,
                                         double b, int grid) {
  if (grid < 3) throw ConfigError("log_exp_midpoint_convexity_margin: grid >= 3");
  require_interval_in_domain(f, a, b);
  const ScalarFunctionSpec F = log_exp_transform(f);
  const double lo = std::log(std::min(a, b));
  const double hi = std::log(std::max(a, b));
  double min_margin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    for (int j = i; j < grid; ++j) {
      const double x = lo + (hi - lo) * i / (grid - 1);
      const double y = lo + (hi - lo) * j / (grid - 1);
      min_margin = std::min(
          min_margin, F.eval(x) + F.eval(y) - 2.0 * F.eval(0.5 * (x + y)));
    }
  }
  return min_margin;
}

}  // namespace hhv
