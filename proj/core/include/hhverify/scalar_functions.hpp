#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace hhv {

/// Interval with open/closed endpoints; +-infinity endpoints allowed.
struct Interval {
  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  bool lo_open = true;
  bool hi_open = true;

  bool contains(double x) const {
    if (lo_open ? !(x > lo) : !(x >= lo)) return false;
    if (hi_open ? !(x < hi) : !(x <= hi)) return false;
    return true;
  }
};

/// A named scalar function with its domain and convexity flags.
/// The geometrically_convex flag asserts f(a^l b^(1-l)) <= f(a)^l f(b)^(1-l)
/// on the positive part of the domain (where f maps into R+).
struct ScalarFunctionSpec {
  std::string name;
  std::function<double(double)> eval;
  Interval domain;
  bool geometrically_convex = false;
  bool operator_convex = false;
  bool monotone = false;

  double operator()(double x) const { return eval(x); }
};

ScalarFunctionSpec make_exp();
ScalarFunctionSpec make_cosh();
ScalarFunctionSpec make_log();
ScalarFunctionSpec make_sqrt();
ScalarFunctionSpec make_identity();

/// x^p. Built-in range restricted to p in [-2, 3]; nonnegative integer p
/// gets the whole real line as domain, any other p gets (0, inf).
/// Power functions are geometrically affine; p = 2 and p = -1 carry the
/// operator-convex flag used by the operator convex chain.
ScalarFunctionSpec make_power(double p);

/// Polynomial with nonnegative coefficients (degree <= 6), c[k] x^k.
ScalarFunctionSpec make_polynomial(const std::vector<double>& coeffs);

/// Parses a function name: "exp", "cosh", "log", "sqrt", "x",
/// "x^<p>" (real p in [-2,3]), "poly:c0,c1,..." or a sum of monomials
/// such as "x^3+x" or "1+x" (nonnegative coefficients, degree <= 6).
/// Throws ConfigError for anything else.
ScalarFunctionSpec parse_function(const std::string& name);

/// Default campaign function set.
const std::vector<std::string>& default_function_set();

/// F = log o f o exp on log(domain). F is convex iff f is geometrically
/// convex on its positive domain.
ScalarFunctionSpec log_exp_transform(const ScalarFunctionSpec& f);

/// Converse direction: f = exp o F o log on exp(domain).
ScalarFunctionSpec exp_log_transform(const ScalarFunctionSpec& f);

}  // namespace hhv
