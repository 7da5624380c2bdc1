#include "hhverify/scalar_functions.hpp"

#include <cmath>
#include <sstream>

#include "hhverify/errors.hpp"

namespace hhv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const Interval kWholeLine{-kInf, kInf, true, true};
const Interval kPositive{0.0, kInf, true, true};

bool is_nonneg_integer(double p) {
  return p >= 0.0 && p == std::floor(p);
}

std::vector<double> parse_coeff_list(const std::string& body) {
  std::vector<double> coeffs;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      coeffs.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw ConfigError("polynomial: bad coefficient '" + tok + "'");
    }
  }
  return coeffs;
}

// Sum-of-monomials form: terms separated by '+', each "c", "x", "x^k"
// or "c*x^k" with integer k >= 0.
std::vector<double> parse_monomial_sum(const std::string& name) {
  std::vector<double> coeffs(7, 0.0);
  std::stringstream ss(name);
  std::string term;
  while (std::getline(ss, term, '+')) {
    if (term.empty()) throw ConfigError("polynomial: empty term in '" + name + "'");
    double c = 1.0;
    std::string rest = term;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      try {
        c = std::stod(term.substr(0, star));
      } catch (const std::exception&) {
        throw ConfigError("polynomial: bad coefficient in '" + term + "'");
      }
      rest = term.substr(star + 1);
    }
    int k = 0;
    if (rest == "x") {
      k = 1;
    } else if (rest.rfind("x^", 0) == 0) {
      try {
        size_t used = 0;
        k = std::stoi(rest.substr(2), &used);
        if (used != rest.size() - 2) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        throw ConfigError("polynomial: bad exponent in '" + term + "'");
      }
    } else if (star == std::string::npos) {
      try {
        c = std::stod(rest);
        k = 0;
      } catch (const std::exception&) {
        throw ConfigError("cannot parse term '" + term + "'");
      }
    } else {
      throw ConfigError("cannot parse term '" + term + "'");
    }
    if (k < 0 || k > 6) throw ConfigError("polynomial degree out of [0, 6]");
    coeffs[static_cast<size_t>(k)] += c;
  }
  while (coeffs.size() > 1 && coeffs.back() == 0.0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

ScalarFunctionSpec make_exp() {
  ScalarFunctionSpec f;
  f.name = "exp";
  f.eval = [](double x) { return std::exp(x); };
  f.domain = kWholeLine;
  f.geometrically_convex = true;
  f.monotone = true;
  return f;
}

ScalarFunctionSpec make_cosh() {
  ScalarFunctionSpec f;
  f.name = "cosh";
  f.eval = [](double x) { return std::cosh(x); };
  f.domain = kWholeLine;
  f.geometrically_convex = true;
  return f;
}

ScalarFunctionSpec make_log() {
  ScalarFunctionSpec f;
  f.name = "log";
  f.eval = [](double x) { return std::log(x); };
  f.domain = kPositive;
  f.monotone = true;
  return f;
}

ScalarFunctionSpec make_sqrt() {
  ScalarFunctionSpec f = make_power(0.5);
  f.name = "sqrt";
  f.eval = [](double x) { return std::sqrt(x); };
  f.domain = Interval{0.0, kInf, false, true};
  return f;
}

ScalarFunctionSpec make_identity() {
  ScalarFunctionSpec f;
  f.name = "x";
  f.eval = [](double x) { return x; };
  f.domain = kWholeLine;
  f.geometrically_convex = true;
  f.monotone = true;
  return f;
}

ScalarFunctionSpec make_power(double p) {
  if (!(p >= -2.0 && p <= 3.0))
    throw ConfigError("power function exponent outside [-2, 3]");
  ScalarFunctionSpec f;
  std::ostringstream name;
  name << "x^" << p;
  f.name = name.str();
  f.eval = [p](double x) { return std::pow(x, p); };
  f.domain = is_nonneg_integer(p) ? kWholeLine : kPositive;
  f.geometrically_convex = true;  // powers are geometrically affine
  f.operator_convex = (p == 2.0 || p == -1.0);
  f.monotone = (p >= 0.0);
  return f;
}

ScalarFunctionSpec make_polynomial(const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw ConfigError("polynomial: no coefficients");
  if (coeffs.size() > 7) throw ConfigError("polynomial degree out of [0, 6]");
  for (double c : coeffs)
    if (!(c >= 0.0)) throw ConfigError("polynomial: coefficients must be nonnegative");
  ScalarFunctionSpec f;
  std::ostringstream name;
  name << "poly:";
  for (size_t k = 0; k < coeffs.size(); ++k) {
    if (k) name << ",";
    name << coeffs[k];
  }
  f.name = name.str();
  f.eval = [coeffs](double x) {
    double acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
  };
  f.domain = kWholeLine;
  f.geometrically_convex = true;
  f.monotone = true;
  return f;
}

ScalarFunctionSpec parse_function(const std::string& name) {
  if (name == "exp") return make_exp();
  if (name == "cosh") return make_cosh();
  if (name == "log") return make_log();
  if (name == "sqrt") return make_sqrt();
  if (name == "x") return make_identity();
  if (name.rfind("poly:", 0) == 0)
    return make_polynomial(parse_coeff_list(name.substr(5)));
  if (name.find('+') != std::string::npos)
    return make_polynomial(parse_monomial_sum(name));
  if (name.rfind("x^", 0) == 0) {
    double p;
    try {
      size_t used = 0;
      p = std::stod(name.substr(2), &used);
      if (used != name.size() - 2) throw std::invalid_argument(name);
    } catch (const std::exception&) {
      throw ConfigError("cannot parse power function '" + name + "'");
    }
    return make_power(p);
  }
  throw ConfigError("unknown function '" + name + "'");
}

const std::vector<std::string>& default_function_set() {
  static const std::vector<std::string> set = {"exp", "x^2", "x^3+x", "cosh"};
  return set;
}

ScalarFunctionSpec log_exp_transform(const ScalarFunctionSpec& f) {
  ScalarFunctionSpec g;
  g.name = "log(" + f.name + "(exp))";
  auto inner = f.eval;
  g.eval = [inner](double x) { return std::log(inner(std::exp(x))); };
  g.domain.lo = f.domain.lo > 0.0 ? std::log(f.domain.lo)
                                  : -std::numeric_limits<double>::infinity();
  g.domain.hi = std::isfinite(f.domain.hi)
                    ? std::log(f.domain.hi)
                    : std::numeric_limits<double>::infinity();
  g.domain.lo_open = f.domain.lo_open || f.domain.lo <= 0.0;
  g.domain.hi_open = f.domain.hi_open;
  return g;
}

ScalarFunctionSpec exp_log_transform(const ScalarFunctionSpec& f) {
  ScalarFunctionSpec g;
  g.name = "exp(" + f.name + "(log))";
  auto inner = f.eval;
  g.eval = [inner](double x) { return std::exp(inner(std::log(x))); };
  g.domain.lo = std::isfinite(f.domain.lo) ? std::exp(f.domain.lo) : 0.0;
  g.domain.hi = std::isfinite(f.domain.hi)
                    ? std::exp(f.domain.hi)
                    : std::numeric_limits<double>::infinity();
  g.domain.lo_open = f.domain.lo_open;
  g.domain.hi_open = f.domain.hi_open;
  return g;
}

}  // namespace hhv
