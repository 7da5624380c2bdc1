#include <doctest.h>

#include <cmath>

#include "hhverify/errors.hpp"
#include "hhverify/scalar_functions.hpp"

using namespace hhv;

TEST_CASE("built-in evaluations") {
  CHECK(make_exp()(1.5) == doctest::Approx(std::exp(1.5)));
  CHECK(make_cosh()(0.7) == doctest::Approx(std::cosh(0.7)));
  CHECK(make_power(2.5)(3.0) == doctest::Approx(std::pow(3.0, 2.5)));
  CHECK(make_polynomial({1.0, 0.0, 2.0})(3.0) == doctest::Approx(19.0));
  CHECK(make_identity()(4.2) == doctest::Approx(4.2));
}

TEST_CASE("parser accepts the documented grammar") {
  CHECK(parse_function("exp").name == "exp");
  CHECK(parse_function("cosh").name == "cosh");
  CHECK(parse_function("x")(2.0) == doctest::Approx(2.0));
  CHECK(parse_function("x^2")(3.0) == doctest::Approx(9.0));
  CHECK(parse_function("x^-1")(4.0) == doctest::Approx(0.25));
  CHECK(parse_function("x^0.5")(9.0) == doctest::Approx(3.0));
  CHECK(parse_function("x^3+x")(2.0) == doctest::Approx(10.0));
  CHECK(parse_function("1+x")(2.0) == doctest::Approx(3.0));
  CHECK(parse_function("2+x")(1.0) == doctest::Approx(3.0));
  CHECK(parse_function("poly:1,2,3")(1.0) == doctest::Approx(6.0));
  CHECK(parse_function("3*x^2+x")(2.0) == doctest::Approx(14.0));
}

TEST_CASE("parser rejects out-of-contract inputs") {
  CHECK_THROWS_AS(parse_function("tan"), ConfigError);
  CHECK_THROWS_AS(parse_function("x^4.5"), ConfigError);   // p outside [-2, 3]
  CHECK_THROWS_AS(parse_function("x^-3"), ConfigError);
  CHECK_THROWS_AS(parse_function("x^7+x"), ConfigError);   // degree > 6
  CHECK_THROWS_AS(parse_function("poly:1,-2"), ConfigError);
  CHECK_THROWS_AS(make_polynomial({}), ConfigError);
}

TEST_CASE("flags match the function classes") {
  CHECK(parse_function("exp").geometrically_convex);
  CHECK(parse_function("x^2").operator_convex);
  CHECK(parse_function("x^-1").operator_convex);
  CHECK_FALSE(parse_function("x^3").operator_convex);
  CHECK_FALSE(parse_function("log").geometrically_convex);
  CHECK(parse_function("x^3+x").geometrically_convex);
}

TEST_CASE("domains distinguish integer and fractional powers") {
  CHECK(parse_function("x^2").domain.contains(-3.0));
  CHECK_FALSE(parse_function("x^-1").domain.contains(-3.0));
  CHECK_FALSE(parse_function("x^0.5").domain.contains(-1.0));
  CHECK(make_sqrt().domain.contains(0.0));  // closed at zero
  CHECK_FALSE(make_log().domain.contains(0.0));
}

TEST_CASE("log-exp transform of exp is exp itself") {
  // F(x) = log(exp(e^x)) = e^x, convex but not affine.
  const auto F = log_exp_transform(make_exp());
  for (double x : {-2.0, 0.0, 1.3, 4.0})
    CHECK(F(x) == doctest::Approx(std::exp(x)).epsilon(1e-14));
}

TEST_CASE("log-exp transform of a power is linear") {
  const auto F = log_exp_transform(make_power(2.5));
  for (double x : {-1.0, 0.5, 2.0})
    CHECK(F(x) == doctest::Approx(2.5 * x).epsilon(1e-13));
}

TEST_CASE("transform round-trip reproduces f") {
  for (const auto& name : {"exp", "cosh", "x^2", "x^3+x"}) {
    const auto f = parse_function(name);
    const auto g = exp_log_transform(log_exp_transform(f));
    for (double t = 0.1; t < 8.0; t *= 1.7) {
      CHECK(g(t) == doctest::Approx(f(t)).epsilon(1e-12));
    }
  }
}

TEST_CASE("default function set parses") {
  for (const auto& name : default_function_set()) {
    const auto f = parse_function(name);
    CHECK(f.geometrically_convex);
    CHECK(f(1.0) > 0.0);
  }
}
