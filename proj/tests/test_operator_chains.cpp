#include <doctest.h>

#include <cmath>
#include <functional>

#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/generators.hpp"
#include "hhverify/means.hpp"
#include "hhverify/operator_chains.hpp"

using namespace hhv;

namespace {

const QuadratureSpec kQuad{};
const LoewnerTolerance kTol{};

// Test-local quadrature oracle, independent of the library rule: adaptive
// Simpson with recursion-depth control.
double simpson_rec(const std::function<double(double)>& f, double a, double b,
                   double fa, double fm, double fb, double whole, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 1e-13 * (1.0 + std::abs(whole)))
    return left + right;
  return simpson_rec(f, a, m, fa, flm, fm, left, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, depth - 1);
}

double simpson(const std::function<double(double)>& f, double a, double b) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_rec(f, a, b, fa, fm, fb, whole, 24);
}

CommutingPositivePair diag_pair() {
  return make_commuting_pair(ComplexMatrix::identity(2), {1.0, 4.0}, {4.0, 1.0});
}

CommutingPositivePair equal_pair() {
  auto rng = CounterRng::substream(51, "opchain_eq", 0);
  const auto u = gen_random_unitary(rng, 3);
  return make_commuting_pair(u, {0.5, 2.0, 6.0}, {0.5, 2.0, 6.0});
}

}  // namespace

TEST_CASE("operator geometric convexity of exp on the diagonal pair") {
  const auto v = check_operator_geo_convex(parse_function("exp"), diag_pair(), 5);
  CHECK(v.status == Status::Holds);
  CHECK(v.details.at("two_route_max_rel_dev") <= 1e-10);
  // lambda = 1/2: f(diag(2,2)) = e^2 I <= e^2.5 I, margin e^2.5 - e^2.
  CHECK(v.details.at("oracle_margin") <= std::exp(2.5) - std::exp(2.0) + 1e-9);
}

TEST_CASE("powers give zero margin in the operator geometric convexity test") {
  const auto v = check_operator_geo_convex(parse_function("x^1.5"), diag_pair(), 5);
  CHECK(v.status == Status::Holds);
  CHECK(std::abs(v.details.at("oracle_margin")) <= 1e-10 * 8.0);
}

TEST_CASE("equal operands give equality at every grid point") {
  const auto v = check_operator_geo_convex(parse_function("exp"), equal_pair(), 5);
  CHECK(v.status == Status::Holds);
  CHECK(std::abs(v.details.at("oracle_margin")) <= 1e-9 * std::exp(6.0));
}

TEST_CASE("log chain for exp reduces to the mean chain on the diagonal pair") {
  const auto r = hh_operator_log_chain(parse_function("exp"), diag_pair(), kQuad);
  REQUIRE(r.link_matrices.size() == 3);
  CHECK(r.overall.status == Status::Holds);
  // log exp collapses: links are sqrt(AB), int A^t B^(1-t), (A+B)/2.
  CHECK(r.link_matrices[0](0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.link_matrices[1](0, 0).real() ==
        doctest::Approx(2.1640425613334453).epsilon(1e-11));
  CHECK(r.link_matrices[2](0, 0).real() == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(r.extras.at("two_route_max_rel_dev") <= 1e-10);
  REQUIRE(r.scalar_route.has_value());
  CHECK(r.scalar_route->status == Status::Holds);
}

TEST_CASE("log chain collapses entirely on equal operands and for powers") {
  const auto re = hh_operator_log_chain(parse_function("exp"), equal_pair(), kQuad);
  CHECK(re.overall.status == Status::Holds);
  CHECK(std::abs(re.overall.margin) <= 1e-9 * 6.0);

  const auto rp = hh_operator_log_chain(parse_function("x^2"), diag_pair(), kQuad);
  CHECK(rp.overall.status == Status::Holds);
  CHECK(std::abs(rp.overall.margin) <= 1e-9 * std::log(16.0) + 1e-10);
}

TEST_CASE("log chain rejects functions that vanish on the spectrum") {
  // log(x) is zero at 1 and negative below, so log f is undefined there.
  CHECK_THROWS_AS(
      hh_operator_log_chain(parse_function("log"), diag_pair(), kQuad),
      DomainViolation);
}

TEST_CASE("unlogged chain middle matches a test-local scalar quadrature") {
  const auto r =
      hh_operator_unlogged_chain(parse_function("exp"), diag_pair(), kQuad);
  CHECK(r.overall.status == Status::Holds);
  // Shared eigenline (1,4): integrand exp((4^t + 4^(1-t))/2).
  const double expected = simpson(
      [](double t) {
        return std::exp(0.5 * (std::pow(4.0, t) + std::pow(4.0, 1.0 - t)));
      },
      0.0, 1.0);
  CHECK(r.link_matrices[1](0, 0).real() ==
        doctest::Approx(expected).epsilon(1e-10));
  CHECK(r.extras.at("two_route_max_rel_dev") <= 1e-10);
}

TEST_CASE("unlogged chain equality cases") {
  const auto rp =
      hh_operator_unlogged_chain(parse_function("x^1.5"), diag_pair(), kQuad);
  CHECK(rp.overall.status == Status::Holds);
  CHECK(std::abs(rp.overall.margin) <= 1e-9 * 8.0);

  const auto re =
      hh_operator_unlogged_chain(parse_function("cosh"), equal_pair(), kQuad);
  CHECK(re.overall.status == Status::Holds);
  CHECK(std::abs(re.overall.margin) <= 1e-9 * std::cosh(6.0));
}

TEST_CASE("exp special chain on the diagonal pair, with closed form") {
  const auto r = exp_special_chain(diag_pair(), kQuad);
  CHECK(r.overall.status == Status::Holds);
  CHECK(r.link_matrices[0](0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(r.link_matrices[1](0, 0).real() ==
        doctest::Approx(2.1640425613334453).epsilon(1e-12));
  CHECK(r.link_matrices[2](0, 0).real() == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(r.extras.at("closed_form_rel_dev") <= 1e-12);
  CHECK(r.extras.at("two_route_max_rel_dev") <= 1e-10);
}

TEST_CASE("exp special chain campaign slice") {
  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(52, "mv1_campaign", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 2 + k % 7, 0.1, 10.0);
    const auto r = exp_special_chain(p, kQuad);
    CHECK(r.overall.status == Status::Holds);
    CHECK(r.extras.at("closed_form_rel_dev") <= 1e-12);
    CHECK(r.extras.at("two_route_max_rel_dev") <= 1e-10);
    CHECK(r.scalar_route->status == Status::Holds);
  }
}

TEST_CASE("operator chains hold across the built-in function set") {
  const std::vector<std::string> names = {"exp", "x^2", "x^3+x", "cosh"};
  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(53, "op_campaign", static_cast<uint64_t>(k));
    const auto f = parse_function(names[static_cast<size_t>(k) % names.size()]);
    const auto p = gen_commuting_pair(rng, k % 2 ? 2 : 4, 0.1, 10.0);
    const auto rl = hh_operator_log_chain(f, p, kQuad);
    CHECK(rl.overall.status == Status::Holds);
    CHECK(rl.extras.at("two_route_max_rel_dev") <= 1e-10);
    CHECK(rl.scalar_route->status == rl.overall.status);
    const auto ru = hh_operator_unlogged_chain(f, p, kQuad);
    CHECK(ru.overall.status == Status::Holds);
    CHECK(ru.extras.at("two_route_max_rel_dev") <= 1e-10);
    CHECK(ru.scalar_route->status == ru.overall.status);
  }
}

TEST_CASE("whenever the unlogged chain holds, the log chain holds with it") {
  for (int k = 0; k < 60; ++k) {
    auto rng = CounterRng::substream(54, "mono_log", static_cast<uint64_t>(k));
    const auto f = parse_function(k % 2 ? "exp" : "cosh");
    const auto p = gen_commuting_pair(rng, 2 + k % 4, 0.1, 10.0);
    const auto unlogged = hh_operator_unlogged_chain(f, p, kQuad);
    if (unlogged.overall.status == Status::Holds)
      CHECK(hh_operator_log_chain(f, p, kQuad).overall.status == Status::Holds);
  }
}

TEST_CASE("doubling quadrature resolution moves nothing that matters") {
  const QuadratureSpec doubled = kQuad.doubled();
  for (int k = 0; k < 20; ++k) {
    auto rng = CounterRng::substream(55, "quad_stable", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 2 + k % 4, 0.1, 10.0);
    const auto coarse = exp_special_chain(p, kQuad);
    const auto fine = exp_special_chain(p, doubled);
    CHECK(coarse.overall.status == fine.overall.status);
    const double rel =
        frobenius_norm(sub(coarse.link_matrices[1], fine.link_matrices[1])) /
        frobenius_norm(fine.link_matrices[1]);
    CHECK(rel <= 1e-11);
  }
}

TEST_CASE("operator convex chain is flat on equal operands") {
  auto rng = CounterRng::substream(56, "kdv_eq", 0);
  const auto a = gen_psd(rng, 3, 0.5, 3.0);
  const auto r = operator_convex_hh_chain(parse_function("x^2"), a, a, kQuad);
  CHECK(r.overall.status == Status::Holds);
  CHECK(std::abs(r.overall.margin) <= 1e-10 * 9.0);
}

TEST_CASE("operator convex chain for x^2 with the polynomial closed form") {
  ComplexMatrix am(2);
  am(0, 0) = 2.0; am(0, 1) = 1.0; am(1, 0) = 1.0; am(1, 1) = 2.0;
  const HermitianMatrix a(am);
  const auto b = HermitianMatrix::diagonal({1.0, 3.0});
  const auto r = operator_convex_hh_chain(parse_function("x^2"), a, b, kQuad);
  REQUIRE(r.link_matrices.size() == 6);
  CHECK(r.overall.status == Status::Holds);
  CHECK(r.extras.at("closed_form_rel_dev") <= 1e-11);
}

TEST_CASE("operator convex chain for the inverse on positive pairs") {
  for (int k = 0; k < 50; ++k) {
    auto rng = CounterRng::substream(57, "kdv_inv", static_cast<uint64_t>(k));
    const int n = 2 + k % 5;
    const auto a = gen_psd(rng, n, 0.1, 10.0);
    const auto b = gen_psd(rng, n, 0.1, 10.0);
    const auto r = operator_convex_hh_chain(parse_function("x^-1"), a, b, kQuad);
    CHECK(r.overall.status == Status::Holds);
  }
}

TEST_CASE("operator convex chain rejects functions without the flag") {
  const auto a = HermitianMatrix::identity(2);
  CHECK_THROWS_AS(operator_convex_hh_chain(parse_function("exp"), a, a, kQuad),
                  ConfigError);
}

TEST_CASE("inverse chain propagates domain violations on indefinite input") {
  const auto a = HermitianMatrix::diagonal({1.0, -0.5});
  const auto b = HermitianMatrix::identity(2);
  CHECK_THROWS_AS(operator_convex_hh_chain(parse_function("x^-1"), a, b, kQuad),
                  DomainViolation);
}

TEST_CASE("agm inequality: endpoints, commuting reduction, generic pairs") {
  auto rng = CounterRng::substream(58, "agm", 0);
  const auto a = gen_psd(rng, 4, 0.1, 10.0);
  const auto b = gen_psd(rng, 4, 0.1, 10.0);
  for (double nu : {0.0, 1.0}) {
    const auto v = agm_inequality_check(a, b, nu);
    CHECK(v.status == Status::Holds);
    CHECK(std::abs(v.margin) <= 1e-11);
  }
  for (double nu : {0.25, 0.5, 0.75})
    CHECK(agm_inequality_check(a, b, nu).status == Status::Holds);

  // Commuting case: the mean reduces to the weighted geometric product
  // with lambda = 1 - nu.
  for (int k = 0; k < 30; ++k) {
    auto prng = CounterRng::substream(59, "agm_comm", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(prng, 3, 0.1, 10.0);
    const double nu = prng.next_double();
    const auto m = agm_weighted_mean(p.matrix_a(), p.matrix_b(), nu);
    const auto wg = weighted_geometric(p, 1.0 - nu);
    CHECK(frobenius_norm(sub(m, wg)) <= 1e-10 * frobenius_norm(wg));
  }
}

TEST_CASE("agm inequality on many random non-commuting pairs") {
  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(60, "agm_mass", static_cast<uint64_t>(k));
    const int n = 2 + k % 7;
    const auto a = gen_psd(rng, n, 0.1, 10.0);
    const auto b = gen_psd(rng, n, 0.1, 10.0);
    const double nu = rng.next_double();
    CHECK(agm_inequality_check(a, b, nu).status == Status::Holds);
  }
}

TEST_CASE("closure: products of geometrically convex functions") {
  const auto v = closure_check(ClosureKind::Product, parse_function("exp"),
                               parse_function("exp"), diag_pair(), 5);
  CHECK(v.status == Status::Holds);
}

TEST_CASE("closure: t f(t) with a power is exactly affine") {
  const auto v = closure_check(ClosureKind::TTimesF, parse_function("x^1.5"),
                               parse_function("x^1.5"), diag_pair(), 5);
  CHECK(v.status == Status::Holds);
  CHECK(std::abs(v.details.at("oracle_margin")) <= 1e-9 * 32.0);
}

TEST_CASE("closure: positive scalar multiples") {
  const auto v =
      closure_check(ClosureKind::ScalarMultiple, parse_function("cosh"),
                    parse_function("cosh"), diag_pair(), 5, kTol, 2.5);
  CHECK(v.status == Status::Holds);
  CHECK_THROWS_AS(closure_check(ClosureKind::ScalarMultiple,
                                parse_function("cosh"), parse_function("cosh"),
                                diag_pair(), 5, kTol, -1.0),
                  ConfigError);
}

TEST_CASE("closure: operator-norm interpolation bound") {
  const auto v = closure_check(ClosureKind::NormMcintosh, parse_function("exp"),
                               parse_function("exp"), diag_pair(), 3);
  CHECK(v.status == Status::Holds);
  // lambda = 1/2: ||diag(2,2)|| = 2 <= sqrt(4) sqrt(4) = 4; endpoints touch.
  CHECK(v.details.at("oracle_margin") >= -1e-12);
}

TEST_CASE("closure: the two readings of the sum bound diverge") {
  auto rng = CounterRng::substream(61, "shak", 0);
  const auto u = gen_random_unitary(rng, 3);
  const auto p = make_commuting_pair(u, {2.5, 3.0, 3.5}, {3.5, 3.0, 2.5});
  const auto f = parse_function("exp");
  const auto v = closure_check(ClosureKind::Sum, f, f, p, 5);
  // Multiplicative reading holds (it is scalar Hoelder per eigenvalue).
  CHECK(v.status == Status::Holds);
  // The literal printed reading fails decisively at this scale.
  CHECK(v.details.at("margin_shak_literal") < -1.0);
  const auto lit = classify_margin(v.details.at("margin_shak_literal"),
                                   v.details.at("scale_shak_literal"), kTol);
  CHECK(lit.status == Status::Violated);
}

TEST_CASE("closure: multiplicative sum reading holds across random pairs") {
  const std::vector<std::string> names = {"exp", "x^2", "x^3+x", "cosh"};
  for (int k = 0; k < 60; ++k) {
    auto rng = CounterRng::substream(62, "shak_mult", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 2 + k % 4, 0.1, 10.0);
    const auto f = parse_function(names[static_cast<size_t>(k) % names.size()]);
    const auto g = parse_function(names[static_cast<size_t>(k + 1) % names.size()]);
    CHECK(closure_check(ClosureKind::Sum, f, g, p, 5).status == Status::Holds);
  }
}
