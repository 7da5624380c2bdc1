#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "hhverify/commuting.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/generators.hpp"
#include "hhverify/loewner.hpp"
#include "hhverify/means.hpp"
#include "hhverify/quadrature.hpp"

using namespace hhv;

TEST_CASE("diagonal pair materializes and commutes exactly") {
  const auto p = make_commuting_pair(ComplexMatrix::identity(2), {1.0, 4.0},
                                     {4.0, 1.0});
  const auto a = p.matrix_a();
  const auto b = p.matrix_b();
  CHECK(a(0, 0).real() == doctest::Approx(1.0));
  CHECK(a(1, 1).real() == doctest::Approx(4.0));
  CHECK(b(0, 0).real() == doctest::Approx(4.0));
  const auto ab = mul(a.mat(), b.mat());
  CHECK(ab(0, 0).real() == doctest::Approx(4.0));
  CHECK(ab(1, 1).real() == doctest::Approx(4.0));
  CHECK(frobenius_norm(commutator(a.mat(), b.mat())) <= 1e-14);
}

TEST_CASE("equal spectra give equal operators") {
  auto rng = CounterRng::substream(31, "pair_eq", 0);
  const auto u = gen_random_unitary(rng, 4);
  const auto p = make_commuting_pair(u, {1.0, 2.0, 3.0, 4.0}, {1.0, 2.0, 3.0, 4.0});
  CHECK(frobenius_norm(sub(p.matrix_a(), p.matrix_b())) <= 1e-13);
}

TEST_CASE("pair construction validates inputs") {
  CHECK_THROWS_AS(
      make_commuting_pair(ComplexMatrix::identity(2), {1.0, -1.0}, {1.0, 1.0}),
      NotPositive);
  CHECK_THROWS_AS(
      make_commuting_pair(ComplexMatrix::identity(2), {1.0, 1.0}, {0.0, 1.0}),
      NotPositive);
  ComplexMatrix skew = ComplexMatrix::identity(2);
  skew(0, 1) = 0.5;
  CHECK_THROWS_AS(make_commuting_pair(skew, {1.0, 1.0}, {1.0, 1.0}), NotUnitary);
  CHECK_THROWS_AS(
      make_commuting_pair(ComplexMatrix::identity(2), {1.0}, {1.0, 1.0}),
      DimensionMismatch);
}

TEST_CASE("haar pairs have tiny commutators") {
  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(32, "pair_comm", static_cast<uint64_t>(k));
    const int n = 2 + k % 7;
    const auto p = gen_commuting_pair(rng, n, 0.1, 10.0);
    const auto a = p.matrix_a();
    const auto b = p.matrix_b();
    CHECK(frobenius_norm(commutator(a.mat(), b.mat())) <=
          1e-11 * frobenius_norm(a) * frobenius_norm(b));
  }
}

TEST_CASE("weighted geometric product endpoints and midpoint") {
  const auto p = make_commuting_pair(ComplexMatrix::identity(2), {1.0, 4.0},
                                     {4.0, 1.0});
  const auto mid = weighted_geometric(p, 0.5);
  CHECK(mid(0, 0).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(mid(1, 1).real() == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(frobenius_norm(sub(weighted_geometric(p, 1.0), p.matrix_a())) <= 1e-13);
  CHECK(frobenius_norm(sub(weighted_geometric(p, 0.0), p.matrix_b())) <= 1e-13);
  CHECK_THROWS_AS(weighted_geometric(p, 1.5), BadWeight);
}

TEST_CASE("weighted geometric product is idempotent on equal operands") {
  auto rng = CounterRng::substream(33, "wg_idem", 0);
  const auto u = gen_random_unitary(rng, 3);
  const auto p = make_commuting_pair(u, {2.0, 3.0, 5.0}, {2.0, 3.0, 5.0});
  for (double l : {0.0, 0.3, 0.7, 1.0})
    CHECK(frobenius_norm(sub(weighted_geometric(p, l), p.matrix_a())) <= 1e-13);
}

TEST_CASE("swap symmetry is exact") {
  for (int k = 0; k < 20; ++k) {
    auto rng = CounterRng::substream(34, "wg_swap", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 4, 0.1, 10.0);
    const auto sw = p.swapped();
    for (double l : {0.0, 0.25, 0.6, 1.0}) {
      const auto x = weighted_geometric(p, l);
      const auto y = weighted_geometric(sw, 1.0 - l);
      CHECK(x.mat().data() == y.mat().data());
    }
  }
}

TEST_CASE("spectrum containment for the weighted product") {
  for (int k = 0; k < 50; ++k) {
    auto rng = CounterRng::substream(35, "wg_spec", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 2 + k % 7, 0.1, 10.0);
    const double l = rng.next_double();
    auto expected = weighted_geometric_spectrum(p, l);
    std::sort(expected.begin(), expected.end());
    const auto got = eig_hermitian(weighted_geometric(p, l)).lambda;
    double scale = 0.0;
    for (double v : expected) scale = std::max(scale, v);
    for (size_t i = 0; i < expected.size(); ++i)
      CHECK(std::abs(got[i] - expected[i]) <= 1e-10 * scale);
  }
}

TEST_CASE("log mean closed form and mean chain") {
  CHECK(log_mean(1.0, 4.0) == doctest::Approx(2.1640425613334453).epsilon(1e-14));
  CHECK(log_mean(4.0, 1.0) == doctest::Approx(2.1640425613334453).epsilon(1e-14));
  CHECK(log_mean(5.0, 5.0) == doctest::Approx(5.0));
  CHECK(log_mean(1.0, 1.0 + 1e-15) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(log_mean(0.0, 1.0), NotPositive);
  CHECK_THROWS_AS(log_mean(1.0, -2.0), NotPositive);

  // min <= G <= L <= A <= max on (1, 4).
  const double g = 2.0, l = 2.1640425613334453, a = 2.5;
  CHECK(1.0 <= g);
  CHECK(g <= l);
  CHECK(l <= a);
  CHECK(a <= 4.0);

  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(36, "lm_chain", static_cast<uint64_t>(k));
    const double x = rng.log_uniform(0.01, 100.0);
    const double y = rng.log_uniform(0.01, 100.0);
    const double lm = log_mean(x, y);
    CHECK(lm >= std::sqrt(x * y) * (1.0 - 1e-12));
    CHECK(lm <= 0.5 * (x + y) * (1.0 + 1e-12));
  }
}

TEST_CASE("closed-form integral of the weighted geometric curve") {
  const auto p = make_commuting_pair(ComplexMatrix::identity(2), {1.0, 4.0},
                                     {4.0, 1.0});
  const auto cf = weighted_geometric_integral_closed_form(p);
  CHECK(cf(0, 0).real() == doctest::Approx(2.1640425613334453).epsilon(1e-14));
  CHECK(cf(1, 1).real() == doctest::Approx(2.1640425613334453).epsilon(1e-14));

  auto rng = CounterRng::substream(37, "cf_eq", 0);
  const auto u = gen_random_unitary(rng, 3);
  const auto pe = make_commuting_pair(u, {2.0, 3.0, 7.0}, {2.0, 3.0, 7.0});
  CHECK(frobenius_norm(sub(weighted_geometric_integral_closed_form(pe),
                           pe.matrix_a())) <= 1e-12 * frobenius_norm(pe.matrix_a()));
}

TEST_CASE("quadrature route agrees with the closed form") {
  const QuadratureSpec q;
  for (int k = 0; k < 100; ++k) {
    auto rng = CounterRng::substream(38, "cf_quad", static_cast<uint64_t>(k));
    const auto p = gen_commuting_pair(rng, 2 + k % 7, 0.1, 10.0);
    const auto quad =
        integrate_curve([&](double t) { return weighted_geometric(p, t); }, q);
    const auto cf = weighted_geometric_integral_closed_form(p);
    CHECK(frobenius_norm(sub(quad, cf)) <= 1e-12 * frobenius_norm(cf));
  }
}

TEST_CASE("agm weighted mean endpoints are exact") {
  auto rng = CounterRng::substream(39, "agm_end", 0);
  const auto a = gen_psd(rng, 4, 0.1, 10.0);
  const auto b = gen_psd(rng, 4, 0.1, 10.0);
  CHECK(frobenius_norm(sub(agm_weighted_mean(a, b, 0.0), a)) == 0.0);
  CHECK(frobenius_norm(sub(agm_weighted_mean(a, b, 1.0), b)) == 0.0);
  CHECK_THROWS_AS(agm_weighted_mean(a, b, -0.1), BadWeight);
}

TEST_CASE("agm weighted mean on a commuting pair is the geometric mean") {
  const auto a = HermitianMatrix::diagonal({1.0, 4.0});
  const auto b = HermitianMatrix::diagonal({4.0, 1.0});
  const auto m = agm_weighted_mean(a, b, 0.5);
  CHECK(m(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(m(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("agm weighted mean sits below the arithmetic blend") {
  ComplexMatrix am(2);
  am(0, 0) = 2.0; am(0, 1) = 1.0; am(1, 0) = 1.0; am(1, 1) = 2.0;
  const HermitianMatrix a(am);
  const auto b = HermitianMatrix::diagonal({1.0, 3.0});
  const auto m = agm_weighted_mean(a, b, 0.5);
  const auto blend = scale(add(a, b), 0.5);
  CHECK(loewner_leq(m, blend).status == Status::Holds);
}

TEST_CASE("agm rejects indefinite operands and flags bad conditioning") {
  const auto a = HermitianMatrix::diagonal({1.0, -1.0});
  const auto b = HermitianMatrix::identity(2);
  CHECK_THROWS_AS(agm_weighted_mean(a, b, 0.5), NotPositiveDefinite);

  bool warned = false;
  const auto big = HermitianMatrix::diagonal({1e9, 1.0});
  (void)agm_weighted_mean(big, b, 0.5, &warned);
  CHECK(warned);
  warned = false;
  (void)agm_weighted_mean(b, b, 0.5, &warned);
  CHECK_FALSE(warned);
}
