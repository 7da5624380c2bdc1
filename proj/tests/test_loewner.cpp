#include <doctest.h>

#include "hhverify/errors.hpp"
#include "hhverify/loewner.hpp"

using namespace hhv;

TEST_CASE("I <= 2I holds with unit margin") {
  const auto v = loewner_leq(HermitianMatrix::identity(3),
                             scale(HermitianMatrix::identity(3), 2.0));
  CHECK(v.status == Status::Holds);
  CHECK(v.margin == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("2I <= I is violated with margin -1") {
  const auto v = loewner_leq(scale(HermitianMatrix::identity(3), 2.0),
                             HermitianMatrix::identity(3));
  CHECK(v.status == Status::Violated);
  CHECK(v.margin == doctest::Approx(-1.0).epsilon(1e-14));
}

TEST_CASE("touching comparison holds with zero margin") {
  ComplexMatrix m(2);
  m(0, 0) = 2.0; m(0, 1) = 1.0; m(1, 0) = 1.0; m(1, 1) = 2.0;
  const auto v = loewner_leq(HermitianMatrix(m),
                             scale(HermitianMatrix::identity(2), 3.0));
  CHECK(v.status == Status::Holds);
  CHECK(v.margin == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(loewner_leq(HermitianMatrix::identity(2),
                              HermitianMatrix::identity(3)),
                  DimensionMismatch);
}

TEST_CASE("three-way band geometry") {
  // With ||A||, ||B|| <= 1 the band is 1e-9 + 1e-12; Violated needs 10x.
  const auto zero = HermitianMatrix::zero(2);
  const auto shift = [&](double x) {
    return loewner_leq(HermitianMatrix::diagonal({x, x / 2}), zero);
  };
  CHECK(shift(5e-10).status == Status::Holds);
  CHECK(shift(5e-9).status == Status::Inconclusive);
  CHECK(shift(5e-8).status == Status::Violated);
}

TEST_CASE("custom tolerance widens the band") {
  const auto zero = HermitianMatrix::zero(2);
  const auto v = loewner_leq(HermitianMatrix::diagonal({1e-4, 0.0}), zero,
                             LoewnerTolerance{1e-3, 0.0});
  CHECK(v.status == Status::Holds);
}

TEST_CASE("classify_margin records the scale") {
  const auto v = classify_margin(-0.5, 2.0, LoewnerTolerance{});
  CHECK(v.status == Status::Violated);
  CHECK(v.details.at("scale") == doctest::Approx(2.0));
}

TEST_CASE("fold_verdict keeps the worst status and minimum margin") {
  Verdict acc = fold_identity();
  fold_verdict(acc, classify_margin(1.0, 1.0, {}));
  CHECK(acc.status == Status::Holds);
  fold_verdict(acc, classify_margin(-5e-9, 1.0, {}));
  CHECK(acc.status == Status::Inconclusive);
  fold_verdict(acc, classify_margin(-1.0, 1.0, {}));
  CHECK(acc.status == Status::Violated);
  CHECK(acc.margin == doctest::Approx(-1.0));
  fold_verdict(acc, classify_margin(2.0, 1.0, {}));
  CHECK(acc.status == Status::Violated);
  CHECK(acc.margin == doctest::Approx(-1.0));
}
