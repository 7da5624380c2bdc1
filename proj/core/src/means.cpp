#include "hhverify/means.hpp"

#include <cmath>

#include "hhverify/calculus.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"

namespace hhv {

double log_mean(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw NotPositive("log_mean: arguments must be > 0");
  if (std::abs(a - b) <= 1e-14 * std::max(a, b)) return 0.5 * (a + b);
  // log(b/a) = log1p((b-a)/a) avoids the cancellation of log b - log a
  // for nearby arguments, keeping the quotient accurate at every gap.
  return (b - a) / std::log1p((b - a) / a);
}

namespace {

constexpr double kConditionCap = 1e8;

SpectralDecomposition decompose_pd(const HermitianMatrix& h, const char* role,
                                   bool* ill_conditioned) {
  auto d = eig_hermitian(h);
  if (!(d.lambda.front() > 0.0))
    throw NotPositiveDefinite(std::string("agm_weighted_mean: ") + role +
                              " is not positive definite");
  if (ill_conditioned && d.lambda.back() / d.lambda.front() > kConditionCap)
    *ill_conditioned = true;
  return d;
}

}  // namespace

HermitianMatrix agm_weighted_mean(const HermitianMatrix& a,
                                  const HermitianMatrix& b, double nu,
                                  bool* ill_conditioned) {
  if (a.n() != b.n()) throw DimensionMismatch("agm_weighted_mean: dimension mismatch");
  if (!(nu >= 0.0 && nu <= 1.0)) throw BadWeight("agm_weighted_mean: nu outside [0, 1]");
  if (ill_conditioned) *ill_conditioned = false;

  const auto da = decompose_pd(a, "A", ill_conditioned);
  const auto db = decompose_pd(b, "B", ill_conditioned);
  if (nu == 0.0) return a;
  if (nu == 1.0) return b;

  const auto a_half = apply_spectral_map(da, [](double x) { return std::sqrt(x); });
  const auto a_minus_half =
      apply_spectral_map(da, [](double x) { return 1.0 / std::sqrt(x); });
  (void)db;

  const HermitianMatrix inner{
      mul(mul(a_minus_half.mat(), b.mat()), a_minus_half.mat())};
  const auto di = eig_hermitian(inner);
  if (!(di.lambda.front() > 0.0))
    throw NotPositiveDefinite("agm_weighted_mean: congruence lost definiteness");
  const auto inner_pow = apply_spectral_map(di, [nu](double x) { return std::pow(x, nu); });
  return HermitianMatrix{mul(mul(a_half.mat(), inner_pow.mat()), a_half.mat())};
}

}  // namespace hhv
