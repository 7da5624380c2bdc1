#include "hhverify/commuting.hpp"

#include <cmath>

#include "hhverify/errors.hpp"
#include "hhverify/means.hpp"

namespace hhv {

namespace {

HermitianMatrix conjugate_diagonal(const ComplexMatrix& u,
                                   const std::vector<double>& d) {
  const int n = u.n();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cd s{};
      for (int k = 0; k < n; ++k)
        s += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
  }
  return HermitianMatrix(r);
}

}  // namespace

HermitianMatrix CommutingPositivePair::matrix_a() const {
  return conjugate_diagonal(u, a);
}

HermitianMatrix CommutingPositivePair::matrix_b() const {
  return conjugate_diagonal(u, b);
}

CommutingPositivePair make_commuting_pair(ComplexMatrix u,
                                          std::vector<double> a,
                                          std::vector<double> b) {
  const int n = u.n();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw DimensionMismatch("make_commuting_pair: eigenvalue count != dimension");
  for (double x : a)
    if (!(x > 0.0)) throw NotPositive("make_commuting_pair: eigenvalue of A <= 0");
  for (double x : b)
    if (!(x > 0.0)) throw NotPositive("make_commuting_pair: eigenvalue of B <= 0");

  const ComplexMatrix residual = sub(mul(u, adjoint(u)), ComplexMatrix::identity(n));
  if (frobenius_norm(residual) > 1e-12 * n)
    throw NotUnitary("make_commuting_pair: basis fails unitarity residual");

  return {std::move(u), std::move(a), std::move(b)};
}

std::vector<double> weighted_geometric_spectrum(const CommutingPositivePair& p,
                                                double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw BadWeight("weighted_geometric: lambda outside [0, 1]");
  std::vector<double> d(p.a.size());
  for (size_t i = 0; i < d.size(); ++i)
    d[i] = std::pow(p.a[i], lambda) * std::pow(p.b[i], 1.0 - lambda);
  return d;
}

HermitianMatrix weighted_geometric(const CommutingPositivePair& p, double lambda) {
  return conjugate_diagonal(p.u, weighted_geometric_spectrum(p, lambda));
}

HermitianMatrix weighted_geometric_integral_closed_form(
    const CommutingPositivePair& p) {
  std::vector<double> d(p.a.size());
  for (size_t i = 0; i < d.size(); ++i) d[i] = log_mean(p.a[i], p.b[i]);
  return conjugate_diagonal(p.u, d);
}

HermitianMatrix pair_diagonal(const CommutingPositivePair& p,
                              const std::vector<double>& d) {
  if (d.size() != p.a.size())
    throw DimensionMismatch("pair_diagonal: value count != dimension");
  return conjugate_diagonal(p.u, d);
}

}  // namespace hhv
