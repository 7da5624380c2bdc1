#include "hhverify/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hhverify/errors.hpp"

namespace hhv {

HermitianMatrix apply_spectral_map(const SpectralDecomposition& d,
                                   const std::function<double(double)>& f) {
  const int n = d.n();
  std::vector<double> fl(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) fl[static_cast<size_t>(k)] = f(d.lambda[static_cast<size_t>(k)]);

  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      cd s{};
      for (int k = 0; k < n; ++k)
        s += d.u(i, k) * fl[static_cast<size_t>(k)] * std::conj(d.u(j, k));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
  }
  return HermitianMatrix(r);
}

HermitianMatrix apply_scalar_function(const ScalarFunctionSpec& f,
                                      const SpectralDecomposition& d) {
  for (double l : d.lambda) {
    if (!f.domain.contains(l)) {
      std::ostringstream msg;
      msg << "apply_scalar_function: eigenvalue " << l << " outside domain of "
          << f.name;
      throw DomainViolation(msg.str());
    }
  }
  return apply_spectral_map(d, f.eval);
}

HermitianMatrix apply_scalar_function(const ScalarFunctionSpec& f,
                                      const HermitianMatrix& h) {
  return apply_scalar_function(f, eig_hermitian(h));
}

HermitianMatrix matrix_power(const HermitianMatrix& h, double p) {
  const auto d = eig_hermitian(h);
  const bool needs_positive = !(p >= 0.0 && p == std::floor(p));
  if (needs_positive) {
    for (double l : d.lambda)
      if (!(l > 0.0))
        throw DomainViolation("matrix_power: nonpositive eigenvalue with fractional or negative exponent");
  }
  return apply_spectral_map(d, [p](double x) { return std::pow(x, p); });
}

HermitianMatrix abs_op(const ComplexMatrix& m) {
  if (!is_finite(m)) throw NotFinite("abs_op: non-finite entry");
  const HermitianMatrix gram(mul(adjoint(m), m));
  const auto d = eig_hermitian(gram);
  return apply_spectral_map(
      d, [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

std::vector<double> singular_values(const ComplexMatrix& m) {
  const HermitianMatrix gram(mul(adjoint(m), m));
  auto lambda = eig_hermitian(gram).lambda;
  std::vector<double> sv(lambda.size());
  for (size_t i = 0; i < lambda.size(); ++i)
    sv[i] = std::sqrt(std::max(lambda[lambda.size() - 1 - i], 0.0));
  return sv;
}

}  // namespace hhv
