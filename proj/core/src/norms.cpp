#include "hhverify/norms.hpp"

#include <cmath>
#include <limits>

#include "hhverify/calculus.hpp"
#include "hhverify/errors.hpp"

namespace hhv {

cd trace(const ComplexMatrix& m) {
  cd s{};
  for (int i = 0; i < m.n(); ++i) s += m(i, i);
  return s;
}

double schatten_norm(const ComplexMatrix& m, double p) {
  const bool is_inf = std::isinf(p) && p > 0.0;
  if (!is_inf && !(p >= 1.0)) throw BadExponent("schatten_norm: p < 1");
  const auto sv = singular_values(m);
  if (sv.empty()) return 0.0;
  if (is_inf) return sv.front();
  double s = 0.0;
  for (double v : sv) s += std::pow(v, p);
  return std::pow(s, 1.0 / p);
}

double operator_norm(const ComplexMatrix& m) {
  return schatten_norm(m, std::numeric_limits<double>::infinity());
}

double operator_norm(const HermitianMatrix& m) {
  return operator_norm(m.mat());
}

double trace_abs_pow(const ComplexMatrix& m, double r) {
  if (!(r >= 0.0)) throw BadExponent("trace_abs_pow: r < 0");
  const auto sv = singular_values(m);
  if (r == 0.0) {
    const double cutoff = sv.empty() ? 0.0 : 1e-12 * sv.front();
    double s = 0.0;
    for (double v : sv)
      if (v > cutoff) s += 1.0;
    return s;
  }
  double s = 0.0;
  for (double v : sv) s += std::pow(v, r);
  return s;
}

}  // namespace hhv
