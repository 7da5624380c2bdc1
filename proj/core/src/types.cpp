#include "hhverify/types.hpp"

#include <cmath>

#include "hhverify/errors.hpp"

namespace hhv {

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
  ComplexMatrix m(static_cast<int>(d.size()));
  for (int i = 0; i < m.n(); ++i) m(i, i) = d[static_cast<size_t>(i)];
  return m;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const int n = m.n();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("mul: dimension mismatch");
  const int n = a.n();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cd aik = a(i, k);
      if (aik == cd{}) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("add: dimension mismatch");
  ComplexMatrix r = a;
  for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
  return r;
}

ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.n() != b.n()) throw DimensionMismatch("sub: dimension mismatch");
  ComplexMatrix r = a;
  for (size_t i = 0; i < r.data().size(); ++i) r.data()[i] -= b.data()[i];
  return r;
}

ComplexMatrix scale(const ComplexMatrix& m, cd s) {
  ComplexMatrix r = m;
  for (auto& z : r.data()) z *= s;
  return r;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return sub(mul(a, b), mul(b, a));
}

bool is_finite(const ComplexMatrix& m) {
  for (const auto& z : m.data())
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_entry(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& z : m.data()) s = std::max(s, std::abs(z));
  return s;
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : m_(m.n()) {
  const int n = m.n();
  for (int i = 0; i < n; ++i) {
    const double d = m(i, i).real();
    if (!std::isfinite(d) || !std::isfinite(m(i, i).imag()))
      throw NotFinite("HermitianMatrix: non-finite entry");
    m_(i, i) = d;
    for (int j = i + 1; j < n; ++j) {
      const cd v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw NotFinite("HermitianMatrix: non-finite entry");
      m_(i, j) = v;
      m_(j, i) = std::conj(v);
    }
  }
}

HermitianMatrix add(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(add(a.mat(), b.mat()));
}

HermitianMatrix sub(const HermitianMatrix& a, const HermitianMatrix& b) {
  return HermitianMatrix(sub(a.mat(), b.mat()));
}

HermitianMatrix scale(const HermitianMatrix& m, double s) {
  return HermitianMatrix(scale(m.mat(), cd{s, 0.0}));
}

HermitianMatrix hermitian_part(const ComplexMatrix& m) {
  return HermitianMatrix(m);
}

double frobenius_norm(const HermitianMatrix& m) {
  return frobenius_norm(m.mat());
}

}  // namespace hhv
