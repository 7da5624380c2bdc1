#pragma once

#include <complex>
#include <vector>

namespace hhv {

using cd = std::complex<double>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), e_(static_cast<size_t>(n) * n) {}

  static ComplexMatrix identity(int n);
  static ComplexMatrix diagonal(const std::vector<double>& d);

  int n() const { return n_; }
  cd& operator()(int i, int j) { return e_[static_cast<size_t>(i) * n_ + j]; }
  const cd& operator()(int i, int j) const {
    return e_[static_cast<size_t>(i) * n_ + j];
  }
  std::vector<cd>& data() { return e_; }
  const std::vector<cd>& data() const { return e_; }

 private:
  int n_ = 0;
  std::vector<cd> e_;
};

ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& m, cd s);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_finite(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double max_abs_entry(const ComplexMatrix& m);

/// Hermitian matrix. Construction symmetrizes: stores (M + M*)/2 with the
/// diagonal imaginary parts zeroed, so entries[i][j] == conj(entries[j][i])
/// holds exactly as stored. Throws NotFinite on NaN/Inf input.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  explicit HermitianMatrix(const ComplexMatrix& m);

  static HermitianMatrix identity(int n) {
    return HermitianMatrix(ComplexMatrix::identity(n));
  }
  static HermitianMatrix diagonal(const std::vector<double>& d) {
    return HermitianMatrix(ComplexMatrix::diagonal(d));
  }
  static HermitianMatrix zero(int n) {
    return HermitianMatrix(ComplexMatrix(n));
  }

  int n() const { return m_.n(); }
  const ComplexMatrix& mat() const { return m_; }
  const cd& operator()(int i, int j) const { return m_(i, j); }

 private:
  ComplexMatrix m_;
};

HermitianMatrix add(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix sub(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix scale(const HermitianMatrix& m, double s);

/// Hermitian part (M + M*)/2 of a general product; used where a product of
/// commuting Hermitian operands is Hermitian up to rounding.
HermitianMatrix hermitian_part(const ComplexMatrix& m);

double frobenius_norm(const HermitianMatrix& m);

}  // namespace hhv
