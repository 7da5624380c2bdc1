#include "hhverify/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hhverify/errors.hpp"

namespace hhv {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kConvergenceFactor = 1e-13;

double offdiag_frobenius(const ComplexMatrix& h) {
  const int n = h.n();
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) s += 2.0 * std::norm(h(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating h(p,q). The rotation
//   R = [[c, s w], [-s conj(w), c]],  w = h(p,q)/|h(p,q)|,
// is applied as H <- R* H R and accumulated into V <- V R.
void rotate(ComplexMatrix& h, ComplexMatrix& v, int p, int q) {
  const int n = h.n();
  const cd z = h(p, q);
  const double az = std::abs(z);
  if (az == 0.0) return;
  const cd w = z / az;

  const double a = h(p, p).real();
  const double b = h(q, q).real();
  const double theta = (b - a) / (2.0 * az);
  double t;
  if (theta == 0.0) {
    t = 1.0;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  // Columns: X = H R.
  for (int i = 0; i < n; ++i) {
    const cd hip = h(i, p);
    const cd hiq = h(i, q);
    h(i, p) = c * hip - s * std::conj(w) * hiq;
    h(i, q) = s * w * hip + c * hiq;
  }
  // Rows: H' = R* X.
  for (int j = 0; j < n; ++j) {
    const cd hpj = h(p, j);
    const cd hqj = h(q, j);
    h(p, j) = c * hpj - s * w * hqj;
    h(q, j) = s * std::conj(w) * hpj + c * hqj;
  }
  // The annihilated pair is zero by construction; drop the rounding dust
  // and keep the transformed diagonal exactly real.
  h(p, q) = 0.0;
  h(q, p) = 0.0;
  h(p, p) = h(p, p).real();
  h(q, q) = h(q, q).real();

  for (int i = 0; i < n; ++i) {
    const cd vip = v(i, p);
    const cd viq = v(i, q);
    v(i, p) = c * vip - s * std::conj(w) * viq;
    v(i, q) = s * w * vip + c * viq;
  }
}

void phase_fix_column(ComplexMatrix& u, int j) {
  const int n = u.n();
  double colnorm = 0.0;
  for (int i = 0; i < n; ++i) colnorm += std::norm(u(i, j));
  colnorm = std::sqrt(colnorm);
  for (int i = 0; i < n; ++i) {
    const double m = std::abs(u(i, j));
    if (m > 1e-12 * colnorm) {
      const cd phase = std::conj(u(i, j)) / m;
      for (int k = 0; k < n; ++k) u(k, j) *= phase;
      return;
    }
  }
}

}  // namespace

SpectralDecomposition eig_hermitian(const HermitianMatrix& hin) {
  const int n = hin.n();
  ComplexMatrix h = hin.mat();
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double hfro = frobenius_norm(h);
  const double conv_tol = kConvergenceFactor * hfro;

  bool converged = (offdiag_frobenius(h) <= conv_tol);
  for (int sweep = 1; sweep <= kMaxSweeps && !converged; ++sweep) {
    const double off = offdiag_frobenius(h);
    if (off <= conv_tol) {
      converged = true;
      break;
    }
    // Threshold strategy: early sweeps skip pivots that are small
    // relative to the remaining off-diagonal mass.
    const double thresh = (sweep <= 3) ? 0.2 * off / (n * n) : 0.0;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q)
        if (std::abs(h(p, q)) > thresh) rotate(h, v, p, q);
    converged = (offdiag_frobenius(h) <= conv_tol);
  }
  if (!converged)
    throw NonConvergence("eig_hermitian: off-diagonal mass above tolerance after 30 sweeps");

  std::vector<int> idx(static_cast<size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) {
    return h(i, i).real() < h(j, j).real();
  });

  SpectralDecomposition d;
  d.u = ComplexMatrix(n);
  d.lambda.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    const int src = idx[static_cast<size_t>(j)];
    d.lambda[static_cast<size_t>(j)] = h(src, src).real();
    for (int i = 0; i < n; ++i) d.u(i, j) = v(i, src);
    phase_fix_column(d.u, j);
  }
  return d;
}

HermitianMatrix reconstruct(const SpectralDecomposition& d) {
  const int n = d.n();
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cd s{};
      for (int k = 0; k < n; ++k)
        s += d.u(i, k) * d.lambda[static_cast<size_t>(k)] * std::conj(d.u(j, k));
      r(i, j) = s;
    }
  }
  return HermitianMatrix(r);
}

double min_eigenvalue(const HermitianMatrix& h) {
  return eig_hermitian(h).lambda.front();
}

std::vector<double> eig2x2_closed_form(const HermitianMatrix& h) {
  if (h.n() != 2) throw DimensionMismatch("eig2x2_closed_form: need n = 2");
  const double a = h(0, 0).real();
  const double b = h(1, 1).real();
  const double m = 0.5 * (a + b);
  const double r = std::sqrt(0.25 * (a - b) * (a - b) + std::norm(h(0, 1)));
  return {m - r, m + r};
}

}  // namespace hhv
