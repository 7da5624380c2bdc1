#pragma once

#include <vector>

#include "hhverify/types.hpp"

namespace hhv {

/// Two positive definite operators sharing one eigenbasis: A = U diag(a) U*,
/// B = U diag(b) U*, eigenvalues aligned index-wise. Commutation is exact by
/// construction and every commuting theorem gains a per-eigenvalue scalar
/// oracle.
struct CommutingPositivePair {
  ComplexMatrix u;
  std::vector<double> a;
  std::vector<double> b;

  int n() const { return u.n(); }
  HermitianMatrix matrix_a() const;
  HermitianMatrix matrix_b() const;

  CommutingPositivePair swapped() const { return {u, b, a}; }
};

/// Validates positivity of both spectra (NotPositive) and unitarity of u
/// to ||U U* - I||_F <= 1e-12 n (NotUnitary).
CommutingPositivePair make_commuting_pair(ComplexMatrix u,
                                          std::vector<double> a,
                                          std::vector<double> b);

/// A^lambda B^(1-lambda) = U diag(a_i^lambda b_i^(1-lambda)) U* for
/// lambda in [0, 1] (BadWeight otherwise).
HermitianMatrix weighted_geometric(const CommutingPositivePair& p, double lambda);

/// Per-eigenvalue spectrum of A^lambda B^(1-lambda).
std::vector<double> weighted_geometric_spectrum(const CommutingPositivePair& p,
                                                double lambda);

/// Closed form of the integral over [0,1] of A^t B^(1-t) dt:
/// U diag(L(a_i, b_i)) U* with L the logarithmic mean.
HermitianMatrix weighted_geometric_integral_closed_form(
    const CommutingPositivePair& p);

/// U diag(d) U* in the pair's shared eigenbasis.
HermitianMatrix pair_diagonal(const CommutingPositivePair& p,
                              const std::vector<double>& d);

}  // namespace hhv
