#pragma once

#include <vector>

#include "hhverify/types.hpp"

namespace hhv {

/// Unitary eigenbasis plus real eigenvalues, sorted ascending.
/// Invariants: ||U U* - I||_F <= 1e-12 n and
/// ||U diag(lambda) U* - H||_F <= 1e-12 max(1, ||H||_F) for the source H.
struct SpectralDecomposition {
  ComplexMatrix u;
  std::vector<double> lambda;

  int n() const { return u.n(); }
};

/// Cyclic Jacobi with complex rotations and a threshold strategy.
/// Convergence target: off-diagonal Frobenius mass below 1e-13 ||H||_F.
/// Eigenvalues sorted ascending; each eigenvector column is phase-fixed so
/// its first nonzero component is real positive, making the decomposition
/// deterministic for a fixed input.
/// Throws NonConvergence if the target is not reached within 30 sweeps.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h);

/// U diag(lambda) U*.
HermitianMatrix reconstruct(const SpectralDecomposition& d);

/// Smallest eigenvalue of h (full decomposition under the hood).
double min_eigenvalue(const HermitianMatrix& h);

/// Closed-form eigenvalues of a 2x2 Hermitian matrix, ascending.
/// Test oracle for the iterative solver; kept independent of it.
std::vector<double> eig2x2_closed_form(const HermitianMatrix& h);

}  // namespace hhv
