#pragma once

#include "hhverify/types.hpp"

namespace hhv {

/// Logarithmic mean L(a, b) = (b - a)/(ln b - ln a) for a, b > 0.
/// When |a - b| <= 1e-14 max(a, b) returns the midpoint (a + b)/2, which
/// removes the 0/0 singularity with relative error O(((b-a)/a)^2).
/// Satisfies G(a, b) <= L(a, b) <= A(a, b).
double log_mean(double a, double b);

/// Weighted arithmetic-geometric operator mean
/// A^(1/2) (A^(-1/2) B A^(-1/2))^nu A^(1/2) for positive definite A, B and
/// nu in [0, 1]; the operands need not commute. nu = 0 returns A, nu = 1
/// returns B. If ill_conditioned is non-null it is set when either operand
/// has condition number above 1e8.
HermitianMatrix agm_weighted_mean(const HermitianMatrix& a,
                                  const HermitianMatrix& b, double nu,
                                  bool* ill_conditioned = nullptr);

}  // namespace hhv
