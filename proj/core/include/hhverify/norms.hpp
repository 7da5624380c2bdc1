#pragma once

#include "hhverify/types.hpp"

namespace hhv {

/// Sum of diagonal entries in the standard basis.
cd trace(const ComplexMatrix& m);

inline double trace_real(const HermitianMatrix& m) {
  return trace(m.mat()).real();
}

/// Schatten p-norm (sum sigma_i^p)^(1/p); p = infinity (the sentinel
/// std::numeric_limits<double>::infinity()) gives the operator norm.
/// Throws BadExponent for p < 1.
double schatten_norm(const ComplexMatrix& m, double p);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);
double operator_norm(const HermitianMatrix& m);

/// Trace of |M|^r from singular values. r = 0 uses the spectral projection
/// convention: positive singular values map to 1, zero maps to 0
/// (cutoff 1e-12 sigma_max). Throws BadExponent for r < 0.
double trace_abs_pow(const ComplexMatrix& m, double r);

}  // namespace hhv
