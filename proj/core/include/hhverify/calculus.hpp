#pragma once

#include "hhverify/eig.hpp"
#include "hhverify/scalar_functions.hpp"
#include "hhverify/types.hpp"

namespace hhv {

/// U diag(f(lambda_i)) U*. Throws DomainViolation if any eigenvalue lies
/// outside f's domain.
HermitianMatrix apply_scalar_function(const ScalarFunctionSpec& f,
                                      const SpectralDecomposition& d);

/// Same, applying a raw map with no domain check.
HermitianMatrix apply_spectral_map(const SpectralDecomposition& d,
                                   const std::function<double(double)>& f);

/// Convenience: decompose h and apply f.
HermitianMatrix apply_scalar_function(const ScalarFunctionSpec& f,
                                      const HermitianMatrix& h);

/// h^p through a fresh spectral decomposition. Negative or fractional p
/// require positive spectrum (DomainViolation otherwise).
HermitianMatrix matrix_power(const HermitianMatrix& h, double p);

/// |M| = (M* M)^(1/2).
HermitianMatrix abs_op(const ComplexMatrix& m);

/// Singular values of m (descending): square roots of eig(M* M).
std::vector<double> singular_values(const ComplexMatrix& m);

}  // namespace hhv
