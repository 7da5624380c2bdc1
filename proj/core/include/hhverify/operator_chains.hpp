#pragma once

#include "hhverify/chain.hpp"
#include "hhverify/commuting.hpp"
#include "hhverify/quadrature.hpp"
#include "hhverify/scalar_functions.hpp"

namespace hhv {

/// Operator geometric convexity test on a commuting pair:
/// f(A^l B^(1-l)) <= f(A)^l f(B)^(1-l) in the Loewner order at every point
/// of a uniform lambda grid. The matrix route works on the materialized
/// operators with fresh spectral decompositions; details carry the
/// per-eigenvalue oracle margin and the two-route spectrum deviation.
Verdict check_operator_geo_convex(const ScalarFunctionSpec& f,
                                  const CommutingPositivePair& p, int grid,
                                  const LoewnerTolerance& tol = {});

/// log f(sqrt(AB)) <= int_0^1 log f(A^t B^(1-t)) dt <= log sqrt(f(A) f(B)).
/// Requires f positive on both spectra.
OperatorChainReport hh_operator_log_chain(const ScalarFunctionSpec& f,
                                          const CommutingPositivePair& p,
                                          const QuadratureSpec& q,
                                          const LoewnerTolerance& tol = {});

/// f(sqrt(AB)) <= int_0^1 sqrt(f(A^t B^(1-t)) f(A^(1-t) B^t)) dt
///             <= sqrt(f(A) f(B)).
OperatorChainReport hh_operator_unlogged_chain(const ScalarFunctionSpec& f,
                                               const CommutingPositivePair& p,
                                               const QuadratureSpec& q,
                                               const LoewnerTolerance& tol = {});

/// sqrt(AB) <= int_0^1 A^t B^(1-t) dt <= (A + B)/2. The middle link is also
/// compared against the logarithmic-mean closed form;
/// extras["closed_form_rel_dev"] records the relative Frobenius deviation.
OperatorChainReport exp_special_chain(const CommutingPositivePair& p,
                                      const QuadratureSpec& q,
                                      const LoewnerTolerance& tol = {});

/// Six-link chain for an operator convex f (x^2 on Hermitian pairs, x^-1 on
/// positive definite pairs); the operands need not commute:
///   f((A+B)/2)
///   <= 2 int_{1/4}^{3/4} f(tA + (1-t)B) dt
///   <= [f((3A+B)/4) + f((A+3B)/4)]/2
///   <= int_0^1 f((1-t)A + tB) dt
///   <= [f((A+B)/2) + (f(A)+f(B))/2]/2
///   <= (f(A)+f(B))/2.
/// For f = x^2, extras["closed_form_rel_dev"] compares the fourth link with
/// A^2 + (AD + DA)/2 + D^2/3, D = B - A.
OperatorChainReport operator_convex_hh_chain(const ScalarFunctionSpec& f,
                                             const HermitianMatrix& a,
                                             const HermitianMatrix& b,
                                             const QuadratureSpec& q,
                                             const LoewnerTolerance& tol = {});

/// Arithmetic-geometric mean inequality in the operator order:
/// A^(1/2) (A^(-1/2) B A^(-1/2))^nu A^(1/2) <= (1-nu) A + nu B.
Verdict agm_inequality_check(const HermitianMatrix& a, const HermitianMatrix& b,
                             double nu, const LoewnerTolerance& tol = {});

enum class ClosureKind { Sum, ScalarMultiple, Product, TTimesF, NormMcintosh };

/// Closure properties of operator geometrically convex functions on a
/// commuting pair, checked on a uniform lambda grid.
///   Product:        h = f g
///   TTimesF:        h(t) = t f(t)
///   ScalarMultiple: h = m f (m > 0)
///   NormMcintosh:   ||A^l B^(1-l)|| <= ||A||^l ||B||^(1-l)
///   Sum:            h = f + g, evaluated under BOTH readings of the
///     bounding inequality: the literal display (h(A))^l + (h(B))^(1-l)
///     and the multiplicative reading (h(A))^l (h(B))^(1-l). The returned
///     verdict classifies the multiplicative reading; details carry
///     margin_multiplicative / margin_shak_literal with their scales so
///     callers can classify each reading separately.
Verdict closure_check(ClosureKind kind, const ScalarFunctionSpec& f,
                      const ScalarFunctionSpec& g, const CommutingPositivePair& p,
                      int grid, const LoewnerTolerance& tol = {},
                      double scalar_multiple = 2.0);

}  // namespace hhv
