#pragma once

#include "hhverify/chain.hpp"
#include "hhverify/quadrature.hpp"
#include "hhverify/scalar_functions.hpp"
#include "hhverify/verdict.hpp"

namespace hhv {

/// Samples the defining inequality f(a^l b^(1-l)) <= f(a)^l f(b)^(1-l) on a
/// uniform lambda grid (grid >= 3 points). Holds iff the relative slack is
/// >= -1e-10 at every sample. details["grid"] records the grid size.
Verdict check_geo_convex(const ScalarFunctionSpec& f, double a, double b,
                         int grid);

/// Five-link chain for a geometrically convex f on 0 < a < b:
///   f(sqrt(ab))
///   <= integral_0^1 sqrt(f(t_l) f(t_(1-l))) dl      (t_l = a^l b^(1-l))
///   <= integral_0^1 f(t_l) dl
///   <= L(f(a), f(b))
///   <= (f(a) + f(b))/2.
/// Both integrals use the lambda parameterization t = a^l b^(1-l), which
/// absorbs the 1/t weight of the [a, b] form.
ChainReport hh_chain_basic(const ScalarFunctionSpec& f, double a, double b,
                           const QuadratureSpec& q,
                           const LoewnerTolerance& tol = {});

/// Pointwise refinement at a given lambda:
///   f(sqrt(ab)) <= sqrt(f(a^l b^(1-l)) f(a^(1-l) b^l)) <= sqrt(f(a) f(b)),
/// plus the same chain with the lambda-integrated middle term. The report
/// carries the pointwise links; extras["middle_integrated"] holds the
/// integrated middle and the verdict covers both chains.
ChainReport hh_refinement(const ScalarFunctionSpec& f, double a, double b,
                          double lambda, const QuadratureSpec& q,
                          const LoewnerTolerance& tol = {});

/// Integrated middle term of the refinement chain, exposed for property
/// checks: integral_0^1 sqrt(f(a^l b^(1-l)) f(a^(1-l) b^l)) dl.
double hh_refinement_integrated_middle(const ScalarFunctionSpec& f, double a,
                                       double b, const QuadratureSpec& q);

/// Five-link quarter-point chain:
///   f(sqrt(ab))
///   <= sqrt(f(a^(3/4) b^(1/4)) f(a^(1/4) b^(3/4)))
///   <= exp(integral_0^1 log f(a^l b^(1-l)) dl)
///   <= sqrt(f(sqrt(ab))) f(a)^(1/4) f(b)^(1/4)
///   <= sqrt(f(a) f(b)).
ChainReport hh_quarter_chain(const ScalarFunctionSpec& f, double a, double b,
                             const QuadratureSpec& q,
                             const LoewnerTolerance& tol = {});

/// Midpoint-convexity probe of F = log o f o exp on a uniform grid over
/// [log a, log b]; returns the minimum slack F(x)+F(y)-2F((x+y)/2).
double log_exp_midpoint_convexity_margin(const ScalarFunctionSpec& f, double a,
                                         double b, int grid);

}  // namespace hhv
