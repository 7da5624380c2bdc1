#pragma once

#include <vector>

#include "hhverify/chain.hpp"
#include "hhverify/commuting.hpp"
#include "hhverify/quadrature.hpp"

namespace hhv {

/// Trace axioms: Tr(A*) = conj(Tr A), Tr(AT) = Tr(TA) and
/// |Tr(AT)| <= ||A||_1 ||T||. All claims to 1e-11 relative.
Verdict trace_axioms_check(const ComplexMatrix& a, const ComplexMatrix& t);

/// For commuting positive semidefinite A, B:
/// sqrt(Tr(AB)) <= Tr(sqrt(AB)) <= sqrt(Tr(A) Tr(B)).
ChainReport psd_trace_product_chain(const HermitianMatrix& a,
                                    const HermitianMatrix& b,
                                    const LoewnerTolerance& tol = {});

/// Trace is geometrically convex on commuting positive pairs:
/// Tr(A^t B^(1-t)) <= (Tr A)^t (Tr B)^(1-t) on a uniform t grid.
Verdict trace_geo_convex_check(const CommutingPositivePair& p, int grid,
                               const LoewnerTolerance& tol = {});

/// The two logarithmic trace chains for a commuting positive pair:
///   log Tr(sqrt(AB)) <= int_0^1 log Tr(A^t B^(1-t)) dt
///                    <= (log Tr A + log Tr B)/2
/// and the squared variant
///   log Tr(AB) <= int_0^1 log Tr(A^2t B^2(1-t)) dt <= log(Tr A Tr B).
struct TraceLogHHReport {
  ChainReport sqrt_chain;
  ChainReport squared_chain;
  Verdict overall;
};
TraceLogHHReport trace_log_hh_chain(const CommutingPositivePair& p,
                                    const QuadratureSpec& q,
                                    const LoewnerTolerance& tol = {});

/// (Tr|A* X B|^r)^2 <= Tr(|A A* X|^r) Tr(|X B B*|^r) for r >= 0.
Verdict bhatia_davis_check(const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& b, double r,
                           const LoewnerTolerance& tol = {});

/// |Tr(A B* X)|^2 <= Tr(|A A* X*|) Tr(|X* B B*|). When X is exactly the
/// identity the exact Cauchy-Schwarz form |Tr(A B*)|^2 <= Tr(A A*) Tr(B B*)
/// is checked as well (details["corollary_margin"]).
Verdict trace_cauchy_schwarz(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x,
                             const LoewnerTolerance& tol = {});

/// |Tr(A B* |X|)|^2 <= Tr(|A*|^2 |X|^2a) Tr(|B*|^2 |X|^2(1-a)), any real
/// alpha. alpha outside [0, 1] requires |X| nonsingular: throws SingularX
/// when lambda_min(|X|) <= 1e-12 ||X||.
Verdict dragomir_alpha_check(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x, double alpha,
                             const LoewnerTolerance& tol = {});

/// The A = B = I specialization: |Tr X|^2 <= Tr(|X|^2a) Tr(|X|^2(1-a)).
Verdict dragomir_trace_corollary(const ComplexMatrix& x, double alpha,
                                 const LoewnerTolerance& tol = {});

/// |Tr(sum S_i T_i*)|^2 <= Tr(sum S_i S_i*) Tr(sum T_i T_i*) for arbitrary
/// operator lists. Both the direct evaluation and the block-matrix route
/// (1 x n block rows on the n dim ambient space) are computed;
/// details["block_route_lhs_rel_dev"] / ["block_route_rhs_rel_dev"] record
/// their relative disagreement.
Verdict dannan_block_check(const std::vector<ComplexMatrix>& s,
                           const std::vector<ComplexMatrix>& t,
                           const LoewnerTolerance& tol = {});

/// Positive-operator corollary:
/// (Tr sum S_i T_i)^2 <= Tr(sum S_i^2) Tr(sum T_i^2).
Verdict dannan_positive_check(const std::vector<HermitianMatrix>& s,
                              const std::vector<HermitianMatrix>& t,
                              const LoewnerTolerance& tol = {});

/// Conditional chain requiring every product S_i T_i >= 0:
/// Tr((sum S_i T_i)^2) <= (Tr sum S_i T_i)^2 <= Tr(sum S_i^2) Tr(sum T_i^2).
/// Returns Skipped when the hypothesis fails on the given instance.
Verdict dannan_pd_chain_check(const std::vector<HermitianMatrix>& s,
                              const std::vector<HermitianMatrix>& t,
                              const LoewnerTolerance& tol = {});

}  // namespace hhv
