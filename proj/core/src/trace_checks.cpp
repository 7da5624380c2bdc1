#include "hhverify/trace_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hhverify/calculus.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/loewner.hpp"
#include "hhverify/norms.hpp"

namespace hhv {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b,
                      const char* what) {
  if (a.n() != b.n())
    throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

void require_psd(const HermitianMatrix& h, const char* what) {
  const double lmin = min_eigenvalue(h);
  if (lmin < -1e-12 * std::max(1.0, operator_norm(h)))
    throw NotPositive(std::string(what) + ": operand is not positive semidefinite");
}

void require_commuting(const HermitianMatrix& a, const HermitianMatrix& b,
                       const char* what) {
  const double scale = frobenius_norm(a) * frobenius_norm(b);
  if (frobenius_norm(commutator(a.mat(), b.mat())) > 1e-10 * std::max(scale, 1e-30))
    throw NotCommuting(std::string(what) + ": operands do not commute");
}

// Eigenvalues of X*X, clipped at zero: the squared singular values.
std::vector<double> gram_spectrum(const ComplexMatrix& x) {
  auto lambda = eig_hermitian(HermitianMatrix(mul(adjoint(x), x))).lambda;
  for (double& l : lambda) l = std::max(l, 0.0);
  return lambda;
}

// (X*X)^s with the spectral projection convention at s = 0.
double psd_power(double lambda, double s, double cutoff) {
  if (s == 0.0) return lambda > cutoff ? 1.0 : 0.0;
  return std::pow(lambda, s);
}

}  // namespace

Verdict trace_axioms_check(const ComplexMatrix& a, const ComplexMatrix& t) {
  require_same_dim(a, t, "trace_axioms_check");

  const cd tr_a = trace(a);
  const cd tr_adj = trace(adjoint(a));
  const cd tr_at = trace(mul(a, t));
  const cd tr_ta = trace(mul(t, a));
  const double bound = schatten_norm(a, 1.0) * operator_norm(t);

  const double slack_conj = -std::abs(tr_adj - std::conj(tr_a));
  const double slack_cyclic = -std::abs(tr_at - tr_ta);
  const double slack_bound = bound - std::abs(tr_at);

  const double margin = std::min({slack_conj, slack_cyclic, slack_bound});
  const double scale = std::max({std::abs(tr_a), std::abs(tr_at), bound, 1.0});
  Verdict v = classify_margin(margin, scale, LoewnerTolerance{1e-11, 1e-12});
  v.details["lhs"] = std::abs(tr_at);
  v.details["rhs"] = bound;
  return v;
}

ChainReport psd_trace_product_chain(const HermitianMatrix& a,
                                    const HermitianMatrix& b,
                                    const LoewnerTolerance& tol) {
  require_same_dim(a.mat(), b.mat(), "psd_trace_product_chain");
  require_psd(a, "psd_trace_product_chain");
  require_psd(b, "psd_trace_product_chain");
  require_commuting(a, b, "psd_trace_product_chain");

  const HermitianMatrix ab = hermitian_part(mul(a.mat(), b.mat()));
  const auto d = eig_hermitian(ab);
  double tr_ab = 0.0, tr_sqrt = 0.0;
  for (double l : d.lambda) {
    const double lp = std::max(l, 0.0);
    tr_ab += lp;
    tr_sqrt += std::sqrt(lp);
  }
  const double right = std::sqrt(std::max(trace_real(a), 0.0) *
                                 std::max(trace_real(b), 0.0));
  return make_chain_report(
      {"sqrt(Tr(AB))", "Tr(sqrt(AB))", "sqrt(Tr(A)Tr(B))"},
      {std::sqrt(tr_ab), tr_sqrt, right}, tol);
}

Verdict trace_geo_convex_check(const CommutingPositivePair& p, int grid,
                               const LoewnerTolerance& tol) {
  if (grid < 2) throw ConfigError("trace_geo_convex_check: grid must be >= 2");
  double tr_a = 0.0, tr_b = 0.0;
  for (double x : p.a) tr_a += x;
  for (double x : p.b) tr_b += x;
  if (!(tr_a > 0.0) || !(tr_b > 0.0))
    throw NotPositive("trace_geo_convex_check: traces must be positive");

  Verdict acc = fold_identity();
  double oracle_margin = std::numeric_limits<double>::infinity();
  for (int k = 0; k < grid; ++k) {
    const double t = static_cast<double>(k) / (grid - 1);
    const double lhs = trace_real(weighted_geometric(p, t));
    const double rhs = std::pow(tr_a, t) * std::pow(tr_b, 1.0 - t);
    const double scale = std::max({lhs, rhs, 1.0});
    fold_verdict(acc, classify_margin(rhs - lhs, scale, tol));

    double lhs_scalar = 0.0;
    for (size_t i = 0; i < p.a.size(); ++i)
      lhs_scalar += std::pow(p.a[i], t) * std::pow(p.b[i], 1.0 - t);
    oracle_margin = std::min(oracle_margin, rhs - lhs_scalar);
  }
  acc.details["oracle_margin"] = oracle_margin;
  return acc;
}

TraceLogHHReport trace_log_hh_chain(const CommutingPositivePair& p,
                                    const QuadratureSpec& q,
                                    const LoewnerTolerance& tol) {
  const size_t n = p.a.size();
  double tr_a = 0.0, tr_b = 0.0, tr_ab = 0.0, tr_sqrt_ab = 0.0;
  for (size_t i = 0; i < n; ++i) {
    tr_a += p.a[i];
    tr_b += p.b[i];
    tr_ab += p.a[i] * p.b[i];
    tr_sqrt_ab += std::sqrt(p.a[i] * p.b[i]);
  }

  const auto trace_of_power_mix = [&](double ea, double eb) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i)
      s += std::pow(p.a[i], ea) * std::pow(p.b[i], eb);
    return s;
  };

  const double mid_sqrt = integrate_scalar(
      [&](double t) { return std::log(trace_of_power_mix(t, 1.0 - t)); }, q);
  const double mid_squared = integrate_scalar(
      [&](double t) {
        return std::log(trace_of_power_mix(2.0 * t, 2.0 * (1.0 - t)));
      },
      q);

  TraceLogHHReport r;
  r.sqrt_chain = make_chain_report(
      {"log Tr(sqrt(AB))", "int log Tr(A^t B^(1-t))",
       "(log Tr A + log Tr B)/2"},
      {std::log(tr_sqrt_ab), mid_sqrt, 0.5 * (std::log(tr_a) + std::log(tr_b))},
      tol);
  r.squared_chain = make_chain_report(
      {"log Tr(AB)", "int log Tr(A^2t B^2(1-t))", "log(Tr A Tr B)"},
      {std::log(tr_ab), mid_squared, std::log(tr_a) + std::log(tr_b)}, tol);
  r.overall = fold_identity();
  fold_verdict(r.overall, r.sqrt_chain.verdict);
  fold_verdict(r.overall, r.squared_chain.verdict);
  return r;
}

Verdict bhatia_davis_check(const ComplexMatrix& a, const ComplexMatrix& x,
                           const ComplexMatrix& b, double r,
                           const LoewnerTolerance& tol) {
  require_same_dim(a, x, "bhatia_davis_check");
  require_same_dim(a, b, "bhatia_davis_check");
  if (!(r >= 0.0)) throw BadExponent("bhatia_davis_check: r < 0");

  const double lhs_base = trace_abs_pow(mul(mul(adjoint(a), x), b), r);
  const double lhs = lhs_base * lhs_base;
  const double rhs = trace_abs_pow(mul(mul(a, adjoint(a)), x), r) *
                     trace_abs_pow(mul(mul(x, b), adjoint(b)), r);
  Verdict v = classify_margin(rhs - lhs, std::max({lhs, rhs, 1.0}), tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  return v;
}

Verdict trace_cauchy_schwarz(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x,
                             const LoewnerTolerance& tol) {
  require_same_dim(a, b, "trace_cauchy_schwarz");
  require_same_dim(a, x, "trace_cauchy_schwarz");

  const cd tr = trace(mul(mul(a, adjoint(b)), x));
  const double lhs = std::norm(tr);
  const double rhs = trace_abs_pow(mul(mul(a, adjoint(a)), adjoint(x)), 1.0) *
                     trace_abs_pow(mul(adjoint(x), mul(b, adjoint(b))), 1.0);
  double margin = rhs - lhs;
  double scale = std::max({lhs, rhs, 1.0});
  Verdict v = classify_margin(margin, scale, tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;

  bool x_is_identity = true;
  for (int i = 0; i < x.n() && x_is_identity; ++i)
    for (int j = 0; j < x.n() && x_is_identity; ++j)
      if (x(i, j) != (i == j ? cd{1.0, 0.0} : cd{})) x_is_identity = false;
  if (x_is_identity) {
    const double lhs_cs = std::norm(trace(mul(a, adjoint(b))));
    const double rhs_cs = trace(mul(a, adjoint(a))).real() *
                          trace(mul(b, adjoint(b))).real();
    const double margin_cs = rhs_cs - lhs_cs;
    v.details["corollary_margin"] = margin_cs;
    fold_verdict(v, classify_margin(margin_cs, std::max({lhs_cs, rhs_cs, 1.0}), tol));
  }
  return v;
}

Verdict dragomir_alpha_check(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& x, double alpha,
                             const LoewnerTolerance& tol) {
  require_same_dim(a, b, "dragomir_alpha_check");
  require_same_dim(a, x, "dragomir_alpha_check");

  const HermitianMatrix gram(mul(adjoint(x), x));
  const auto dg = eig_hermitian(gram);
  const double sigma_max = std::sqrt(std::max(dg.lambda.back(), 0.0));
  const double sigma_min = std::sqrt(std::max(dg.lambda.front(), 0.0));
  if ((alpha < 0.0 || alpha > 1.0) && sigma_min <= 1e-12 * sigma_max)
    throw SingularX("dragomir_alpha_check: |X| numerically singular with alpha outside [0, 1]");

  const double cutoff = 1e-24 * dg.lambda.back();  // on eig(X*X) scale
  const auto abs_x = apply_spectral_map(
      dg, [](double l) { return std::sqrt(std::max(l, 0.0)); });
  const auto x_pow_2a = apply_spectral_map(dg, [&](double l) {
    return psd_power(std::max(l, 0.0), alpha, cutoff);
  });
  const auto x_pow_2b = apply_spectral_map(dg, [&](double l) {
    return psd_power(std::max(l, 0.0), 1.0 - alpha, cutoff);
  });

  const double lhs = std::norm(trace(mul(mul(a, adjoint(b)), abs_x.mat())));
  const double rhs =
      trace(mul(mul(a, adjoint(a)), x_pow_2a.mat())).real() *
      trace(mul(mul(b, adjoint(b)), x_pow_2b.mat())).real();
  Verdict v = classify_margin(rhs - lhs, std::max({lhs, rhs, 1.0}), tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  return v;
}

Verdict dragomir_trace_corollary(const ComplexMatrix& x, double alpha,
                                 const LoewnerTolerance& tol) {
  const auto lambda = gram_spectrum(x);
  const double sigma_max = std::sqrt(lambda.back());
  const double sigma_min = std::sqrt(lambda.front());
  if ((alpha < 0.0 || alpha > 1.0) && sigma_min <= 1e-12 * sigma_max)
    throw SingularX("dragomir_trace_corollary: |X| numerically singular with alpha outside [0, 1]");

  const double cutoff = 1e-24 * lambda.back();
  double tr_pow_a = 0.0, tr_pow_b = 0.0;
  for (double l : lambda) {
    tr_pow_a += psd_power(l, alpha, cutoff);
    tr_pow_b += psd_power(l, 1.0 - alpha, cutoff);
  }
  const double lhs = std::norm(trace(x));
  const double rhs = tr_pow_a * tr_pow_b;
  Verdict v = classify_margin(rhs - lhs, std::max({lhs, rhs, 1.0}), tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  return v;
}

namespace {

void require_uniform_lists(size_t ns, size_t nt, int dim_first,
                           const char* what) {
  if (ns == 0 || nt == 0) throw EmptyList(std::string(what) + ": empty operand list");
  if (ns != nt) throw DimensionMismatch(std::string(what) + ": list lengths differ");
  if (dim_first <= 0) throw DimensionMismatch(std::string(what) + ": empty matrices");
}

}  // namespace

Verdict dannan_block_check(const std::vector<ComplexMatrix>& s,
                           const std::vector<ComplexMatrix>& t,
                           const LoewnerTolerance& tol) {
  require_uniform_lists(s.size(), t.size(), s.empty() ? 0 : s[0].n(),
                        "dannan_block_check");
  const int d = s[0].n();
  const int m = static_cast<int>(s.size());
  for (const auto& si : s)
    if (si.n() != d) throw DimensionMismatch("dannan_block_check: ragged S list");
  for (const auto& ti : t)
    if (ti.n() != d) throw DimensionMismatch("dannan_block_check: ragged T list");

  ComplexMatrix sum_st(d), sum_ss(d), sum_tt(d);
  for (int i = 0; i < m; ++i) {
    sum_st = add(sum_st, mul(s[static_cast<size_t>(i)], adjoint(t[static_cast<size_t>(i)])));
    sum_ss = add(sum_ss, mul(s[static_cast<size_t>(i)], adjoint(s[static_cast<size_t>(i)])));
    sum_tt = add(sum_tt, mul(t[static_cast<size_t>(i)], adjoint(t[static_cast<size_t>(i)])));
  }
  const double lhs = std::norm(trace(sum_st));
  const double rhs = trace(sum_ss).real() * trace(sum_tt).real();

  // Block route: 1 x m block rows on the m*d ambient space.
  const int nn = m * d;
  ComplexMatrix blk_s(nn), blk_t(nn);
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) {
        blk_s(r, i * d + c) = s[static_cast<size_t>(i)](r, c);
        blk_t(r, i * d + c) = t[static_cast<size_t>(i)](r, c);
      }
  const double lhs_blk = std::norm(trace(mul(blk_s, adjoint(blk_t))));
  const double rhs_blk = trace(mul(blk_s, adjoint(blk_s))).real() *
                         trace(mul(blk_t, adjoint(blk_t))).real();

  Verdict v = classify_margin(rhs - lhs, std::max({lhs, rhs, 1.0}), tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  v.details["block_route_lhs_rel_dev"] =
      std::abs(lhs - lhs_blk) / std::max({lhs, lhs_blk, 1e-30});
  v.details["block_route_rhs_rel_dev"] =
      std::abs(rhs - rhs_blk) / std::max({rhs, rhs_blk, 1e-30});
  return v;
}

Verdict dannan_positive_check(const std::vector<HermitianMatrix>& s,
                              const std::vector<HermitianMatrix>& t,
                              const LoewnerTolerance& tol) {
  require_uniform_lists(s.size(), t.size(), s.empty() ? 0 : s[0].n(),
                        "dannan_positive_check");
  const int d = s[0].n();
  double tr_st = 0.0, tr_ss = 0.0, tr_tt = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].n() != d || t[i].n() != d)
      throw DimensionMismatch("dannan_positive_check: ragged list");
    require_psd(s[i], "dannan_positive_check");
    require_psd(t[i], "dannan_positive_check");
    tr_st += trace(mul(s[i].mat(), t[i].mat())).real();
    tr_ss += trace(mul(s[i].mat(), s[i].mat())).real();
    tr_tt += trace(mul(t[i].mat(), t[i].mat())).real();
  }
  const double lhs = tr_st * tr_st;
  const double rhs = tr_ss * tr_tt;
  Verdict v = classify_margin(rhs - lhs, std::max({lhs, rhs, 1.0}), tol);
  v.details["lhs"] = lhs;
  v.details["rhs"] = rhs;
  return v;
}

Verdict dannan_pd_chain_check(const std::vector<HermitianMatrix>& s,
                              const std::vector<HermitianMatrix>& t,
                              const LoewnerTolerance& tol) {
  require_uniform_lists(s.size(), t.size(), s.empty() ? 0 : s[0].n(),
                        "dannan_pd_chain_check");
  const int d = s[0].n();

  // Hypothesis: every product S_i T_i is positive semidefinite (which in
  // particular requires it to be Hermitian, i.e. the factors commute).
  ComplexMatrix sum_st(d);
  for (size_t i = 0; i < s.size(); ++i) {
    const ComplexMatrix prod = mul(s[i].mat(), t[i].mat());
    const double pscale = std::max(frobenius_norm(prod), 1e-30);
    if (frobenius_norm(sub(prod, adjoint(prod))) > 1e-10 * pscale ||
        min_eigenvalue(hermitian_part(prod)) < -1e-10 * pscale) {
      Verdict v;
      v.status = Status::Skipped;
      v.margin = 0.0;
      v.details["hypothesis_failed_at"] = static_cast<double>(i);
      return v;
    }
    sum_st = add(sum_st, prod);
  }
  double tr_ss = 0.0, tr_tt = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    tr_ss += trace(mul(s[i].mat(), s[i].mat())).real();
    tr_tt += trace(mul(t[i].mat(), t[i].mat())).real();
  }
  const double tr_m = trace(sum_st).real();
  const double tr_m2 = trace(mul(sum_st, sum_st)).real();
  const double mid = tr_m * tr_m;
  const double rhs = tr_ss * tr_tt;
  const double margin = std::min(mid - tr_m2, rhs - mid);
  Verdict v = classify_margin(margin, std::max({tr_m2, mid, rhs, 1.0}), tol);
  v.details["lhs"] = tr_m2;
  v.details["mid"] = mid;
  v.details["rhs"] = rhs;
  return v;
}

}  // namespace hhv
