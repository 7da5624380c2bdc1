#include "hhverify/operator_chains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hhverify/calculus.hpp"
#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/loewner.hpp"
#include "hhverify/means.hpp"
#include "hhverify/norms.hpp"

namespace hhv {

namespace {

double positive_eval(const ScalarFunctionSpec& f, double x) {
  if (!f.domain.contains(x))
    throw DomainViolation("spectral point " + std::to_string(x) +
                          " outside domain of " + f.name);
  const double y = f.eval(x);
  if (!(y > 0.0))
    throw DomainViolation(f.name + " not positive at spectral point " +
                          std::to_string(x));
  return y;
}

std::function<double(double)> checked_map(const ScalarFunctionSpec& f) {
  return [f](double x) {
    if (!f.domain.contains(x))
      throw DomainViolation("spectral point " + std::to_string(x) +
                            " outside domain of " + f.name);
    return f.eval(x);
  };
}

// Relative multiset deviation between the spectrum of m and the expected
// per-eigenvalue values, both sorted ascending.
double spectrum_deviation(const HermitianMatrix& m, std::vector<double> expected) {
  auto lambda = eig_hermitian(m).lambda;
  std::sort(expected.begin(), expected.end());
  double scale = 1e-30;
  for (double v : expected) scale = std::max(scale, std::abs(v));
  double dev = 0.0;
  for (size_t i = 0; i < expected.size(); ++i)
    dev = std::max(dev, std::abs(lambda[i] - expected[i]));
  return dev / scale;
}

// Scalar-route verdict for a chain of per-eigenvalue link values:
// pairwise classification mirroring loewner_leq's scale convention.
Verdict scalar_chain_verdict(const std::vector<std::vector<double>>& links,
                             const LoewnerTolerance& tol) {
  Verdict acc = fold_identity();
  for (size_t k = 0; k + 1 < links.size(); ++k) {
    double margin = std::numeric_limits<double>::infinity();
    double scale = 1.0;
    for (size_t i = 0; i < links[k].size(); ++i) {
      margin = std::min(margin, links[k + 1][i] - links[k][i]);
      scale = std::max({scale, std::abs(links[k][i]), std::abs(links[k + 1][i])});
    }
    fold_verdict(acc, classify_margin(margin, scale, tol));
  }
  return acc;
}

void attach_two_route(OperatorChainReport& r,
                      const std::vector<std::vector<double>>& scalar_links,
                      const LoewnerTolerance& tol) {
  double dev = 0.0;
  for (size_t k = 0; k < r.link_matrices.size(); ++k)
    dev = std::max(dev, spectrum_deviation(r.link_matrices[k], scalar_links[k]));
  r.extras["two_route_max_rel_dev"] = dev;
  r.scalar_route = scalar_chain_verdict(scalar_links, tol);
}

struct MaterializedPair {
  HermitianMatrix a, b;
  SpectralDecomposition da, db;
};

MaterializedPair materialize(const CommutingPositivePair& p) {
  MaterializedPair m;
  m.a = p.matrix_a();
  m.b = p.matrix_b();
  m.da = eig_hermitian(m.a);
  m.db = eig_hermitian(m.b);
  return m;
}

HermitianMatrix weighted_product(const MaterializedPair& m, double t) {
  const auto at = apply_spectral_map(m.da, [t](double x) { return std::pow(x, t); });
  const auto b1t =
      apply_spectral_map(m.db, [t](double x) { return std::pow(x, 1.0 - t); });
  return hermitian_part(mul(at.mat(), b1t.mat()));
}

HermitianMatrix psd_sqrt(const HermitianMatrix& h) {
  return apply_spectral_map(eig_hermitian(h),
                            [](double x) { return std::sqrt(std::max(x, 0.0)); });
}

void require_spectra_in_domain(const ScalarFunctionSpec& f,
                               const CommutingPositivePair& p) {
  for (double x : p.a) (void)positive_eval(f, x);
  for (double x : p.b) (void)positive_eval(f, x);
}

}  // namespace

Verdict check_operator_geo_convex(const ScalarFunctionSpec& f,
                                  const CommutingPositivePair& p, int grid,
                                  const LoewnerTolerance& tol) {
  if (grid < 2) throw ConfigError("check_operator_geo_convex: grid must be >= 2");
  require_spectra_in_domain(f, p);
  const auto m = materialize(p);
  const auto fmap = checked_map(f);

  Verdict acc = fold_identity();
  double oracle_margin = std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double l = static_cast<double>(k) / (grid - 1);
    const HermitianMatrix gl = weighted_product(m, l);
    const HermitianMatrix lhs = apply_spectral_map(eig_hermitian(gl), fmap);
    // The commuting product f(A)^l f(B)^(1-l) is assembled in the shared
    // eigenbasis: a dense product of the factors would carry rounding on
    // the scale of ||f(A)^l|| ||f(B)^(1-l)||, which for spread spectra
    // dwarfs the product norm and the comparison band.
    std::vector<double> lhs_scalar(p.a.size()), rhs_scalar(p.a.size());
    for (size_t i = 0; i < p.a.size(); ++i) {
      lhs_scalar[i] = f.eval(std::pow(p.a[i], l) * std::pow(p.b[i], 1.0 - l));
      rhs_scalar[i] = std::pow(positive_eval(f, p.a[i]), l) *
                      std::pow(positive_eval(f, p.b[i]), 1.0 - l);
      oracle_margin = std::min(oracle_margin, rhs_scalar[i] - lhs_scalar[i]);
    }
    const HermitianMatrix rhs = pair_diagonal(p, rhs_scalar);
    fold_verdict(acc, loewner_leq(lhs, rhs, tol));
    dev = std::max(dev, spectrum_deviation(lhs, lhs_scalar));
  }
  acc.details["oracle_margin"] = oracle_margin;
  acc.details["two_route_max_rel_dev"] = dev;
  return acc;
}

OperatorChainReport hh_operator_log_chain(const ScalarFunctionSpec& f,
                                          const CommutingPositivePair& p,
                                          const QuadratureSpec& q,
                                          const LoewnerTolerance& tol) {
  require_spectra_in_domain(f, p);
  const auto m = materialize(p);
  const auto logf = [&f](double x) { return std::log(positive_eval(f, x)); };

  const HermitianMatrix ab = hermitian_part(mul(m.a.mat(), m.b.mat()));
  const HermitianMatrix left = apply_spectral_map(
      eig_hermitian(ab), [&](double x) {
        if (!(x > 0.0))
          throw DomainViolation("hh_operator_log_chain: AB lost positivity");
        return logf(std::sqrt(x));
      });

  const HermitianMatrix middle = integrate_curve(
      [&](double t) {
        return apply_spectral_map(eig_hermitian(weighted_product(m, t)), logf);
      },
      q);

  std::vector<double> right_diag(p.a.size());
  for (size_t i = 0; i < p.a.size(); ++i)
    right_diag[i] = 0.5 * (logf(p.a[i]) + logf(p.b[i]));
  const HermitianMatrix right = pair_diagonal(p, right_diag);

  OperatorChainReport r = make_operator_chain_report(
      {"log f(sqrt(AB))", "int log f(A^t B^(1-t))", "log sqrt(f(A)f(B))"},
      {left, middle, right}, tol);

  std::vector<std::vector<double>> scalar_links(3, std::vector<double>(p.a.size()));
  for (size_t i = 0; i < p.a.size(); ++i) {
    const double ai = p.a[i], bi = p.b[i];
    scalar_links[0][i] = logf(std::sqrt(ai * bi));
    scalar_links[1][i] = integrate_scalar(
        [&](double t) { return logf(std::pow(ai, t) * std::pow(bi, 1.0 - t)); }, q);
    scalar_links[2][i] = right_diag[i];
  }
  attach_two_route(r, scalar_links, tol);
  return r;
}

OperatorChainReport hh_operator_unlogged_chain(const ScalarFunctionSpec& f,
                                               const CommutingPositivePair& p,
                                               const QuadratureSpec& q,
                                               const LoewnerTolerance& tol) {
  require_spectra_in_domain(f, p);
  const auto fmap = checked_map(f);

  const HermitianMatrix ab =
      hermitian_part(mul(p.matrix_a().mat(), p.matrix_b().mat()));
  const HermitianMatrix left = apply_spectral_map(
      eig_hermitian(ab), [&](double x) {
        return fmap(std::sqrt(std::max(x, 0.0)));
      });

  // The integrand's commuting product square root is taken per eigenvalue
  // in the shared basis; the factors' norms can multiply far beyond the
  // product's norm, so a dense product would drown the comparison band.
  const HermitianMatrix middle = integrate_curve(
      [&](double t) {
        std::vector<double> d(p.a.size());
        for (size_t i = 0; i < p.a.size(); ++i) {
          const double st = std::pow(p.a[i], t) * std::pow(p.b[i], 1.0 - t);
          const double s1t = std::pow(p.a[i], 1.0 - t) * std::pow(p.b[i], t);
          d[i] = std::sqrt(fmap(st) * fmap(s1t));
        }
        return pair_diagonal(p, d);
      },
      q);

  std::vector<double> right_diag(p.a.size());
  for (size_t i = 0; i < p.a.size(); ++i)
    right_diag[i] = std::sqrt(positive_eval(f, p.a[i]) * positive_eval(f, p.b[i]));
  const HermitianMatrix right = pair_diagonal(p, right_diag);

  OperatorChainReport r = make_operator_chain_report(
      {"f(sqrt(AB))", "int sqrt(f(A^t B^(1-t)) f(A^(1-t) B^t))",
       "sqrt(f(A)f(B))"},
      {left, middle, right}, tol);

  std::vector<std::vector<double>> scalar_links(3, std::vector<double>(p.a.size()));
  for (size_t i = 0; i < p.a.size(); ++i) {
    const double ai = p.a[i], bi = p.b[i];
    scalar_links[0][i] = f.eval(std::sqrt(ai * bi));
    scalar_links[1][i] = integrate_scalar(
        [&](double t) {
          return std::sqrt(f.eval(std::pow(ai, t) * std::pow(bi, 1.0 - t)) *
                           f.eval(std::pow(ai, 1.0 - t) * std::pow(bi, t)));
        },
        q);
    scalar_links[2][i] = right_diag[i];
  }
  attach_two_route(r, scalar_links, tol);
  return r;
}

OperatorChainReport exp_special_chain(const CommutingPositivePair& p,
                                      const QuadratureSpec& q,
                                      const LoewnerTolerance& tol) {
  const auto m = materialize(p);

  const HermitianMatrix left =
      psd_sqrt(hermitian_part(mul(m.a.mat(), m.b.mat())));
  const HermitianMatrix middle =
      integrate_curve([&](double t) { return weighted_product(m, t); }, q);
  const HermitianMatrix right = scale(add(m.a, m.b), 0.5);

  OperatorChainReport r = make_operator_chain_report(
      {"sqrt(AB)", "int A^t B^(1-t)", "(A+B)/2"}, {left, middle, right}, tol);

  const HermitianMatrix closed = weighted_geometric_integral_closed_form(p);
  r.extras["closed_form_rel_dev"] =
      frobenius_norm(sub(middle, closed)) /
      std::max(frobenius_norm(closed), 1e-30);

  std::vector<std::vector<double>> scalar_links(3, std::vector<double>(p.a.size()));
  for (size_t i = 0; i < p.a.size(); ++i) {
    scalar_links[0][i] = std::sqrt(p.a[i] * p.b[i]);
    scalar_links[1][i] = log_mean(p.a[i], p.b[i]);
    scalar_links[2][i] = 0.5 * (p.a[i] + p.b[i]);
  }
  attach_two_route(r, scalar_links, tol);
  return r;
}

OperatorChainReport operator_convex_hh_chain(const ScalarFunctionSpec& f,
                                             const HermitianMatrix& a,
                                             const HermitianMatrix& b,
                                             const QuadratureSpec& q,
                                             const LoewnerTolerance& tol) {
  if (!f.operator_convex)
    throw ConfigError("operator_convex_hh_chain: " + f.name +
                      " lacks the operator_convex flag");
  if (a.n() != b.n())
    throw DimensionMismatch("operator_convex_hh_chain: dimension mismatch");
  const auto fmap = checked_map(f);
  const auto eval_at = [&](const HermitianMatrix& h) {
    return apply_spectral_map(eig_hermitian(h), fmap);
  };
  const auto blend = [&](double t) {  // t A + (1-t) B
    return add(scale(a, t), scale(b, 1.0 - t));
  };

  const HermitianMatrix f_mid = eval_at(blend(0.5));
  const HermitianMatrix fa = eval_at(a);
  const HermitianMatrix fb = eval_at(b);

  // 2 int_{1/4}^{3/4} f(tA + (1-t)B) dt, mapped onto [0, 1].
  const HermitianMatrix quarter_integral = integrate_curve(
      [&](double s) { return eval_at(blend(0.25 + 0.5 * s)); }, q);
  const HermitianMatrix quarter_points =
      scale(add(eval_at(blend(0.75)), eval_at(blend(0.25))), 0.5);
  const HermitianMatrix full_integral =
      integrate_curve([&](double t) { return eval_at(blend(1.0 - t)); }, q);
  const HermitianMatrix mixed =
      scale(add(f_mid, scale(add(fa, fb), 0.5)), 0.5);
  const HermitianMatrix right = scale(add(fa, fb), 0.5);

  OperatorChainReport r = make_operator_chain_report(
      {"f((A+B)/2)", "2 int_{1/4}^{3/4} f", "[f((3A+B)/4)+f((A+3B)/4)]/2",
       "int_0^1 f", "[f((A+B)/2)+(f(A)+f(B))/2]/2", "(f(A)+f(B))/2"},
      {f_mid, quarter_integral, quarter_points, full_integral, mixed, right},
      tol);

  if (f.name == "x^2") {
    const HermitianMatrix d = sub(b, a);
    const HermitianMatrix asq{mul(a.mat(), a.mat())};
    const HermitianMatrix cross{
        scale(add(mul(a.mat(), d.mat()), mul(d.mat(), a.mat())), cd{0.5, 0.0})};
    const HermitianMatrix dsq{scale(mul(d.mat(), d.mat()), cd{1.0 / 3.0, 0.0})};
    const HermitianMatrix closed = add(add(asq, cross), dsq);
    r.extras["closed_form_rel_dev"] =
        frobenius_norm(sub(full_integral, closed)) /
        std::max(frobenius_norm(closed), 1e-30);
  }
  return r;
}

Verdict agm_inequality_check(const HermitianMatrix& a, const HermitianMatrix& b,
                             double nu, const LoewnerTolerance& tol) {
  const HermitianMatrix lhs = agm_weighted_mean(a, b, nu);
  const HermitianMatrix rhs = add(scale(a, 1.0 - nu), scale(b, nu));
  return loewner_leq(lhs, rhs, tol);
}

Verdict closure_check(ClosureKind kind, const ScalarFunctionSpec& f,
                      const ScalarFunctionSpec& g, const CommutingPositivePair& p,
                      int grid, const LoewnerTolerance& tol,
                      double scalar_multiple) {
  if (grid < 2) throw ConfigError("closure_check: grid must be >= 2");

  if (kind == ClosureKind::NormMcintosh) {
    const auto m = materialize(p);
    const double na = operator_norm(m.a);
    const double nb = operator_norm(m.b);
    Verdict acc = fold_identity();
    double oracle_margin = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid; ++k) {
      const double l = static_cast<double>(k) / (grid - 1);
      const double lhs = operator_norm(weighted_product(m, l));
      const double rhs = std::pow(na, l) * std::pow(nb, 1.0 - l);
      const double scale = std::max({lhs, rhs, 1.0});
      fold_verdict(acc, classify_margin(rhs - lhs, scale,
                                        LoewnerTolerance{1e-10, 1e-10}));
      // Per-eigenvalue oracle: the norms are the extreme spectrum points.
      double max_a = 0.0, max_b = 0.0, max_g = 0.0;
      for (size_t i = 0; i < p.a.size(); ++i) {
        max_a = std::max(max_a, p.a[i]);
        max_b = std::max(max_b, p.b[i]);
        max_g = std::max(max_g, std::pow(p.a[i], l) * std::pow(p.b[i], 1.0 - l));
      }
      oracle_margin = std::min(
          oracle_margin, std::pow(max_a, l) * std::pow(max_b, 1.0 - l) - max_g);
    }
    acc.details["oracle_margin"] = oracle_margin;
    return acc;
  }

  ScalarFunctionSpec h;
  switch (kind) {
    case ClosureKind::Product: {
      auto fe = f.eval, ge = g.eval;
      h.name = f.name + "*" + g.name;
      h.eval = [fe, ge](double x) { return fe(x) * ge(x); };
      h.domain = f.domain;
      break;
    }
    case ClosureKind::TTimesF: {
      auto fe = f.eval;
      h.name = "t*" + f.name;
      h.eval = [fe](double x) { return x * fe(x); };
      h.domain = f.domain;
      break;
    }
    case ClosureKind::ScalarMultiple: {
      if (!(scalar_multiple > 0.0))
        throw ConfigError("closure_check: scalar multiple must be > 0");
      auto fe = f.eval;
      const double mm = scalar_multiple;
      h.name = std::to_string(scalar_multiple) + "*" + f.name;
      h.eval = [fe, mm](double x) { return mm * fe(x); };
      h.domain = f.domain;
      break;
    }
    case ClosureKind::Sum: {
      auto fe = f.eval, ge = g.eval;
      h.name = f.name + "+" + g.name;
      h.eval = [fe, ge](double x) { return fe(x) + ge(x); };
      h.domain = f.domain;
      break;
    }
    default:
      throw ConfigError("closure_check: unknown kind");
  }

  const auto m = materialize(p);
  const auto hmap = checked_map(h);
  Verdict acc = fold_identity();
  double oracle_margin = std::numeric_limits<double>::infinity();
  double margin_literal = std::numeric_limits<double>::infinity();
  double scale_literal = 1.0;
  for (int k = 0; k < grid; ++k) {
    const double l = static_cast<double>(k) / (grid - 1);
    const HermitianMatrix gl = weighted_product(m, l);
    const HermitianMatrix lhs = apply_spectral_map(eig_hermitian(gl), hmap);
    // Shared-basis assembly of the commuting bound, as in
    // check_operator_geo_convex.
    std::vector<double> ha_vals(p.a.size()), hb_vals(p.a.size());
    std::vector<double> rhs_scalar(p.a.size());
    for (size_t i = 0; i < p.a.size(); ++i) {
      ha_vals[i] = std::pow(positive_eval(h, p.a[i]), l);
      hb_vals[i] = std::pow(positive_eval(h, p.b[i]), 1.0 - l);
      rhs_scalar[i] = ha_vals[i] * hb_vals[i];
      const double li = h.eval(std::pow(p.a[i], l) * std::pow(p.b[i], 1.0 - l));
      oracle_margin = std::min(oracle_margin, rhs_scalar[i] - li);
    }
    const HermitianMatrix rhs = pair_diagonal(p, rhs_scalar);
    fold_verdict(acc, loewner_leq(lhs, rhs, tol));

    if (kind == ClosureKind::Sum) {
      std::vector<double> lit_vals(p.a.size());
      for (size_t i = 0; i < p.a.size(); ++i)
        lit_vals[i] = ha_vals[i] + hb_vals[i];
      const HermitianMatrix rhs_lit = pair_diagonal(p, lit_vals);
      const Verdict lit = loewner_leq(lhs, rhs_lit, tol);
      margin_literal = std::min(margin_literal, lit.margin);
      scale_literal = std::max(
          {scale_literal, operator_norm(lhs), operator_norm(rhs_lit)});
    }
  }
  acc.details["oracle_margin"] = oracle_margin;
  if (kind == ClosureKind::Sum) {
    acc.details["margin_multiplicative"] = acc.margin;
    acc.details["margin_shak_literal"] = margin_literal;
    acc.details["scale_shak_literal"] = scale_literal;
  }
  return acc;
}

}  // namespace hhv
