#include "hhverify/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "hhverify/errors.hpp"

namespace hhv {

namespace {

GaussLegendreRule compute_rule(int k) {
  if (k < 1) throw ConfigError("gauss_legendre_rule: k < 1");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<size_t>(k));
  rule.weights.resize(static_cast<size_t>(k));
  const double pi = std::acos(-1.0);
  for (int i = 0; i < (k + 1) / 2; ++i) {
    // Chebyshev-like initial guess, then Newton on P_k.
    double x = std::cos(pi * (i + 0.75) / (k + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= k; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = k * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // One more derivative evaluation at the converged node.
    double p0 = 1.0, p1 = x;
    for (int j = 2; j <= k; ++j) {
      const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = k * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<size_t>(i)] = -x;
    rule.weights[static_cast<size_t>(i)] = w;
    rule.nodes[static_cast<size_t>(k - 1 - i)] = x;
    rule.weights[static_cast<size_t>(k - 1 - i)] = w;
  }
  if (k % 2 == 1) {
    rule.nodes[static_cast<size_t>(k / 2)] = 0.0;
  }
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(int k) {
  static std::mutex mu;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_rule(k)).first;
  return it->second;
}

std::vector<std::pair<double, double>> quadrature_nodes(const QuadratureSpec& q) {
  if (q.panels < 1 || q.nodes_per_panel < 1 ||
      q.panels * q.nodes_per_panel < 4)
    throw ConfigError("quadrature: need panels x nodes_per_panel >= 4");
  const auto& rule = gauss_legendre_rule(q.nodes_per_panel);
  std::vector<std::pair<double, double>> nodes;
  nodes.reserve(static_cast<size_t>(q.panels * q.nodes_per_panel));
  const double h = 1.0 / q.panels;
  for (int p = 0; p < q.panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < q.nodes_per_panel; ++i) {
      nodes.emplace_back(mid + 0.5 * h * rule.nodes[static_cast<size_t>(i)],
                         0.5 * h * rule.weights[static_cast<size_t>(i)]);
    }
  }
  return nodes;
}

double integrate_scalar(const std::function<double(double)>& g,
                        const QuadratureSpec& q) {
  double acc = 0.0;
  for (const auto& [t, w] : quadrature_nodes(q)) acc += w * g(t);
  return acc;
}

HermitianMatrix integrate_curve(
    const std::function<HermitianMatrix(double)>& g, const QuadratureSpec& q,
    double* est_error) {
  const auto nodes = quadrature_nodes(q);
  ComplexMatrix acc;
  bool first = true;
  for (const auto& [t, w] : nodes) {
    const HermitianMatrix gt = g(t);
    if (first) {
      acc = scale(gt.mat(), cd{w, 0.0});
      first = false;
    } else {
      if (gt.n() != acc.n())
        throw QuadratureFailure("integrate_curve: integrand changed dimension");
      for (size_t i = 0; i < acc.data().size(); ++i)
        acc.data()[i] += w * gt.mat().data()[i];
    }
  }
  HermitianMatrix result{acc};
  if (est_error) {
    const HermitianMatrix refined = integrate_curve(g, q.doubled(), nullptr);
    *est_error = frobenius_norm(sub(refined, result));
  }
  return result;
}

}  // namespace hhv
