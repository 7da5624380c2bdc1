#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "hhverify/types.hpp"

namespace hhv {

/// Composite Gauss-Legendre rule over [0, 1].
struct QuadratureSpec {
  int panels = 8;
  int nodes_per_panel = 8;

  QuadratureSpec doubled() const { return {2 * panels, nodes_per_panel}; }
};

/// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre polynomial.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre_rule(int k);

/// Composite nodes (t, w) on [0, 1]. Exact for polynomials of degree
/// <= 2 nodes_per_panel - 1 on each panel. Throws ConfigError if the
/// total node count is below 4.
std::vector<std::pair<double, double>> quadrature_nodes(const QuadratureSpec& q);

double integrate_scalar(const std::function<double(double)>& g,
                        const QuadratureSpec& q);

/// Matrix-valued integral over [0, 1]; the result is symmetrized.
/// If est_error is non-null it receives ||result(q) - result(q doubled)||_F.
HermitianMatrix integrate_curve(
    const std::function<HermitianMatrix(double)>& g, const QuadratureSpec& q,
    double* est_error = nullptr);

}  // namespace hhv
