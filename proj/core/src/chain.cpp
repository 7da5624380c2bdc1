#include "hhverify/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hhverify/errors.hpp"
#include "hhverify/loewner.hpp"

namespace hhv {

double ChainReport::min_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (double x : margins) m = std::min(m, x);
  return m;
}

ChainReport make_chain_report(std::vector<std::string> names,
                              std::vector<double> values,
                              const LoewnerTolerance& tol) {
  if (names.size() != values.size() || values.size() < 2)
    throw DimensionMismatch("make_chain_report: need matching names/values, >= 2 links");
  ChainReport r;
  r.link_names = std::move(names);
  r.link_values = std::move(values);
  double scale = 0.0;
  for (double v : r.link_values) scale = std::max(scale, std::abs(v));
  r.margins.resize(r.link_values.size() - 1);
  double min_margin = std::numeric_limits<double>::infinity();
  for (size_t k = 0; k + 1 < r.link_values.size(); ++k) {
    r.margins[k] = r.link_values[k + 1] - r.link_values[k];
    min_margin = std::min(min_margin, r.margins[k]);
  }
  r.verdict = classify_margin(min_margin, scale, tol);
  return r;
}

OperatorChainReport make_operator_chain_report(
    std::vector<std::string> names, std::vector<HermitianMatrix> matrices,
    const LoewnerTolerance& tol) {
  if (names.size() != matrices.size() || matrices.size() < 2)
    throw DimensionMismatch("make_operator_chain_report: need matching names/matrices, >= 2 links");
  OperatorChainReport r;
  r.link_names = std::move(names);
  r.link_matrices = std::move(matrices);
  r.overall = fold_identity();
  for (size_t k = 0; k + 1 < r.link_matrices.size(); ++k) {
    Verdict v = loewner_leq(r.link_matrices[k], r.link_matrices[k + 1], tol);
    fold_verdict(r.overall, v);
    r.pairwise_verdicts.push_back(std::move(v));
  }
  return r;
}

}  // namespace hhv
