#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hhverify/types.hpp"
#include "hhverify/verdict.hpp"

namespace hhv {

/// Evaluated links of a scalar inequality chain. margins[k] =
/// link_values[k+1] - link_values[k]; the verdict Holds iff every margin
/// clears the tolerance band at the chain's scale.
struct ChainReport {
  std::vector<std::string> link_names;
  std::vector<double> link_values;
  std::vector<double> margins;
  Verdict verdict;
  std::map<std::string, double> extras;

  double min_margin() const;
};

ChainReport make_chain_report(std::vector<std::string> names,
                              std::vector<double> values,
                              const LoewnerTolerance& tol);

/// Matrix analogue: consecutive links compared in the Loewner order.
/// overall Holds iff every pairwise verdict Holds; the overall margin is
/// the minimum pairwise margin. For commuting-pair chains, scalar_route
/// carries the verdict of the independent per-eigenvalue evaluation and
/// extras["two_route_max_rel_dev"] the worst spectrum deviation between
/// the two routes.
struct OperatorChainReport {
  std::vector<std::string> link_names;
  std::vector<HermitianMatrix> link_matrices;
  std::vector<Verdict> pairwise_verdicts;
  Verdict overall;
  std::optional<Verdict> scalar_route;
  std::map<std::string, double> extras;
};

OperatorChainReport make_operator_chain_report(
    std::vector<std::string> names, std::vector<HermitianMatrix> matrices,
    const LoewnerTolerance& tol);

}  // namespace hhv
