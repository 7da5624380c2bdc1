#pragma once

#include <map>
#include <optional>
#include <string>

namespace hhv {

enum class Status { Holds, Violated, Inconclusive, Skipped };

const char* to_string(Status s);
Status status_from_string(const std::string& s);

/// Tolerance band for order comparisons: band = rel * scale + abs_floor.
struct LoewnerTolerance {
  double rel = 1e-9;
  double abs_floor = 1e-12;

  double band(double scale) const { return rel * scale + abs_floor; }
};

/// Outcome of one inequality claim. margin is the smallest signed slack
/// across the claim, in the units of the compared quantity.
struct Verdict {
  Status status = Status::Inconclusive;
  double margin = 0.0;
  std::optional<std::string> witness;       // serialized inputs, when Violated
  std::map<std::string, double> details;    // named auxiliary values
};

/// Three-way classification: Holds when margin >= -band, Violated when
/// margin < -10 band, Inconclusive in between. The 10x gap separates
/// rounding slack from genuine violation.
Verdict classify_margin(double margin, double scale, const LoewnerTolerance& tol);

/// Fold v into acc: Violated dominates, then Inconclusive; margin is the
/// running minimum; details are merged. acc starts from fold_identity().
void fold_verdict(Verdict& acc, const Verdict& v);

/// Neutral element for fold_verdict: Holds with +infinity margin.
Verdict fold_identity();

}  // namespace hhv
