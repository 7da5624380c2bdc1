#include "hhverify/loewner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hhverify/eig.hpp"
#include "hhverify/errors.hpp"
#include "hhverify/norms.hpp"

namespace hhv {

const char* to_string(Status s) {
  switch (s) {
    case Status::Holds: return "holds";
    case Status::Violated: return "violated";
    case Status::Inconclusive: return "inconclusive";
    case Status::Skipped: return "skipped";
  }
  return "inconclusive";
}

Status status_from_string(const std::string& s) {
  if (s == "holds") return Status::Holds;
  if (s == "violated") return Status::Violated;
  if (s == "inconclusive") return Status::Inconclusive;
  if (s == "skipped") return Status::Skipped;
  throw ConfigError("unknown verdict status '" + s + "'");
}

Verdict classify_margin(double margin, double scale, const LoewnerTolerance& tol) {
  const double band = tol.band(std::abs(scale));
  Verdict v;
  v.margin = margin;
  v.details["scale"] = std::abs(scale);
  if (margin >= -band)
    v.status = Status::Holds;
  else if (margin < -10.0 * band)
    v.status = Status::Violated;
  else
    v.status = Status::Inconclusive;
  return v;
}

Verdict fold_identity() {
  Verdict v;
  v.status = Status::Holds;
  v.margin = std::numeric_limits<double>::infinity();
  return v;
}

void fold_verdict(Verdict& acc, const Verdict& v) {
  if (v.status == Status::Violated)
    acc.status = Status::Violated;
  else if (v.status == Status::Inconclusive && acc.status == Status::Holds)
    acc.status = Status::Inconclusive;
  if (v.margin < acc.margin) {
    acc.margin = v.margin;
    const auto it = v.details.find("scale");
    if (it != v.details.end()) acc.details["scale"] = it->second;
  }
  for (const auto& [k, val] : v.details)
    if (k != "scale") acc.details.emplace(k, val);
}

Verdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                    const LoewnerTolerance& tol) {
  if (a.n() != b.n()) throw DimensionMismatch("loewner_leq: dimension mismatch");
  const double margin = min_eigenvalue(sub(b, a));
  const double scale = std::max({operator_norm(a), operator_norm(b), 1.0});
  return classify_margin(margin, scale, tol);
}

}  // namespace hhv
