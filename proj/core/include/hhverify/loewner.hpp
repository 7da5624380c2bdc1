#pragma once

#include "hhverify/types.hpp"
#include "hhverify/verdict.hpp"

namespace hhv {

/// Tests a <= b in the Loewner order. margin = lambda_min(b - a); the band
/// scale is max(||a||, ||b||, 1) in operator norm.
Verdict loewner_leq(const HermitianMatrix& a, const HermitianMatrix& b,
                    const LoewnerTolerance& tol = {});

}  // namespace hhv
