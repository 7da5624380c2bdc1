#pragma once

#include "hhverify/commuting.hpp"
#include "hhverify/rng.hpp"
#include "hhverify/types.hpp"

namespace hhv {

/// Haar-distributed unitary: complex Gaussian matrix, modified Gram-Schmidt
/// orthonormalization (run twice), which leaves the triangular factor's
/// diagonal real positive. ||U U* - I||_F <= 1e-12 n.
ComplexMatrix gen_random_unitary(CounterRng& rng, int n);

/// Standard complex Gaussian entries, CN(0, 1).
ComplexMatrix gen_complex(CounterRng& rng, int n);

/// Random Hermitian: (G + G*)/2 of a complex Gaussian G.
HermitianMatrix gen_hermitian(CounterRng& rng, int n);

/// Shared Haar basis with two log-uniform spectra in [lo, hi].
CommutingPositivePair gen_commuting_pair(CounterRng& rng, int n, double lo,
                                         double hi);

/// U diag(log-uniform in [lo, hi]) U*; positive definite by construction.
HermitianMatrix gen_psd(CounterRng& rng, int n, double lo, double hi);

}  // namespace hhv
