#include "hhverify/generators.hpp"

#include <cmath>

#include "hhverify/errors.hpp"

namespace hhv {

ComplexMatrix gen_complex(CounterRng& rng, int n) {
  ComplexMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto [re, im] = rng.complex_gaussian();
      m(i, j) = cd{re, im};
    }
  return m;
}

ComplexMatrix gen_random_unitary(CounterRng& rng, int n) {
  if (n < 1) throw ConfigError("gen_random_unitary: n < 1");
  ComplexMatrix g = gen_complex(rng, n);
  // Modified Gram-Schmidt over columns, two passes per column.
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        cd proj{};
        for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
        for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
      }
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) g(i, j) /= norm;
  }
  return g;
}

HermitianMatrix gen_hermitian(CounterRng& rng, int n) {
  return HermitianMatrix(gen_complex(rng, n));
}

CommutingPositivePair gen_commuting_pair(CounterRng& rng, int n, double lo,
                                         double hi) {
  if (!(lo > 0.0) || !(hi >= lo))
    throw ConfigError("gen_commuting_pair: need 0 < lo <= hi");
  ComplexMatrix u = gen_random_unitary(rng, n);
  std::vector<double> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
  for (auto& x : a) x = rng.log_uniform(lo, hi);
  for (auto& x : b) x = rng.log_uniform(lo, hi);
  return make_commuting_pair(std::move(u), std::move(a), std::move(b));
}

HermitianMatrix gen_psd(CounterRng& rng, int n, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw ConfigError("gen_psd: need 0 < lo <= hi");
  ComplexMatrix u = gen_random_unitary(rng, n);
  ComplexMatrix r(n);
  std::vector<double> d(static_cast<size_t>(n));
  for (auto& x : d) x = rng.log_uniform(lo, hi);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cd s{};
      for (int k = 0; k < n; ++k)
        s += u(i, k) * d[static_cast<size_t>(k)] * std::conj(u(j, k));
      r(i, j) = s;
    }
  return HermitianMatrix(r);
}

}  // namespace hhv
