#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>
#include <utility>

namespace hhv {

/// Counter-based generator built on the SplitMix64 finalizer: output i of a
/// stream with key k is mix(k + (i+1) * 0x9E3779B97F4A7C15). Streams are
/// stateless apart from the counter, so substreams keyed by
/// (seed, check id, trial index) are independent and reproducible across
/// workers and platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t hash_string(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;  // FNV-1a
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001B3ULL;
    }
    return h;
  }

  /// Substream key = mix(mix(mix(seed) ^ fnv1a(check)) ^ trial).
  static CounterRng substream(std::uint64_t seed, std::string_view check_id,
                              std::uint64_t trial) {
    std::uint64_t k = mix(seed);
    k = mix(k ^ hash_string(check_id));
    k = mix(k ^ trial);
    return CounterRng(k);
  }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * 0x9E3779B97F4A7C15ULL); }

  /// Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Log-uniform in [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  /// Standard normal via Box-Muller (pairs cached).
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 in (0, 1] keeps the log finite.
    const double u1 =
        (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  /// Standard complex normal CN(0, 1): re, im ~ N(0, 1/2).
  std::pair<double, double> complex_gaussian() {
    constexpr double kInvSqrt2 = 0.70710678118654752440;
    const double re = gaussian() * kInvSqrt2;
    const double im = gaussian() * kInvSqrt2;
    return {re, im};
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace hhv
