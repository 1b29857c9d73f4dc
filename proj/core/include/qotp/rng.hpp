#pragma once

#include <cstdint>
#include <random>

namespace qotp {

/// Deterministic randomness for simulations.
///
/// All draws go through this wrapper so that results are bit-reproducible
/// across platforms: the mt19937_64 output sequence is fully specified by
/// the C++ standard, and the derived draws below avoid
/// std::uniform_*_distribution, whose algorithms are implementation-defined.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Fair coin from the top bit of the next engine word.
  bool coin() { return (next_u64() >> 63) != 0; }

  int coin_bit() { return coin() ? 1 : 0; }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double uniform_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, n) by masked rejection; unbiased. Requires n >= 1.
  std::uint64_t uniform_below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer. Distinct inputs give statistically independent
/// outputs; used to derive per-trial seeds from a master seed.
std::uint64_t mix64(std::uint64_t z);

}  // namespace qotp
