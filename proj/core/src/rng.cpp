#include "qotp/rng.hpp"

#include <bit>

namespace qotp {

std::uint64_t RandomSource::uniform_below(std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(n - 1);
  for (;;) {
    const std::uint64_t v = next_u64() & mask;
    if (v < n) return v;
  }
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qotp
