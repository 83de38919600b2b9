#pragma once

#include <cstdint>
#include <random>

namespace gallery {

// Deterministic seeded generator. Raw mt19937_64 draws with manual range
// reduction, so streams are identical across standard libraries.
struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t raw() { return eng(); }

  // Uniform in [0, bound). Rejection keeps the draw unbiased.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
    std::uint64_t r;
    do {
      r = eng();
    } while (r >= limit);
    return r % bound;
  }

  // Uniform integer in [lo, hi] inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (eng() & 1) != 0; }
};

}  // namespace gallery
