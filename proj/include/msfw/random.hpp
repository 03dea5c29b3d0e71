#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>

namespace msfw {

using Rng = std::mt19937_64;

// Unbiased draw from [0, n) (Lemire's multiply-shift rejection method).
// Used instead of std::uniform_int_distribution so that replays are
// bit-reproducible across standard library implementations.
inline std::uint64_t uniformBelow(Rng& rng, std::uint64_t n) {
  assert(n > 0);
  std::uint64_t x = rng();
  unsigned __int128 m = static_cast<unsigned __int128>(x) * n;
  auto lo = static_cast<std::uint64_t>(m);
  if (lo < n) {
    std::uint64_t t = -n % n;
    while (lo < t) {
      x = rng();
      m = static_cast<unsigned __int128>(x) * n;
      lo = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Deterministic per-stream seed derivation (splitmix64 finalizer).
inline std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// ceil/floor guarded against values that land a hair off an integer after
// floating-point parameter arithmetic (e.g. 1/0.2 evaluating below 5).
inline std::int64_t ceilIndex(double x) {
  return static_cast<std::int64_t>(std::ceil(x - 1e-9 * (1.0 + std::fabs(x))));
}

inline std::int64_t floorIndex(double x) {
  return static_cast<std::int64_t>(std::floor(x + 1e-9 * (1.0 + std::fabs(x))));
}

}  // namespace msfw
