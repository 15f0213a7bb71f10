#pragma once

#include <cstdint>
#include <random>

namespace tendon {

/// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive independent
/// sub-seeds from a base seed so repeated runs stay reproducible.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t seed_mix(std::uint64_t seed) { return mix64(seed); }

template <typename... Rest>
std::uint64_t seed_mix(std::uint64_t seed, std::uint64_t salt, Rest... rest) {
  return seed_mix(mix64(seed ^ mix64(salt)), rest...);
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Unbiased draw in [0, n). Avoids std::uniform_int_distribution, whose
/// output sequence is implementation-defined.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return static_cast<std::size_t>(x % bound);
  }
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace tendon
