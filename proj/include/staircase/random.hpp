#pragma once

// Deterministic random streams and exact uniform integer sampling.
//
// The generator is std::mt19937_64, whose output sequence is fixed by the
// standard for a given seed. Independent streams are derived from a base
// seed and a stream index through splitmix64.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include "exact.hpp"

namespace staircase {

using Rng = std::mt19937_64;

inline constexpr const char* kRngName = "mt19937_64/splitmix64-streams";

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

inline Rng make_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x5851F42D4C957F2DULL)));
}

/// Uniform integer in [0, bound) by rejection on 64-bit words.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below needs a positive bound");
  if ((bound & (bound - 1)) == 0) return rng() & (bound - 1);
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;  // accept x <= limit
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

inline bool fair_coin(Rng& rng) { return (rng() >> 63) != 0; }

/// Uniform integer in [0, bound) for an arbitrary-precision bound.
inline Integer uniform_below(Rng& rng, const Integer& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (words - 1);
  for (;;) {
    Integer x = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      if (w == 0 && top_bits < 64) word >>= (64 - top_bits);
      x <<= 64;
      mpz_class part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(word), 0, 0, &word);
      x += part;
    }
    if (x < bound) return x;
  }
}

}  // namespace staircase
