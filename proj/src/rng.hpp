/*
 * (C) Copyright 2026 affectq developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>

namespace affectq {

// SplitMix64 scramble. The generator algorithm is pinned (rather than using
// std::mt19937_64 or similar) so that result files reproduce bit-exactly
// across implementations and platforms.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 significant bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, n). Fixed-point multiply keeps the draw deterministic
  // and avoids float rounding at the bucket edges.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// Child seed for one sweep cell. Chains the SplitMix64 scramble over the
// cell coordinates; documented so alternate implementations can reproduce
// the exact run streams.
inline constexpr std::uint64_t derive_seed(std::uint64_t master_seed,
                                           std::uint64_t agent_ordinal,
                                           std::uint64_t epsilon_index,
                                           std::uint64_t run_index) {
  std::uint64_t s = mix64(master_seed);
  s = mix64(s ^ agent_ordinal);
  s = mix64(s ^ epsilon_index);
  s = mix64(s ^ run_index);
  return s;
}

}  // namespace affectq
