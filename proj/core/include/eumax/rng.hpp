// Copyright 2026 The eumax Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace eumax {

// Counter-based uniform stream built on the splitmix64 mixer. Draw i of
// stream (seed, stream_id) is a pure function of its inputs, so sampling is
// reproducible bit-for-bit regardless of evaluation order or thread count.
namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t draw(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  std::uint64_t z = mix64(seed ^ 0x8f1bbcdcbfa53e0bULL);
  z = mix64(z ^ stream * 0xd6e8feb86659fd93ULL);
  return mix64(z ^ counter);
}

/// Uniform double in the open interval (0, 1).
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  // 53 mantissa bits, then shift off zero.
  const std::uint64_t bits = draw(seed, stream, counter) >> 11;
  double u = static_cast<double>(bits) * 0x1.0p-53;
  if (u <= 0.0) u = 0x1.0p-53;
  return u;
}

}  // namespace rng
}  // namespace eumax
