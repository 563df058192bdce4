//
// Project GoMS - Copyright 2026 The GoMS Developers.
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <cstdint>
#include <span>

namespace goms::util {

// 64-bit mixing built on the splitmix64 finalizer (Steele, Lea & Flood 2014;
// constants 0xbf58476d1ce4e5b9 / 0x94d049bb133111eb) with the golden-ratio
// increment 0x9e3779b97f4a7c15 for combining. Pinned here so fingerprints,
// WL digests, and scaffold keys are bit-identical across platforms and runs.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline constexpr std::uint64_t hash_combine(std::uint64_t seed,
                                            std::uint64_t value) {
  return mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) +
                       (seed >> 2)));
}

inline std::uint64_t hash_span(std::uint64_t seed,
                               std::span<const std::uint64_t> values) {
  std::uint64_t h = mix64(seed);
  for (std::uint64_t v : values) h = hash_combine(h, v);
  return h;
}

}  // namespace goms::util
