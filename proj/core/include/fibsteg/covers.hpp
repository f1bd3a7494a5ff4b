#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "fibsteg/image.hpp"

namespace fibsteg {

struct CoverOptions {
  std::size_t width = 512;
  std::size_t height = 512;
  BitDepth depth = BitDepth::k8;
  unsigned smoothing_passes = 3;
};

// Natural-statistics stand-in: seeded white noise plus a coarse random field,
// smoothed by repeated 3x3 box filtering, contrast-stretched and rounded to
// the depth. Deterministic in (options, seed) on every platform.
GrayImage synthetic_cover(const CoverOptions& options, std::uint64_t seed);

// i.i.d. uniform pixels over [0, 2^d - 1].
GrayImage uniform_random_image(std::size_t width, std::size_t height, BitDepth depth, std::uint64_t seed);

// Uniform double in [0, 1) from the top 53 bits of a 64-bit draw.
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace fibsteg
