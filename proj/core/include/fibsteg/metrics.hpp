#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "fibsteg/bitstream.hpp"
#include "fibsteg/embed.hpp"
#include "fibsteg/image.hpp"

namespace fibsteg {

struct QualityReport {
  std::optional<double> psnr_db;  // nullopt: images are identical
  double mse = 0.0;
  double changed_pixel_fraction = 0.0;

  bool identical() const noexcept { return !psnr_db.has_value(); }
};

// Peak is 2^d - 1. Throws InputError when size or depth differ.
QualityReport psnr(const GrayImage& a, const GrayImage& b);

struct ReductionReport {
  double rr = 0.0;
  double zeros_fraction = 0.0;
  double ones_fraction = 0.0;
};

// encoded / original. Throws InputError when original_bits == 0.
double reduction_ratio(std::size_t encoded_bits, std::size_t original_bits);

struct BitBalance {
  double zeros_fraction = 0.0;
  double ones_fraction = 0.0;
};

// Throws InputError on an empty stream.
BitBalance bit_balance(const BitStream& bits);

// Fraction of cover pixels that can carry one message bit.
double capacity(const GrayImage& cover, Method method);

}  // namespace fibsteg
