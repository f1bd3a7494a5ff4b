#include "fibsteg/metrics.hpp"

#include <cmath>

#include "fibsteg/errors.hpp"

namespace fibsteg {

QualityReport psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) throw InputError("PSNR needs images of equal size");
  if (a.depth() != b.depth()) throw InputError("PSNR needs images of equal bit depth");
  if (a.empty()) throw InputError("PSNR of empty images");

  double sq = 0.0;
  std::size_t changed = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = static_cast<double>(a[i]) - static_cast<double>(b[i]);
    sq += d * d;
    changed += a[i] != b[i];
  }
  const auto n = static_cast<double>(a.size());
  QualityReport r;
  r.mse = sq / n;
  r.changed_pixel_fraction = static_cast<double>(changed) / n;
  if (r.mse > 0.0) {
    const double peak = max_value(a.depth());
    r.psnr_db = 10.0 * std::log10(peak * peak / r.mse);
  }
  return r;
}

double reduction_ratio(std::size_t encoded_bits, std::size_t original_bits) {
  if (original_bits == 0) throw InputError("original size must be positive");
  return static_cast<double>(encoded_bits) / static_cast<double>(original_bits);
}

BitBalance bit_balance(const BitStream& bits) {
  if (bits.empty()) throw InputError("bit balance of an empty stream");
  const auto ones = static_cast<double>(bits.count_ones());
  const auto n = static_cast<double>(bits.size());
  return {(n - ones) / n, ones / n};
}

double capacity(const GrayImage& cover, Method method) {
  if (cover.empty()) throw InputError("capacity of an empty cover");
  return static_cast<double>(capacity_bits(method, cover)) / static_cast<double>(cover.size());
}

}  // namespace fibsteg
