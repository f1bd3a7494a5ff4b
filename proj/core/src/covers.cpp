#include "fibsteg/covers.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fibsteg/errors.hpp"

namespace fibsteg {
namespace {

constexpr std::size_t kCoarseSpacing = 32;

// One 3x3 mean pass with edge replication.
std::vector<double> box3(const std::vector<double>& src, std::size_t w, std::size_t h) {
  std::vector<double> dst(src.size());
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      double s = 0.0;
      for (int dy = -1; dy <= 1; ++dy) {
        const auto yy = static_cast<std::size_t>(std::clamp<long>(static_cast<long>(y) + dy, 0, static_cast<long>(h) - 1));
        for (int dx = -1; dx <= 1; ++dx) {
          const auto xx = static_cast<std::size_t>(std::clamp<long>(static_cast<long>(x) + dx, 0, static_cast<long>(w) - 1));
          s += src[yy * w + xx];
        }
      }
      dst[y * w + x] = s / 9.0;
    }
  }
  return dst;
}

}  // namespace

GrayImage synthetic_cover(const CoverOptions& opt, std::uint64_t seed) {
  if (opt.width == 0 || opt.height == 0) throw InputError("cover dimensions must be positive");
  const std::size_t w = opt.width, h = opt.height;
  std::mt19937_64 rng(seed);

  // Coarse lattice, bilinearly interpolated, gives large-scale shading.
  const std::size_t gw = w / kCoarseSpacing + 2, gh = h / kCoarseSpacing + 2;
  std::vector<double> lattice(gw * gh);
  for (auto& v : lattice) v = unit_double(rng);

  std::vector<double> field(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    const double fy = static_cast<double>(y) / kCoarseSpacing;
    const auto y0 = static_cast<std::size_t>(fy);
    const double ty = fy - static_cast<double>(y0);
    for (std::size_t x = 0; x < w; ++x) {
      const double fx = static_cast<double>(x) / kCoarseSpacing;
      const auto x0 = static_cast<std::size_t>(fx);
      const double tx = fx - static_cast<double>(x0);
      const double top = lattice[y0 * gw + x0] * (1 - tx) + lattice[y0 * gw + x0 + 1] * tx;
      const double bot = lattice[(y0 + 1) * gw + x0] * (1 - tx) + lattice[(y0 + 1) * gw + x0 + 1] * tx;
      field[y * w + x] = 0.5 * (top * (1 - ty) + bot * ty) + 0.5 * unit_double(rng);
    }
  }
  for (unsigned pass = 0; pass < opt.smoothing_passes; ++pass) field = box3(field, w, h);

  const auto [lo_it, hi_it] = std::minmax_element(field.begin(), field.end());
  const double lo = *lo_it, span = std::max(*hi_it - lo, 1e-12);
  const double peak = max_value(opt.depth);
  std::vector<std::uint16_t> px(w * h);
  for (std::size_t i = 0; i < px.size(); ++i) {
    const double v = 0.02 * peak + 0.96 * peak * (field[i] - lo) / span;
    px[i] = static_cast<std::uint16_t>(std::floor(v + 0.5));
  }
  return GrayImage(w, h, opt.depth, std::move(px));
}

GrayImage uniform_random_image(std::size_t width, std::size_t height, BitDepth depth, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint16_t> px(width * height);
  const std::uint64_t range = std::uint64_t{max_value(depth)} + 1;
  for (auto& p : px) p = static_cast<std::uint16_t>(rng() % range);
  return GrayImage(width, height, depth, std::move(px));
}

}  // namespace fibsteg
