#include "fibsteg/image.hpp"

#include <string>

#include "fibsteg/errors.hpp"

namespace fibsteg {

BitDepth depth_from_bits(unsigned bits) {
  switch (bits) {
    case 8:
      return BitDepth::k8;
    case 16:
      return BitDepth::k16;
    default:
      throw InputError("unsupported bit depth " + std::to_string(bits));
  }
}

GrayImage::GrayImage(std::size_t width, std::size_t height, BitDepth depth, std::uint16_t fill)
    : width_(width), height_(height), depth_(depth), pixels_(width * height, fill) {
  if (fill > max_value(depth)) throw RangeError("fill value exceeds bit depth");
}

GrayImage::GrayImage(std::size_t width, std::size_t height, BitDepth depth, std::vector<std::uint16_t> pixels)
    : width_(width), height_(height), depth_(depth), pixels_(std::move(pixels)) {
  if (pixels_.size() != width * height) {
    throw InputError("pixel buffer size does not match dimensions");
  }
  const auto peak = max_value(depth);
  for (auto p : pixels_) {
    if (p > peak) throw RangeError("pixel value exceeds bit depth");
  }
}

}  // namespace fibsteg
