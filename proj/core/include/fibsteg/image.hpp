#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace fibsteg {

enum class BitDepth : std::uint8_t { k8 = 8, k16 = 16 };

constexpr unsigned bits_of(BitDepth d) noexcept { return static_cast<unsigned>(d); }
constexpr std::uint32_t max_value(BitDepth d) noexcept { return (1u << bits_of(d)) - 1u; }

// Throws InputError for anything other than 8 or 16.
BitDepth depth_from_bits(unsigned bits);

// Row-major grayscale raster. Samples are stored as 16-bit regardless of depth.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, BitDepth depth, std::uint16_t fill = 0);
  GrayImage(std::size_t width, std::size_t height, BitDepth depth, std::vector<std::uint16_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }
  BitDepth depth() const noexcept { return depth_; }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint16_t at(std::size_t x, std::size_t y) const { return pixels_[y * width_ + x]; }
  std::uint16_t& at(std::size_t x, std::size_t y) { return pixels_[y * width_ + x]; }
  std::uint16_t operator[](std::size_t i) const { return pixels_[i]; }
  std::uint16_t& operator[](std::size_t i) { return pixels_[i]; }

  std::span<const std::uint16_t> pixels() const noexcept { return pixels_; }
  std::span<std::uint16_t> pixels() noexcept { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  BitDepth depth_ = BitDepth::k8;
  std::vector<std::uint16_t> pixels_;
};

}  // namespace fibsteg
