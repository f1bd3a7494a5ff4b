#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fibsteg/image.hpp"

namespace fibsteg {

// Fibonacci positional weights 1, 2, 3, 5, 8, ... (index 0 least significant),
// truncated to the shortest length whose largest no-adjacent-ones word covers
// every intensity at the given depth: 12 weights for 8-bit, 23 for 16-bit.
class FibWeights {
 public:
  explicit FibWeights(BitDepth depth);

  // Shared instance per depth.
  static const FibWeights& for_depth(BitDepth depth);

  BitDepth depth() const noexcept { return depth_; }
  unsigned length() const noexcept { return static_cast<unsigned>(weights_.size()); }
  std::uint32_t operator[](unsigned k) const { return weights_[k]; }
  std::span<const std::uint32_t> values() const noexcept { return weights_; }

 private:
  BitDepth depth_;
  std::vector<std::uint32_t> weights_;
};

// Fixed-length bit vector over FibWeights; bit k carries weight[k].
// Construction does not enforce the Zeckendorf condition, use is_valid().
class ZeckendorfWord {
 public:
  ZeckendorfWord() = default;
  ZeckendorfWord(std::uint32_t bits, unsigned length);

  // Most significant character first, e.g. "100001000001" for 255.
  static ZeckendorfWord parse(const std::string& text);

  bool bit(unsigned k) const noexcept { return (bits_ >> k) & 1u; }
  void set_bit(unsigned k, bool value) noexcept;
  std::uint32_t raw() const noexcept { return bits_; }
  unsigned length() const noexcept { return length_; }

  // Bits 2..0 as an integer in [0, 7].
  unsigned low_triplet() const noexcept { return bits_ & 0x7u; }
  void set_low_triplet(unsigned triplet) noexcept { bits_ = (bits_ & ~0x7u) | (triplet & 0x7u); }

  std::string to_string() const;

  friend bool operator==(const ZeckendorfWord&, const ZeckendorfWord&) = default;

 private:
  std::uint32_t bits_ = 0;
  unsigned length_ = 0;
};

// Greedy largest-weight-first decomposition. Throws RangeError if value
// exceeds 2^depth - 1.
ZeckendorfWord to_zeckendorf(std::uint32_t value, BitDepth depth);

// Throws RepresentationError on adjacent ones, RangeError if the sum exceeds
// 2^depth - 1, InputError if the word length does not match the depth.
std::uint32_t from_zeckendorf(const ZeckendorfWord& word, BitDepth depth);

bool is_valid(const ZeckendorfWord& word) noexcept;

// Bit 0 of the Zeckendorf form of value, without building the word.
bool zeckendorf_lsb(std::uint32_t value, BitDepth depth);

}  // namespace fibsteg
