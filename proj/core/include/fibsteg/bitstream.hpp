#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fibsteg {

// Growable bit sequence. Bit 0 is the first bit written; multi-bit fields are
// appended most significant bit first and bytes are packed MSB-first.
class BitStream {
 public:
  BitStream() = default;

  // Parses a string of '0'/'1' characters; whitespace is ignored.
  static BitStream from_string(std::string_view text);
  // Takes the first `nbits` bits of `bytes`.
  static BitStream from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits);
  static BitStream from_bytes(std::span<const std::uint8_t> bytes) {
    return from_bytes(bytes, bytes.size() * 8);
  }

  void push_back(bool bit);
  // Appends the low `width` bits of `value`, MSB first. width <= 64.
  void append(std::uint64_t value, unsigned width);
  void append(const BitStream& other);

  bool operator[](std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }
  void set(std::size_t i, bool bit);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  std::size_t count_ones() const noexcept;

  // Packed bytes, final byte zero-padded.
  const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }
  std::string to_string() const;

  friend bool operator==(const BitStream& a, const BitStream& b) {
    return a.size_ == b.size_ && a.bytes_ == b.bytes_;
  }

 private:
  std::vector<std::uint8_t> bytes_;
  std::size_t size_ = 0;
};

// Sequential reader over a BitStream. Reads past the end throw FormatError.
class BitReader {
 public:
  explicit BitReader(const BitStream& bits, std::size_t offset = 0) : bits_(&bits), pos_(offset) {}

  bool read_bit();
  std::uint64_t read(unsigned width);

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_->size() - pos_; }

 private:
  const BitStream* bits_;
  std::size_t pos_;
};

}  // namespace fibsteg
