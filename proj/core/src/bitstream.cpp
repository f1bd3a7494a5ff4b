#include "fibsteg/bitstream.hpp"

#include <bit>
#include <cctype>

#include "fibsteg/errors.hpp"

namespace fibsteg {

BitStream BitStream::from_string(std::string_view text) {
  BitStream out;
  for (char c : text) {
    if (c == '0' || c == '1') {
      out.push_back(c == '1');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw InputError(std::string("bit string contains '") + c + "'");
    }
  }
  return out;
}

BitStream BitStream::from_bytes(std::span<const std::uint8_t> bytes, std::size_t nbits) {
  if (nbits > bytes.size() * 8) {
    throw FormatError("bit count exceeds available bytes");
  }
  BitStream out;
  out.bytes_.assign(bytes.begin(), bytes.begin() + static_cast<std::ptrdiff_t>((nbits + 7) / 8));
  out.size_ = nbits;
  if (nbits % 8 != 0) {
    out.bytes_.back() &= static_cast<std::uint8_t>(0xFFu << (8 - nbits % 8));
  }
  return out;
}

void BitStream::push_back(bool bit) {
  if (size_ % 8 == 0) bytes_.push_back(0);
  if (bit) bytes_.back() |= static_cast<std::uint8_t>(0x80u >> (size_ % 8));
  ++size_;
}

void BitStream::append(std::uint64_t value, unsigned width) {
  for (unsigned i = width; i-- > 0;) {
    push_back((value >> i) & 1u);
  }
}

void BitStream::append(const BitStream& other) {
  if (size_ % 8 == 0) {
    bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
    size_ += other.size_;
    return;
  }
  for (std::size_t i = 0; i < other.size(); ++i) push_back(other[i]);
}

void BitStream::set(std::size_t i, bool bit) {
  const auto mask = static_cast<std::uint8_t>(0x80u >> (i & 7));
  if (bit) {
    bytes_[i >> 3] |= mask;
  } else {
    bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
  }
}

std::size_t BitStream::count_ones() const noexcept {
  std::size_t n = 0;
  for (auto b : bytes_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::string BitStream::to_string() const {
  std::string s;
  s.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

bool BitReader::read_bit() {
  if (pos_ >= bits_->size()) throw FormatError("bit stream truncated");
  return (*bits_)[pos_++];
}

std::uint64_t BitReader::read(unsigned width) {
  if (remaining() < width) throw FormatError("bit stream truncated");
  std::uint64_t v = 0;
  for (unsigned i = 0; i < width; ++i) v = (v << 1) | ((*bits_)[pos_++] ? 1u : 0u);
  return v;
}

}  // namespace fibsteg
