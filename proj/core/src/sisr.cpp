#include "fibsteg/sisr.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "fibsteg/errors.hpp"

namespace fibsteg::sisr {
namespace {

// 8-bit class codes indexed by n, where T* = 2^n - 1.
constexpr std::array<std::uint32_t, 8> kCodes8{0b111, 0b110, 0b101, 0b011, 0b100, 0b010, 0b001, 0b000};

unsigned class_exponent(std::uint32_t tstar) {
  // tstar = 2^n - 1
  return static_cast<unsigned>(std::bit_width(tstar));
}

bool is_class(std::uint32_t value) { return (value & (value + 1)) == 0; }

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint64_t get_be(std::span<const std::uint8_t> bytes, std::size_t pos, unsigned n) {
  std::uint64_t v = 0;
  for (unsigned i = 0; i < n; ++i) v = (v << 8) | bytes[pos + i];
  return v;
}

}  // namespace

void check_block_size(unsigned k) {
  if (std::find(kBlockSizes.begin(), kBlockSizes.end(), k) == kBlockSizes.end()) {
    throw InputError("block size must be 4, 8 or 16 (got " + std::to_string(k) + ")");
  }
}

std::vector<std::uint32_t> threshold_classes(BitDepth depth) {
  std::vector<std::uint32_t> t;
  for (unsigned n = 0; n < bits_of(depth); ++n) t.push_back((1u << n) - 1u);
  t.push_back(max_value(depth));
  return t;
}

std::uint32_t compute_threshold(std::uint32_t dmax, BitDepth depth) {
  if (dmax > max_value(depth)) throw RangeError("difference exceeds bit depth");
  for (unsigned n = 0; n < bits_of(depth); ++n) {
    const std::uint32_t t = (1u << n) - 1u;
    if (t >= dmax) return t;
  }
  return max_value(depth);
}

unsigned diff_width(std::uint32_t tstar) { return class_exponent(tstar); }

unsigned tstar_code_width(BitDepth depth) {
  return static_cast<unsigned>(std::bit_width(bits_of(depth) - 1u));
}

std::uint32_t tstar_code(std::uint32_t tstar, BitDepth depth) {
  if (!is_class(tstar) || tstar >= max_value(depth)) {
    throw RangeError("no class code for T* = " + std::to_string(tstar));
  }
  const unsigned n = class_exponent(tstar);
  if (depth == BitDepth::k8) return kCodes8[n];
  return bits_of(depth) - 1u - n;
}

std::uint32_t tstar_decode(std::uint32_t code, BitDepth depth) {
  const unsigned width = tstar_code_width(depth);
  if (code >= (1u << width)) throw FormatError("class code out of range");
  if (depth == BitDepth::k8) {
    const auto it = std::find(kCodes8.begin(), kCodes8.end(), code);
    if (it == kCodes8.end()) throw FormatError("unknown class code");
    return (1u << (it - kCodes8.begin())) - 1u;
  }
  if (code > bits_of(depth) - 1u) throw FormatError("unknown class code " + std::to_string(code));
  const unsigned n = bits_of(depth) - 1u - code;
  return (1u << n) - 1u;
}

unsigned min_index_width(unsigned k) { return static_cast<unsigned>(std::bit_width(k * k - 1u)); }

std::size_t block_bits(std::uint32_t tstar, unsigned k, BitDepth depth) {
  const std::size_t d = bits_of(depth);
  const std::size_t count = std::size_t{k} * k;
  if (tstar == max_value(depth)) return 1 + count * d;
  const std::size_t head = 1 + d + tstar_code_width(depth);
  if (tstar == 0) return head;
  return head + min_index_width(k) + (count - 1) * diff_width(tstar);
}

std::uint32_t encode_block(std::span<const std::uint16_t> block, unsigned k, BitDepth depth, BitStream& out) {
  const std::size_t count = std::size_t{k} * k;
  if (block.size() != count) throw InputError("block must hold k*k pixels");
  const unsigned d = bits_of(depth);

  // First row-major occurrence of the minimum.
  const auto min_it = std::min_element(block.begin(), block.end());
  const std::uint32_t m = *min_it;
  const auto min_index = static_cast<std::size_t>(min_it - block.begin());
  const std::uint32_t dmax = *std::max_element(block.begin(), block.end()) - m;
  const std::uint32_t tstar = compute_threshold(dmax, depth);

  if (tstar == max_value(depth)) {
    out.push_back(true);
    for (auto p : block) out.append(p, d);
    return tstar;
  }
  out.push_back(false);
  out.append(m, d);
  out.append(tstar_code(tstar, depth), tstar_code_width(depth));
  if (tstar == 0) return tstar;
  out.append(min_index, min_index_width(k));
  const unsigned width = diff_width(tstar);
  for (std::size_t i = 0; i < count; ++i) {
    if (i != min_index) out.append(block[i] - m, width);
  }
  return tstar;
}

BitStream encode_block(std::span<const std::uint16_t> block, unsigned k, BitDepth depth) {
  BitStream out;
  encode_block(block, k, depth, out);
  return out;
}

std::vector<std::uint16_t> decode_block(BitReader& in, unsigned k, BitDepth depth) {
  const std::size_t count = std::size_t{k} * k;
  const unsigned d = bits_of(depth);
  std::vector<std::uint16_t> px(count);

  if (in.read_bit()) {
    for (auto& p : px) p = static_cast<std::uint16_t>(in.read(d));
    return px;
  }
  const auto m = static_cast<std::uint32_t>(in.read(d));
  const std::uint32_t tstar = tstar_decode(static_cast<std::uint32_t>(in.read(tstar_code_width(depth))), depth);
  if (tstar == 0) {
    std::fill(px.begin(), px.end(), static_cast<std::uint16_t>(m));
    return px;
  }
  const auto min_index = static_cast<std::size_t>(in.read(min_index_width(k)));
  if (min_index >= count) throw FormatError("minimum index out of block");
  const unsigned width = diff_width(tstar);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint32_t diff = i == min_index ? 0 : static_cast<std::uint32_t>(in.read(width));
    const std::uint32_t value = m + diff;
    if (value > max_value(depth)) throw FormatError("decoded pixel exceeds bit depth");
    px[i] = static_cast<std::uint16_t>(value);
  }
  return px;
}

DecodedBlock decode_block(const BitStream& bits, unsigned k, BitDepth depth, std::size_t offset) {
  BitReader in(bits, offset);
  DecodedBlock out;
  out.pixels = decode_block(in, k, depth);
  out.bits_consumed = in.position() - offset;
  return out;
}

Container encode_image(const GrayImage& img, unsigned k, ClassHistogram& histogram) {
  check_block_size(k);
  if (img.empty() || img.width() % k != 0 || img.height() % k != 0) {
    throw InputError("image dimensions " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                     " not divisible by block size " + std::to_string(k));
  }
  Container c;
  c.width = static_cast<std::uint32_t>(img.width());
  c.height = static_cast<std::uint32_t>(img.height());
  c.depth = img.depth();
  c.block_size = k;

  histogram.classes = threshold_classes(img.depth());
  histogram.counts.assign(histogram.classes.size(), 0);

  std::vector<std::uint16_t> block(std::size_t{k} * k);
  for (std::size_t by = 0; by < img.height(); by += k) {
    for (std::size_t bx = 0; bx < img.width(); bx += k) {
      for (unsigned y = 0; y < k; ++y) {
        for (unsigned x = 0; x < k; ++x) block[y * k + x] = img.at(bx + x, by + y);
      }
      const std::uint32_t tstar = encode_block(block, k, img.depth(), c.payload);
      const auto slot = std::find(histogram.classes.begin(), histogram.classes.end(), tstar);
      ++histogram.counts[static_cast<std::size_t>(slot - histogram.classes.begin())];
    }
  }
  return c;
}

Container encode_image(const GrayImage& img, unsigned k) {
  ClassHistogram unused;
  return encode_image(img, k, unused);
}

GrayImage decode_image(const Container& c) {
  check_block_size(c.block_size);
  const unsigned k = c.block_size;
  if (c.width == 0 || c.height == 0 || c.width % k != 0 || c.height % k != 0) {
    throw FormatError("container dimensions not divisible by block size");
  }
  GrayImage img(c.width, c.height, c.depth);
  BitReader in(c.payload);
  for (std::size_t by = 0; by < c.height; by += k) {
    for (std::size_t bx = 0; bx < c.width; bx += k) {
      const auto block = decode_block(in, k, c.depth);
      for (unsigned y = 0; y < k; ++y) {
        for (unsigned x = 0; x < k; ++x) img.at(bx + x, by + y) = block[y * k + x];
      }
    }
  }
  if (in.remaining() != 0) throw FormatError("payload has trailing bits after the last block");
  return img;
}

std::vector<std::uint8_t> serialize(const Container& c) {
  std::vector<std::uint8_t> out(kMagic.begin(), kMagic.end());
  out.push_back(kVersion);
  put_u32(out, c.width);
  put_u32(out, c.height);
  out.push_back(static_cast<std::uint8_t>(bits_of(c.depth)));
  out.push_back(static_cast<std::uint8_t>(c.block_size));
  const std::uint64_t nbits = c.payload.size();
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(nbits >> shift));
  const auto& bytes = c.payload.bytes();
  out.insert(out.end(), bytes.begin(), bytes.end());
  return out;
}

Container deserialize(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) throw FormatError("file too short for a SISR header");
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) throw FormatError("bad SISR magic");
  if (bytes[4] != kVersion) throw FormatError("unsupported SISR version " + std::to_string(bytes[4]));
  Container c;
  c.width = static_cast<std::uint32_t>(get_be(bytes, 5, 4));
  c.height = static_cast<std::uint32_t>(get_be(bytes, 9, 4));
  try {
    c.depth = depth_from_bits(bytes[13]);
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
  c.block_size = bytes[14];
  if (std::find(kBlockSizes.begin(), kBlockSizes.end(), c.block_size) == kBlockSizes.end()) {
    throw FormatError("unsupported block size " + std::to_string(c.block_size));
  }
  const std::uint64_t nbits = get_be(bytes, 15, 8);
  const auto body = bytes.subspan(kHeaderBytes);
  if ((nbits + 7) / 8 != body.size()) throw FormatError("payload length does not match header");
  c.payload = BitStream::from_bytes(body, static_cast<std::size_t>(nbits));
  return c;
}

}  // namespace fibsteg::sisr
