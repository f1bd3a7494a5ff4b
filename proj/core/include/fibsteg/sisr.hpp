#pragma once

// Secret-image size reduction: a lossless block codec that stores each k x k
// block as its minimum plus fixed-width differences, the width chosen from a
// small set of threshold classes.
//
// Per-block layout (MSB first):
//   flag=1                          then k*k raw pixels, d bits each
//   flag=0, m (d bits), code(T*)    when T* == 0
//   flag=0, m, code(T*), min index (log2(k*k) bits), k*k-1 diffs of L bits
// where T* = 2^L - 1 is the tightest threshold class above the largest diff.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fibsteg/bitstream.hpp"
#include "fibsteg/image.hpp"

namespace fibsteg::sisr {

inline constexpr std::array<unsigned, 3> kBlockSizes{4, 8, 16};

// Throws InputError unless k is 4, 8 or 16.
void check_block_size(unsigned k);

// T = {2^n - 1 | 0 <= n <= d-1} U {2^d - 1}, ascending.
std::vector<std::uint32_t> threshold_classes(BitDepth depth);

// Smallest class >= dmax.
std::uint32_t compute_threshold(std::uint32_t dmax, BitDepth depth);

// Difference field width L for T* = 2^L - 1.
unsigned diff_width(std::uint32_t tstar);

unsigned tstar_code_width(BitDepth depth);
// 8-bit uses the fixed table 0->111, 1->110, 3->101, 7->011, 15->100,
// 31->010, 63->001, 127->000. Other depths encode d-1-n in
// ceil(log2(d)) bits. The raw class 2^d - 1 has no code (RangeError).
std::uint32_t tstar_code(std::uint32_t tstar, BitDepth depth);
// Throws FormatError for a code that names no class.
std::uint32_t tstar_decode(std::uint32_t code, BitDepth depth);

unsigned min_index_width(unsigned k);

// Exact encoded size of one block in class tstar.
std::size_t block_bits(std::uint32_t tstar, unsigned k, BitDepth depth);

// Row-major k*k block. Appends its encoding to `out` and returns its T*.
std::uint32_t encode_block(std::span<const std::uint16_t> block, unsigned k, BitDepth depth, BitStream& out);
BitStream encode_block(std::span<const std::uint16_t> block, unsigned k, BitDepth depth);

struct DecodedBlock {
  std::vector<std::uint16_t> pixels;
  std::size_t bits_consumed = 0;
};

// Decodes one block starting at the reader's position. Throws FormatError on
// truncation or an unknown class code.
std::vector<std::uint16_t> decode_block(BitReader& in, unsigned k, BitDepth depth);
DecodedBlock decode_block(const BitStream& bits, unsigned k, BitDepth depth, std::size_t offset = 0);

// Per-block statistics collected during image encoding.
struct ClassHistogram {
  std::vector<std::uint32_t> classes;  // same order as threshold_classes()
  std::vector<std::size_t> counts;
};

struct Container {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  BitDepth depth = BitDepth::k8;
  unsigned block_size = 4;
  BitStream payload;

  friend bool operator==(const Container&, const Container&) = default;
};

inline constexpr std::array<std::uint8_t, 4> kMagic{'S', 'I', 'S', 'R'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::size_t kHeaderBytes = 23;

// Throws InputError when the dimensions are not multiples of k.
Container encode_image(const GrayImage& img, unsigned k);
Container encode_image(const GrayImage& img, unsigned k, ClassHistogram& histogram);
GrayImage decode_image(const Container& container);

std::vector<std::uint8_t> serialize(const Container& container);
Container deserialize(std::span<const std::uint8_t> bytes);

}  // namespace fibsteg::sisr
