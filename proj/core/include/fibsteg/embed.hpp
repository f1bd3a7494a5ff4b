#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "fibsteg/bitstream.hpp"
#include "fibsteg/image.hpp"
#include "fibsteg/prng.hpp"

namespace fibsteg {

enum class Method {
  kBinaryLsb,     // overwrite binary bit 0
  kFibonacciLsb,  // overwrite Zeckendorf bit 0, skipping pixels with bit 1 set
  kMapping,       // remap the Zeckendorf low triplet
};

std::string_view method_name(Method m) noexcept;  // "lsb", "fib-lsb", "map"
std::optional<Method> parse_method(std::string_view name) noexcept;

struct EmbedResult {
  GrayImage stego;
  std::size_t bits_embedded = 0;
  std::size_t pixels_visited = 0;
  std::size_t pixels_skipped = 0;
};

// Low-triplet remapping: secret 0 sends {000,001}->000, 010->010,
// {100,101}->100; secret 1 sends {000,001}->001, 010->001, {100,101}->101.
// Throws RepresentationError for triplets that cannot end a valid word.
unsigned map_triplet(unsigned cover_triplet, bool secret);

// Whether a pixel can carry a Fibonacci-LSB bit: its Zeckendorf bit 1 is
// clear, so both 0 and 1 are writable at bit 0. Embedding preserves bit 1, so
// the test gives the same answer on cover and stego.
bool fibonacci_lsb_candidate(std::uint32_t value, BitDepth depth);

// Mapping applied to a single pixel value. The result always has Zeckendorf
// bit 0 equal to `secret` and stays in [0, 2^d - 1].
std::uint32_t map_pixel(std::uint32_t value, bool secret, BitDepth depth);

// Message bit j goes to the j-th pixel of permute_indices(cover.size(), key)
// (j-th candidate for Fibonacci LSB). CapacityError when the message does not
// fit.
EmbedResult embed_lsb_binary(const GrayImage& cover, const BitStream& message, StegoKey key);
BitStream extract_lsb_binary(const GrayImage& stego, std::size_t nbits, StegoKey key);

EmbedResult embed_lsb_fibonacci(const GrayImage& cover, const BitStream& message, StegoKey key);
BitStream extract_lsb_fibonacci(const GrayImage& stego, std::size_t nbits, StegoKey key);

EmbedResult embed_mapping(const GrayImage& cover, const BitStream& message, StegoKey key);
BitStream extract_mapping(const GrayImage& stego, std::size_t nbits, StegoKey key);

EmbedResult embed(Method method, const GrayImage& cover, const BitStream& message, StegoKey key);
BitStream extract(Method method, const GrayImage& stego, std::size_t nbits, StegoKey key);

// Number of message bits an image can carry with the given method.
std::size_t capacity_bits(Method method, const GrayImage& cover);

inline constexpr unsigned kLengthHeaderBits = 32;

// Prefixes the payload with its bit count (32 bits, big-endian) and embeds
// both.
GrayImage embed_payload(const GrayImage& cover, const BitStream& payload, Method method, StegoKey key);
// Throws CorruptStegoError when the recovered header exceeds the remaining
// capacity.
BitStream extract_payload(const GrayImage& stego, Method method, StegoKey key);

}  // namespace fibsteg
