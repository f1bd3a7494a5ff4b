#include "fibsteg/embed.hpp"

#include <string>

#include "fibsteg/errors.hpp"
#include "fibsteg/zeckendorf.hpp"

namespace fibsteg {
namespace {

std::uint32_t word_value(const ZeckendorfWord& word, const FibWeights& w) {
  std::uint32_t sum = 0;
  for (unsigned k = 0; k < w.length(); ++k) {
    if (word.bit(k)) sum += w[k];
  }
  return sum;
}

void require_capacity(std::size_t required, std::size_t available) {
  if (required > available) {
    throw CapacityError("message needs " + std::to_string(required) + " bits but only " +
                            std::to_string(available) + " are available",
                        required, available);
  }
}

std::vector<std::uint32_t> visit_order(const GrayImage& img, StegoKey key) {
  if (img.empty()) throw InputError("image has no pixels");
  return permute_indices(img.size(), key);
}

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::kBinaryLsb:
      return "lsb";
    case Method::kFibonacciLsb:
      return "fib-lsb";
    case Method::kMapping:
      return "map";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "lsb") return Method::kBinaryLsb;
  if (name == "fib-lsb") return Method::kFibonacciLsb;
  if (name == "map") return Method::kMapping;
  return std::nullopt;
}

unsigned map_triplet(unsigned cover_triplet, bool secret) {
  switch (cover_triplet) {
    case 0b000:
    case 0b001:
      return secret ? 0b001 : 0b000;
    case 0b010:
      return secret ? 0b001 : 0b010;
    case 0b100:
    case 0b101:
      return secret ? 0b101 : 0b100;
    default:
      throw RepresentationError("low triplet " + std::to_string(cover_triplet) +
                                " cannot occur in a Zeckendorf word");
  }
}

bool fibonacci_lsb_candidate(std::uint32_t value, BitDepth depth) {
  const auto word = to_zeckendorf(value, depth);
  if (word.bit(1)) return false;
  // Writing 1 into the top value would leave the depth's range (65535 at
  // 16 bits ends in ...100).
  return word.bit(0) || value < max_value(depth);
}

std::uint32_t map_pixel(std::uint32_t value, bool secret, BitDepth depth) {
  const auto& w = FibWeights::for_depth(depth);
  auto word = to_zeckendorf(value, depth);
  word.set_low_triplet(map_triplet(word.low_triplet(), secret));
  const std::uint32_t mapped = word_value(word, w);
  if (mapped <= max_value(depth)) return mapped;
  // Only reachable at 16 bits (65535 with secret 1): take the nearest lower
  // value carrying the secret.
  std::uint32_t v = value;
  while (zeckendorf_lsb(v, depth) != secret) --v;
  return v;
}

EmbedResult embed_lsb_binary(const GrayImage& cover, const BitStream& message, StegoKey key) {
  require_capacity(message.size(), cover.size());
  EmbedResult r{cover, 0, 0, 0};
  if (message.empty()) return r;
  const auto order = visit_order(cover, key);
  for (std::size_t j = 0; j < message.size(); ++j) {
    auto& px = r.stego[order[j]];
    px = static_cast<std::uint16_t>((px & ~1u) | (message[j] ? 1u : 0u));
  }
  r.bits_embedded = r.pixels_visited = message.size();
  return r;
}

BitStream extract_lsb_binary(const GrayImage& stego, std::size_t nbits, StegoKey key) {
  require_capacity(nbits, stego.size());
  BitStream out;
  if (nbits == 0) return out;
  const auto order = visit_order(stego, key);
  for (std::size_t j = 0; j < nbits; ++j) out.push_back(stego[order[j]] & 1u);
  return out;
}

EmbedResult embed_lsb_fibonacci(const GrayImage& cover, const BitStream& message, StegoKey key) {
  EmbedResult r{cover, 0, 0, 0};
  if (message.empty()) return r;
  const auto& w = FibWeights::for_depth(cover.depth());
  const auto order = visit_order(cover, key);
  for (auto idx : order) {
    if (r.bits_embedded == message.size()) break;
    ++r.pixels_visited;
    auto& px = r.stego[idx];
    if (!fibonacci_lsb_candidate(px, cover.depth())) {
      ++r.pixels_skipped;
      continue;
    }
    auto word = to_zeckendorf(px, cover.depth());
    word.set_bit(0, message[r.bits_embedded++]);
    px = static_cast<std::uint16_t>(word_value(word, w));
  }
  require_capacity(message.size(), r.bits_embedded);
  return r;
}

BitStream extract_lsb_fibonacci(const GrayImage& stego, std::size_t nbits, StegoKey key) {
  BitStream out;
  if (nbits == 0) return out;
  const auto order = visit_order(stego, key);
  for (auto idx : order) {
    if (out.size() == nbits) break;
    if (fibonacci_lsb_candidate(stego[idx], stego.depth())) {
      out.push_back(zeckendorf_lsb(stego[idx], stego.depth()));
    }
  }
  require_capacity(nbits, out.size());
  return out;
}

EmbedResult embed_mapping(const GrayImage& cover, const BitStream& message, StegoKey key) {
  require_capacity(message.size(), cover.size());
  EmbedResult r{cover, 0, 0, 0};
  if (message.empty()) return r;
  const auto order = visit_order(cover, key);
  for (std::size_t j = 0; j < message.size(); ++j) {
    auto& px = r.stego[order[j]];
    px = static_cast<std::uint16_t>(map_pixel(px, message[j], cover.depth()));
  }
  r.bits_embedded = r.pixels_visited = message.size();
  return r;
}

BitStream extract_mapping(const GrayImage& stego, std::size_t nbits, StegoKey key) {
  require_capacity(nbits, stego.size());
  BitStream out;
  if (nbits == 0) return out;
  const auto order = visit_order(stego, key);
  for (std::size_t j = 0; j < nbits; ++j) out.push_back(zeckendorf_lsb(stego[order[j]], stego.depth()));
  return out;
}

EmbedResult embed(Method method, const GrayImage& cover, const BitStream& message, StegoKey key) {
  switch (method) {
    case Method::kBinaryLsb:
      return embed_lsb_binary(cover, message, key);
    case Method::kFibonacciLsb:
      return embed_lsb_fibonacci(cover, message, key);
    case Method::kMapping:
      return embed_mapping(cover, message, key);
  }
  throw InputError("unknown embedding method");
}

BitStream extract(Method method, const GrayImage& stego, std::size_t nbits, StegoKey key) {
  switch (method) {
    case Method::kBinaryLsb:
      return extract_lsb_binary(stego, nbits, key);
    case Method::kFibonacciLsb:
      return extract_lsb_fibonacci(stego, nbits, key);
    case Method::kMapping:
      return extract_mapping(stego, nbits, key);
  }
  throw InputError("unknown embedding method");
}

std::size_t capacity_bits(Method method, const GrayImage& cover) {
  if (method != Method::kFibonacciLsb) return cover.size();
  std::size_t n = 0;
  for (auto px : cover.pixels()) n += fibonacci_lsb_candidate(px, cover.depth()) ? 1 : 0;
  return n;
}

GrayImage embed_payload(const GrayImage& cover, const BitStream& payload, Method method, StegoKey key) {
  if (payload.size() > 0xFFFFFFFFull) throw InputError("payload longer than a 32-bit length header allows");
  require_capacity(payload.size() + kLengthHeaderBits, capacity_bits(method, cover));
  BitStream framed;
  framed.append(payload.size(), kLengthHeaderBits);
  framed.append(payload);
  return embed(method, cover, framed, key).stego;
}

BitStream extract_payload(const GrayImage& stego, Method method, StegoKey key) {
  const std::size_t available = capacity_bits(method, stego);
  if (available < kLengthHeaderBits) throw CorruptStegoError("image too small to hold a length header");
  const BitStream header = extract(method, stego, kLengthHeaderBits, key);
  BitReader reader(header);
  const auto nbits = static_cast<std::size_t>(reader.read(kLengthHeaderBits));
  if (nbits > available - kLengthHeaderBits) {
    throw CorruptStegoError("length header announces " + std::to_string(nbits) + " bits but only " +
                            std::to_string(available - kLengthHeaderBits) +
                            " remain; wrong key or method?");
  }
  const BitStream framed = extract(method, stego, kLengthHeaderBits + nbits, key);
  BitStream out;
  for (std::size_t i = kLengthHeaderBits; i < framed.size(); ++i) out.push_back(framed[i]);
  return out;
}

}  // namespace fibsteg
