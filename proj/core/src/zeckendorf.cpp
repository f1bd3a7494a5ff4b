#include "fibsteg/zeckendorf.hpp"

#include <string>

#include "fibsteg/errors.hpp"

namespace fibsteg {
namespace {

// Largest value of an n-bit word with no two adjacent ones: set bits
// n-1, n-3, ...
std::uint64_t max_valid_value(const std::vector<std::uint32_t>& w) {
  std::uint64_t sum = 0;
  for (std::size_t k = w.size(); k-- > 0;) {
    sum += w[k];
    if (k == 0) break;
    --k;
  }
  return sum;
}

}  // namespace

FibWeights::FibWeights(BitDepth depth) : depth_(depth) {
  const std::uint64_t target = max_value(depth);
  weights_ = {1, 2};
  while (max_valid_value(weights_) < target) {
    const auto n = weights_.size();
    weights_.push_back(weights_[n - 1] + weights_[n - 2]);
  }
}

const FibWeights& FibWeights::for_depth(BitDepth depth) {
  static const FibWeights w8(BitDepth::k8);
  static const FibWeights w16(BitDepth::k16);
  return depth == BitDepth::k8 ? w8 : w16;
}

ZeckendorfWord::ZeckendorfWord(std::uint32_t bits, unsigned length) : bits_(bits), length_(length) {
  if (length > 32 || (length < 32 && (bits >> length) != 0)) {
    throw InputError("Zeckendorf word has bits beyond its length");
  }
}

ZeckendorfWord ZeckendorfWord::parse(const std::string& text) {
  std::uint32_t bits = 0;
  unsigned n = 0;
  for (char c : text) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw InputError("Zeckendorf word must be a 0/1 string");
    bits = (bits << 1) | (c == '1' ? 1u : 0u);
    ++n;
  }
  return ZeckendorfWord(bits, n);
}

void ZeckendorfWord::set_bit(unsigned k, bool value) noexcept {
  if (value) {
    bits_ |= (1u << k);
  } else {
    bits_ &= ~(1u << k);
  }
}

std::string ZeckendorfWord::to_string() const {
  std::string s;
  for (unsigned k = length_; k-- > 0;) s.push_back(bit(k) ? '1' : '0');
  return s;
}

ZeckendorfWord to_zeckendorf(std::uint32_t value, BitDepth depth) {
  if (value > max_value(depth)) {
    throw RangeError("value " + std::to_string(value) + " exceeds " + std::to_string(bits_of(depth)) +
                     "-bit range");
  }
  const auto& w = FibWeights::for_depth(depth);
  std::uint32_t bits = 0;
  for (unsigned k = w.length(); k-- > 0;) {
    if (w[k] <= value) {
      value -= w[k];
      bits |= (1u << k);
    }
  }
  return ZeckendorfWord(bits, w.length());
}

bool is_valid(const ZeckendorfWord& word) noexcept { return (word.raw() & (word.raw() >> 1)) == 0; }

std::uint32_t from_zeckendorf(const ZeckendorfWord& word, BitDepth depth) {
  const auto& w = FibWeights::for_depth(depth);
  if (word.length() != w.length()) {
    throw InputError("Zeckendorf word length " + std::to_string(word.length()) + " does not match depth (" +
                     std::to_string(w.length()) + ")");
  }
  if (!is_valid(word)) {
    throw RepresentationError("Zeckendorf word " + word.to_string() + " has adjacent ones");
  }
  std::uint32_t sum = 0;
  for (unsigned k = 0; k < w.length(); ++k) {
    if (word.bit(k)) sum += w[k];
  }
  if (sum > max_value(depth)) {
    throw RangeError("Zeckendorf word value " + std::to_string(sum) + " exceeds bit depth");
  }
  return sum;
}

bool zeckendorf_lsb(std::uint32_t value, BitDepth depth) { return to_zeckendorf(value, depth).bit(0); }

}  // namespace fibsteg
