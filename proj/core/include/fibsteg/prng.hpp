#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fibsteg {

struct StegoKey {
  std::uint64_t seed = 0;
};

// SplitMix64 (Steele, Lea, Flood). Fixed so that any implementation can
// reproduce the same pixel visiting order from a key.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Fisher-Yates over the identity: for i = n-1 .. 1, swap a[i] with
// a[next() % (i + 1)]. Throws InputError for n == 0.
std::vector<std::uint32_t> permute_indices(std::size_t n, StegoKey key);

}  // namespace fibsteg
