#include "fibsteg/prng.hpp"

#include <numeric>
#include <utility>

#include "fibsteg/errors.hpp"

namespace fibsteg {

std::vector<std::uint32_t> permute_indices(std::size_t n, StegoKey key) {
  if (n == 0) throw InputError("cannot permute an empty index range");
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  SplitMix64 rng(key.seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const auto j = static_cast<std::size_t>(rng.next() % (i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

}  // namespace fibsteg
