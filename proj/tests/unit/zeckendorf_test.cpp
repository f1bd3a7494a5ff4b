#include "fibsteg/zeckendorf.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "fibsteg/errors.hpp"

namespace fibsteg {
namespace {

// Oracle: every n-bit word without adjacent ones, valued by an independently
// built Fibonacci list.
std::map<std::uint32_t, std::vector<std::uint32_t>> enumerate_valid_words(unsigned n, std::uint32_t limit) {
  std::vector<std::uint64_t> fib{1, 2};
  while (fib.size() < n) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  std::map<std::uint32_t, std::vector<std::uint32_t>> by_value;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    bool adjacent = false;
    for (unsigned k = 0; k + 1 < n; ++k) adjacent |= ((w >> k) & 1u) && ((w >> (k + 1)) & 1u);
    if (adjacent) continue;
    std::uint64_t v = 0;
    for (unsigned k = 0; k < n; ++k) {
      if ((w >> k) & 1u) v += fib[k];
    }
    if (v <= limit) by_value[static_cast<std::uint32_t>(v)].push_back(w);
  }
  return by_value;
}

TEST(FibWeights, EightBitBasis) {
  const auto& w = FibWeights::for_depth(BitDepth::k8);
  const std::vector<std::uint32_t> expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  ASSERT_EQ(w.length(), 12u);
  EXPECT_TRUE(std::equal(expected.begin(), expected.end(), w.values().begin()));
}

TEST(FibWeights, SixteenBitLengthIsMinimal) {
  const auto& w = FibWeights::for_depth(BitDepth::k16);
  // Largest valid word of length n sums weights n-1, n-3, ...
  auto max_valid = [&](unsigned n) {
    std::uint64_t s = 0;
    for (int k = static_cast<int>(n) - 1; k >= 0; k -= 2) s += w[static_cast<unsigned>(k)];
    return s;
  };
  EXPECT_GE(max_valid(w.length()), 65535u);
  EXPECT_LT(max_valid(w.length() - 1), 65535u);
  EXPECT_EQ(w.length(), 23u);
  for (unsigned k = 2; k < w.length(); ++k) EXPECT_EQ(w[k], w[k - 1] + w[k - 2]);
}

TEST(Zeckendorf, Examples) {
  EXPECT_EQ(to_zeckendorf(0, BitDepth::k8).to_string(), "000000000000");
  EXPECT_EQ(to_zeckendorf(255, BitDepth::k8).to_string(), "100001000001");
  EXPECT_EQ(to_zeckendorf(30, BitDepth::k8).to_string(), "000001010001");

  EXPECT_EQ(from_zeckendorf(ZeckendorfWord::parse("000000000001"), BitDepth::k8), 1u);
  EXPECT_EQ(from_zeckendorf(ZeckendorfWord::parse("100001000001"), BitDepth::k8), 255u);
  EXPECT_EQ(from_zeckendorf(ZeckendorfWord::parse("000000000010"), BitDepth::k8), 2u);
}

TEST(Zeckendorf, Validity) {
  EXPECT_FALSE(is_valid(ZeckendorfWord::parse("000000000011")));
  EXPECT_TRUE(is_valid(ZeckendorfWord::parse("000000000101")));
  EXPECT_TRUE(is_valid(ZeckendorfWord::parse("101010010101")));
}

TEST(Zeckendorf, Errors) {
  EXPECT_THROW(to_zeckendorf(256, BitDepth::k8), RangeError);
  EXPECT_THROW(from_zeckendorf(ZeckendorfWord::parse("000000000011"), BitDepth::k8), RepresentationError);
  // 233 + 89 = 322: no adjacent ones but beyond 8 bits.
  EXPECT_THROW(from_zeckendorf(ZeckendorfWord::parse("101000000000"), BitDepth::k8), RangeError);
  EXPECT_THROW(from_zeckendorf(ZeckendorfWord::parse("0001"), BitDepth::k8), InputError);
}

TEST(Zeckendorf, ExhaustiveBijectionEightBit) {
  for (std::uint32_t v = 0; v <= 255; ++v) {
    const auto word = to_zeckendorf(v, BitDepth::k8);
    ASSERT_TRUE(is_valid(word)) << v;
    ASSERT_EQ(from_zeckendorf(word, BitDepth::k8), v);
  }
}

TEST(Zeckendorf, EnumerationMatchesGreedy) {
  const auto words = enumerate_valid_words(12, 255);
  ASSERT_EQ(words.size(), 256u);
  for (const auto& [value, list] : words) {
    ASSERT_EQ(list.size(), 1u) << "value " << value << " has several representations";
    EXPECT_EQ(to_zeckendorf(value, BitDepth::k8).raw(), list.front());
  }
}

TEST(Zeckendorf, SixteenBitRoundTrip) {
  for (std::uint32_t v = 0; v <= 65535; ++v) {
    const auto word = to_zeckendorf(v, BitDepth::k16);
    ASSERT_TRUE(is_valid(word));
    ASSERT_EQ(from_zeckendorf(word, BitDepth::k16), v);
  }
}

TEST(Zeckendorf, LsbZeroBias) {
  // Frozen from the enumeration oracle: 158 of 256 values end in 0.
  const auto words = enumerate_valid_words(12, 255);
  std::size_t oracle_zeros = 0;
  for (const auto& [value, list] : words) oracle_zeros += (list.front() & 1u) == 0;
  ASSERT_EQ(oracle_zeros, 158u);

  std::size_t zeros = 0;
  for (std::uint32_t v = 0; v <= 255; ++v) zeros += !zeckendorf_lsb(v, BitDepth::k8);
  EXPECT_EQ(zeros, 158u);
  EXPECT_GT(static_cast<double>(zeros) / 256.0, 0.5);
}

TEST(Zeckendorf, LowTripletsAreTheFiveValidPatterns) {
  std::set<unsigned> seen;
  for (std::uint32_t v = 0; v <= 255; ++v) seen.insert(to_zeckendorf(v, BitDepth::k8).low_triplet());
  EXPECT_EQ(seen, (std::set<unsigned>{0b000, 0b001, 0b010, 0b100, 0b101}));
}

}  // namespace
}  // namespace fibsteg
