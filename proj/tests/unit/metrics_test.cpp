#include "fibsteg/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fibsteg/covers.hpp"
#include "fibsteg/errors.hpp"
#include "fibsteg/sisr.hpp"
#include "fibsteg/zeckendorf.hpp"
#include "test_support.hpp"

namespace fibsteg {
namespace {

GrayImage offset_fraction(const GrayImage& base, std::size_t changed) {
  GrayImage out = base;
  for (std::size_t i = 0; i < changed; ++i) out[i] = static_cast<std::uint16_t>(out[i] + 1);
  return out;
}

TEST(Psnr, IdenticalImages) {
  const GrayImage a(8, 8, BitDepth::k8, 9);
  const auto q = psnr(a, a);
  EXPECT_TRUE(q.identical());
  EXPECT_EQ(q.mse, 0.0);
  EXPECT_EQ(q.changed_pixel_fraction, 0.0);
}

TEST(Psnr, ClosedForms) {
  const GrayImage a(64, 64, BitDepth::k8, 100);
  const auto half = psnr(a, offset_fraction(a, a.size() / 2));
  ASSERT_FALSE(half.identical());
  EXPECT_NEAR(*half.psnr_db, 51.1411, 1e-3);
  EXPECT_DOUBLE_EQ(half.changed_pixel_fraction, 0.5);
  EXPECT_NEAR(*psnr(a, offset_fraction(a, a.size())).psnr_db, 48.1308, 1e-3);
}

TEST(Psnr, ClosedFormConsistencyProperty) {
  std::mt19937_64 rng(6);
  for (auto depth : {BitDepth::k8, BitDepth::k16}) {
    for (int t = 0; t < 30; ++t) {
      const GrayImage a(50, 40, depth, 1000 % (max_value(depth) - 1));
      const std::size_t changed = 1 + rng() % a.size();
      const double c = static_cast<double>(changed) / static_cast<double>(a.size());
      const double peak = max_value(depth);
      EXPECT_NEAR(*psnr(a, offset_fraction(a, changed)).psnr_db, 10.0 * std::log10(peak * peak / c), 1e-6);
    }
  }
}

TEST(Psnr, Mismatch) {
  EXPECT_THROW(psnr(GrayImage(4, 4, BitDepth::k8), GrayImage(4, 5, BitDepth::k8)), InputError);
  EXPECT_THROW(psnr(GrayImage(4, 4, BitDepth::k8), GrayImage(4, 4, BitDepth::k16)), InputError);
}

TEST(ReductionRatio, Examples) {
  EXPECT_DOUBLE_EQ(reduction_ratio(76, 128), 0.59375);
  EXPECT_DOUBLE_EQ(reduction_ratio(12, 128), 0.09375);
  EXPECT_DOUBLE_EQ(reduction_ratio(129, 128), 1.0078125);
  EXPECT_THROW(reduction_ratio(1, 0), InputError);
}

TEST(ReductionRatio, BoundedByRawClass) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 10; ++t) {
    const auto img = testing::random_image(32, 32, BitDepth::k8, rng);
    const auto c = sisr::encode_image(img, 4);
    EXPECT_LE(reduction_ratio(c.payload.size(), img.size() * 8), 129.0 / 128.0);
    const auto with_header = sisr::serialize(c).size() * 8;
    EXPECT_LE(reduction_ratio(with_header, img.size() * 8),
              129.0 / 128.0 + (sisr::kHeaderBytes * 8.0 + 7.0) / static_cast<double>(img.size() * 8));
  }
}

TEST(BitBalance, Examples) {
  const auto all_zero = bit_balance(BitStream::from_string("0000"));
  EXPECT_DOUBLE_EQ(all_zero.zeros_fraction, 1.0);
  EXPECT_DOUBLE_EQ(all_zero.ones_fraction, 0.0);
  EXPECT_THROW(bit_balance(BitStream{}), InputError);

  // Published 76-bit worked stream: 45 zeros, 31 ones by direct count.
  const auto worked = BitStream::from_string(
      "0 00010110 100 0101 1000 0011 0100 1101 1101 0111 0110 1001 0010 0000 0111 1000 1100 1010 1000");
  const auto text = worked.to_string();
  const auto zeros = static_cast<double>(std::count(text.begin(), text.end(), '0'));
  const auto b = bit_balance(worked);
  EXPECT_DOUBLE_EQ(b.zeros_fraction, zeros / 76.0);
  EXPECT_DOUBLE_EQ(b.zeros_fraction + b.ones_fraction, 1.0);
  EXPECT_GT(b.zeros_fraction, b.ones_fraction);
}

TEST(BitBalance, SyntheticSecretsLeanToZeros) {
  double sum = 0.0;
  const int n = 10;
  for (int i = 0; i < n; ++i) {
    CoverOptions opt;
    opt.width = 128;
    opt.height = 256;
    sum += bit_balance(sisr::encode_image(synthetic_cover(opt, 500 + static_cast<std::uint64_t>(i)), 4).payload)
               .zeros_fraction;
  }
  EXPECT_GT(sum / n, 0.5);
}

TEST(Capacity, Methods) {
  std::mt19937_64 rng(3);
  const auto cover = testing::random_image(256, 256, BitDepth::k8, rng);
  EXPECT_EQ(capacity(cover, Method::kMapping), 1.0);
  EXPECT_EQ(capacity(cover, Method::kBinaryLsb), 1.0);
  const double fib = capacity(cover, Method::kFibonacciLsb);
  EXPECT_LT(fib, 1.0);
  // Exhaustive count: 196 of 256 values have Zeckendorf bit 1 clear.
  EXPECT_NEAR(fib, 196.0 / 256.0, 0.02);

  std::size_t exact = 0;
  for (auto p : cover.pixels()) exact += (to_zeckendorf(p, BitDepth::k8).raw() & 2u) == 0;
  EXPECT_DOUBLE_EQ(fib, static_cast<double>(exact) / static_cast<double>(cover.size()));
}

}  // namespace
}  // namespace fibsteg
