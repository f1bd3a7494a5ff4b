#include "fibsteg/covers.hpp"

#include <gtest/gtest.h>

#include "fibsteg/errors.hpp"
#include "fibsteg/pgm.hpp"
#include "fibsteg/steganalysis.hpp"

namespace fibsteg {
namespace {

CoverOptions small(std::size_t w = 128, std::size_t h = 96) {
  CoverOptions o;
  o.width = w;
  o.height = h;
  return o;
}

TEST(Covers, Deterministic) {
  EXPECT_EQ(pgm::encode(synthetic_cover(small(), 42)), pgm::encode(synthetic_cover(small(), 42)));
  EXPECT_NE(synthetic_cover(small(), 42), synthetic_cover(small(), 43));
  EXPECT_EQ(uniform_random_image(16, 16, BitDepth::k8, 5), uniform_random_image(16, 16, BitDepth::k8, 5));
}

TEST(Covers, DimensionsAndRange) {
  auto opt = small(70, 33);
  opt.depth = BitDepth::k16;
  const auto img = synthetic_cover(opt, 1);
  EXPECT_EQ(img.width(), 70u);
  EXPECT_EQ(img.height(), 33u);
  EXPECT_EQ(img.depth(), BitDepth::k16);
  EXPECT_THROW(synthetic_cover(small(0, 4), 1), InputError);
}

TEST(Covers, NontrivialLocalVariance) {
  const auto img = synthetic_cover(small(), 3);
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t y = 0; y < img.height(); ++y) {
    for (std::size_t x = 1; x < img.width(); ++x) {
      const double d = static_cast<double>(img.at(x, y)) - static_cast<double>(img.at(x - 1, y));
      sum += d * d;
      ++n;
    }
  }
  EXPECT_GT(sum / static_cast<double>(n), 1.0);
}

TEST(Covers, LookCleanToRs) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = rs_statistics(synthetic_cover(small(256, 256), seed));
    EXPECT_LT(std::abs(r.rm - r.rm_neg), 0.02);
    EXPECT_LT(std::abs(r.sm - r.sm_neg), 0.02);
    EXPECT_GT(r.rm, r.sm);
  }
}

}  // namespace
}  // namespace fibsteg
