#include "fibsteg/bitstream.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fibsteg/errors.hpp"
#include "test_support.hpp"

namespace fibsteg {
namespace {

TEST(BitStream, AppendPacksMsbFirst) {
  BitStream b;
  b.append(0b101, 3);
  b.append(0x1F, 5);
  b.push_back(true);
  ASSERT_EQ(b.size(), 9u);
  ASSERT_EQ(b.bytes().size(), 2u);
  EXPECT_EQ(b.bytes()[0], 0b10111111);
  EXPECT_EQ(b.bytes()[1], 0b10000000);
  EXPECT_EQ(b.to_string(), "101111111");
}

TEST(BitStream, FromStringIgnoresWhitespace) {
  const auto b = BitStream::from_string("0 0001 0110\n100");
  EXPECT_EQ(b.to_string(), "000010110100");
  EXPECT_THROW(BitStream::from_string("01x"), InputError);
}

TEST(BitStream, FromBytesMasksPadding) {
  const std::vector<std::uint8_t> bytes{0xAB, 0xFF};
  const auto b = BitStream::from_bytes(bytes, 12);
  EXPECT_EQ(b.to_string(), "101010111111");
  EXPECT_EQ(b.bytes()[1], 0xF0);
  EXPECT_THROW(BitStream::from_bytes(bytes, 17), FormatError);
}

TEST(BitStream, UnalignedAppendMatchesBitwise) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_bits(rng() % 40, rng);
    const auto b = testing::random_bits(rng() % 40, rng);
    BitStream joined = a;
    joined.append(b);
    EXPECT_EQ(joined.to_string(), a.to_string() + b.to_string());
  }
}

TEST(BitStream, SetAndCount) {
  BitStream b = BitStream::from_string("0000000000");
  b.set(3, true);
  b.set(9, true);
  EXPECT_EQ(b.count_ones(), 2u);
  b.set(3, false);
  EXPECT_EQ(b.to_string(), "0000000001");
}

TEST(BitReader, ReadsFieldsAndDetectsTruncation) {
  const auto b = BitStream::from_string("1 00010110 101");
  BitReader r(b);
  EXPECT_TRUE(r.read_bit());
  EXPECT_EQ(r.read(8), 22u);
  EXPECT_EQ(r.remaining(), 3u);
  EXPECT_THROW(r.read(4), FormatError);
  EXPECT_EQ(r.read(3), 5u);
  EXPECT_THROW(r.read_bit(), FormatError);
}

}  // namespace
}  // namespace fibsteg
