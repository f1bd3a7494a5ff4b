#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fibsteg/image.hpp"

namespace fibsteg::pgm {

// Binary (P5) PGM. maxval 255 reads as 8-bit, 65535 as 16-bit big-endian;
// any other maxval is a FormatError. Header comments are skipped.
GrayImage decode(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode(const GrayImage& img);

GrayImage read(const std::filesystem::path& path);
void write(const std::filesystem::path& path, const GrayImage& img);

}  // namespace fibsteg::pgm

namespace fibsteg {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace fibsteg
