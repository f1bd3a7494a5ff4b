#include "fibsteg/pgm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>

#include "fibsteg/errors.hpp"

namespace fibsteg {
namespace pgm {
namespace {

class HeaderParser {
 public:
  explicit HeaderParser(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* what) {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    std::size_t v = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      v = v * 10 + static_cast<std::size_t>(bytes_[pos_++] - '0');
      if (v > 0xFFFFFFFFu) throw FormatError(std::string("PGM header: ") + what + " too large");
    }
    return v;
  }

  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }
  bool at_space() const { return pos_ < bytes_.size() && std::isspace(bytes_[pos_]); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 2;
};

}  // namespace

GrayImage decode(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') throw FormatError("not a binary PGM (P5) file");
  HeaderParser hp(bytes);
  const std::size_t width = hp.number("width");
  const std::size_t height = hp.number("height");
  const std::size_t maxval = hp.number("maxval");
  if (!hp.at_space()) throw FormatError("PGM header: missing whitespace before raster");
  hp.advance();
  if (width == 0 || height == 0) throw FormatError("PGM has zero width or height");

  BitDepth depth;
  if (maxval == 255) {
    depth = BitDepth::k8;
  } else if (maxval == 65535) {
    depth = BitDepth::k16;
  } else {
    throw FormatError("unsupported PGM maxval " + std::to_string(maxval) + " (need 255 or 65535)");
  }
  const std::size_t bpp = depth == BitDepth::k8 ? 1 : 2;
  const std::size_t expected = width * height * bpp;
  if (bytes.size() - hp.pos() != expected) {
    throw FormatError("PGM raster has " + std::to_string(bytes.size() - hp.pos()) + " bytes, header implies " +
                      std::to_string(expected));
  }
  std::vector<std::uint16_t> px(width * height);
  const auto* raster = bytes.data() + hp.pos();
  for (std::size_t i = 0; i < px.size(); ++i) {
    px[i] = bpp == 1 ? raster[i] : static_cast<std::uint16_t>((raster[2 * i] << 8) | raster[2 * i + 1]);
  }
  return GrayImage(width, height, depth, std::move(px));
}

std::vector<std::uint8_t> encode(const GrayImage& img) {
  const std::string header = "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n" +
                             std::to_string(max_value(img.depth())) + "\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const bool wide = img.depth() == BitDepth::k16;
  out.reserve(out.size() + img.size() * (wide ? 2 : 1));
  for (auto p : img.pixels()) {
    if (wide) out.push_back(static_cast<std::uint8_t>(p >> 8));
    out.push_back(static_cast<std::uint8_t>(p & 0xFF));
  }
  return out;
}

GrayImage read(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return decode(bytes);
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write(const std::filesystem::path& path, const GrayImage& img) { write_file(path, encode(img)); }

}  // namespace pgm

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw InputError("write failed for " + path.string());
}

}  // namespace fibsteg
