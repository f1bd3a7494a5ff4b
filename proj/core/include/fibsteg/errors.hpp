#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibsteg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Caller supplied something outside an operation's domain (bad dimensions,
// empty input, unsupported depth).
class InputError : public Error {
 public:
  using Error::Error;
};

// Integer outside the range representable at a given bit depth.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Zeckendorf word with two adjacent set bits, or a low triplet outside
// {000, 001, 010, 100, 101}.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

// Malformed or truncated serialized data (.sisr containers, PGM files,
// bit streams).
class FormatError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::size_t required, std::size_t available)
      : Error(what), required_(required), available_(available) {}

  std::size_t required() const noexcept { return required_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t required_;
  std::size_t available_;
};

// Length header read back from a stego image is inconsistent with the
// image's capacity; usually a wrong key or method.
class CorruptStegoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fibsteg
