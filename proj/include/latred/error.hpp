#pragma once

#include <stdexcept>
#include <string>

namespace latred {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed basis text. `position` is the byte offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Basis vectors are linearly dependent (or numerically indistinguishable from it).
class RankError : public Error {
 public:
  using Error::Error;
};

/// Floating-point Gram-Schmidt data could not be stabilized.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied argument is outside its documented domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace latred
