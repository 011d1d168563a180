#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weylcyc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in Weyl algebras of different rank, or matrices of different size.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Chain/cochain degree bookkeeping error (wrong word length, arity, ...).
class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

// A configured degree, expansion or chamber cap was exceeded.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace weylcyc
