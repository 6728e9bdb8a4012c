#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is well formed but mathematically outside the supported domain
/// (non-finite solution set, degenerate elimination direction, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial text. `column` is 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t column)
      : Error(what + " at column " + std::to_string(column)), column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A self-check failed. Seeing one of these means a bug in this library.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace nf
