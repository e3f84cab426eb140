#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace heckecells {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset for
/// single-line grammars and a 1-based line number for line-oriented files.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at " + std::to_string(position) + ")"), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An argument lies outside the domain of the operation (element not in a
/// parabolic subgroup, infinite system where a finite one is needed, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace heckecells
