#pragma once

#include <stdexcept>
#include <string>

namespace pommiez {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Violation of a documented precondition or domain restriction
/// (division by zero, pole inside the region, point outside the field, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input. `position` is a 0-based offset into the source.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A self-check failed: an identity that must hold by construction does not.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pommiez
