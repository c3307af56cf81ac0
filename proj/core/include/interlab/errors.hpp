#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace interlab {

using Value = int;
using Tuple = std::vector<Value>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unknown coordinate, overlapping signatures, malformed tuples and similar.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold. Carries one
/// tuple demonstrating the violation when such a tuple exists.
class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what,
                                 std::optional<Tuple> witness = std::nullopt)
      : Error(what), witness_(std::move(witness)) {}

  const std::optional<Tuple>& witness() const noexcept { return witness_; }

 private:
  std::optional<Tuple> witness_;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured bound.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace interlab
