#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metabelian {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings (or algebras) of different rank.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A variable index falls outside [1, n].
class RankError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input was expected to be S_n-invariant but is not.
class InvarianceError : public Error {
 public:
  using Error::Error;
};

/// A wreath element is not in the image of the embedding.
class MembershipError : public Error {
 public:
  using Error::Error;
};

/// A vector violates sum_j j*t_j = 0.
class KernelError : public Error {
 public:
  using Error::Error;
};

/// A computation exceeded a hard size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// An internal identity failed; always indicates a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace metabelian
