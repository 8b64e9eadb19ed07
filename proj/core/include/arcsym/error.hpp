#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace arcsym {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad syntax, mismatched degree,
/// point out of range, invalid construction parameters).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An explicit structure would violate its defining axioms (e.g. a digraph
/// with a loop or a symmetric pair, a group that does not act by
/// automorphisms).
class ValidationError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A configured search or size bound would be exceeded. Never a wrong answer:
/// the operation stops and reports which limit it hit.
class BoundExceeded : public Error {
 public:
  BoundExceeded(std::string bound, std::uint64_t limit, std::string detail)
      : Error("bound '" + bound + "' exceeded (limit " + std::to_string(limit) +
              "): " + detail),
        bound_(std::move(bound)),
        limit_(limit) {}

  const std::string& bound() const noexcept { return bound_; }
  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::string bound_;
  std::uint64_t limit_;
};

/// A backtrack search ran out of nodes before reaching a verdict. Distinct
/// from a verified negative answer.
class SearchExhausted : public BoundExceeded {
 public:
  using BoundExceeded::BoundExceeded;
};

}  // namespace arcsym
