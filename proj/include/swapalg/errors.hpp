#pragma once

#include <stdexcept>
#include <string>

namespace swapalg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: points outside a point set, wrong tuple sizes, bad flags.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A lemma or operation hypothesis does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a variable with no assigned value.
class IncompleteAssignment : public Error {
 public:
  using Error::Error;
};

/// A denominator (or an inverted numerator) is zero in the rank-n ring.
class ZeroDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace swapalg
