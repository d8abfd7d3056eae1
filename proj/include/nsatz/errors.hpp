#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nsatz {

/// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Operands belong to different rings.
class RingMismatch : public Error {
  public:
    using Error::Error;
};

/// Vector lengths or variable counts disagree.
class ArityMismatch : public Error {
  public:
    using Error::Error;
};

/// Inversion requested for a non-unit.
class NotAUnit : public Error {
  public:
    using Error::Error;
};

/// Ring construction rejected (composite prime-field modulus, modulus < 2, ...).
class InvalidRing : public Error {
  public:
    using Error::Error;
};

/// A theorem hypothesis does not hold for the given input.
class HypothesisViolation : public Error {
  public:
    using Error::Error;
};

/// Expression or value text could not be parsed.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}
    explicit ParseError(const std::string& msg) : Error(msg), position_(0) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// A guaranteed-by-theorem condition failed; signals a bug, never a valid input state.
class InternalError : public Error {
  public:
    using Error::Error;
};

} // namespace nsatz
