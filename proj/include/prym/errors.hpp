#pragma once

#include <stdexcept>
#include <string>

namespace prym {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension or arity mismatch between operands.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input is a degenerate object (zero form, contained plane, ...).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// A divisor-class coefficient the operation needs is Unknown.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

class DerivationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// q(μ) = 1: the quadratic form does not descend to the quotient.
class DescentObstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace prym
