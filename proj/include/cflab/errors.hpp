#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cflab {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input (polynomials, rationals, decimals, JSON fields).
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A precondition on mathematical inputs is violated (pole parameters,
/// zero polynomial, bad index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A contiguous relation would divide by zero at these parameters.
class DegenerateRelationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// B_n vanished for some n >= 1 while iterating convergents.
class SingularConvergentError : public Error {
 public:
  SingularConvergentError(const std::string& message, long index)
      : Error(message), index_(index) {}

  long index() const noexcept { return index_; }

 private:
  long index_;
};

/// An iterative evaluation did not reach its target inside its budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& message, double last_gap)
      : Error(message), last_gap_(last_gap) {}

  double last_gap() const noexcept { return last_gap_; }

 private:
  double last_gap_;
};

/// A request exceeds a resource guard (digits, exponents, search sizes).
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A particular solution violates y_n != 0.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Registry file does not match the expected schema or fails a load-time check.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace cflab
