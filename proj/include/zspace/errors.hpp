#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zspace {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value outside the mathematical domain of an operation (bad order, bad p,
/// undefined body evaluation, ...). Maps to CLI exit code 2.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidP : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidShift : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptySearch : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidSweep : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The integrand produced NaN or an infinity at a quadrature node.
class NonFiniteSample : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Quadrature would need more evaluations than the configured budget.
/// Maps to CLI exit code 3.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed coordinate list or space tag.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Expression syntax error; `offset` is the byte offset into the source text.
class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : ParseError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class UnknownFunction : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

class BadCoordinateIndex : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

}  // namespace zspace
