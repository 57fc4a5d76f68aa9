#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace frob {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial text that does not conform to the grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        detail_(message),
        line_(line),
        column_(column) {}

  /// The message without the location suffix.
  const std::string& detail() const noexcept { return detail_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Operands that live in different polynomial rings.
class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands belong to different rings") {}
};

/// Raised when a Groebner computation produces a basis element above the
/// configured weighted-degree cap.
class DegreeGuardExceeded : public Error {
 public:
  DegreeGuardExceeded(long degree, long guard)
      : Error("degree guard exceeded: produced degree " + std::to_string(degree) +
              " > guard " + std::to_string(guard)),
        degree_(degree),
        guard_(guard) {}

  long degree() const noexcept { return degree_; }
  long guard() const noexcept { return guard_; }

 private:
  long degree_;
  long guard_;
};

/// Invalid arguments: non-prime characteristic, inhomogeneous input where
/// homogeneity is required, and similar precondition failures.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// No polynomial f with m*f = g modulo the given ideal exists.
class NoLiftError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (division that should be exact, a
/// verification step after a lift, ...).
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace frob
