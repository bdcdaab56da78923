#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homalg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A malformed tree (missing child, zero-weight alpha node).
class StructuralError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        message_(what),
        line_(line),
        column_(column) {}

  const std::string& message() const { return message_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A term lies outside the saturation window; the caller must enlarge the bound.
class OutOfWindowError : public Error {
 public:
  using Error::Error;
};

/// The bounded basis would exceed the configured cap.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t cap) : Error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// A nonzero unit component was sent into a target without a strict unit.
class UnitMismatchError : public Error {
 public:
  using Error::Error;
};

/// A generator has no image in a morphism assignment.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

class NamingError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition failed; the message carries a witness.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A coaction and twisting maps fail rho o phi_A = (phi_H (x) phi_A) o rho.
class CompatibilityError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace homalg
