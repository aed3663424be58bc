#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace weilcert {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class RegistryMismatch : public Error {
 public:
  RegistryMismatch() : Error("polynomials live in different variable registries") {}
};

class UnknownVariable : public Error {
 public:
  explicit UnknownVariable(std::string name)
      : Error("unknown variable '" + name + "'"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(std::string name)
      : Error("variable '" + name + "' has no value at the evaluation point"), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DegreeZero : public Error {
 public:
  explicit DegreeZero(const std::string& var)
      : Error("resultant input is constant in '" + var + "'") {}
};

class EigenbasisMismatch : public Error {
 public:
  explicit EigenbasisMismatch(const std::string& label)
      : Error("computed eigenspace V(" + label + ") differs from the span of the named generators") {}
};

class IdentityFailed : public Error {
 public:
  IdentityFailed(std::string name, std::string residual)
      : Error("identity '" + name + "' failed; residual " + residual),
        name_(std::move(name)),
        residual_(std::move(residual)) {}
  const std::string& name() const noexcept { return name_; }
  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string name_;
  std::string residual_;
};

class BasePointFound : public Error {
 public:
  BasePointFound() : Error("restricted forms on the diagonal may share a common zero") {}
};

class NonzeroRemainder : public Error {
 public:
  explicit NonzeroRemainder(const std::string& what)
      : Error("elimination left a remainder outside the basis span: " + what) {}
};

/// Raised when the relation matrix at a coefficient triple does not have a
/// one-dimensional left kernel, i.e. the triple is outside the generic locus.
class KernelNotUnique : public Error {
 public:
  explicit KernelNotUnique(std::size_t dim)
      : Error("quadric relation kernel has dimension " + std::to_string(dim) + ", expected 1"),
        dim_(dim) {}
  std::size_t dimension() const noexcept { return dim_; }

 private:
  std::size_t dim_;
};

class WitnessNotFound : public Error {
 public:
  explicit WitnessNotFound(std::size_t attempts)
      : Error("no witness triple found after " + std::to_string(attempts) + " attempts") {}
};

class CertificateMismatch : public Error {
 public:
  CertificateMismatch(std::string field, const std::string& detail)
      : Error("certificate mismatch in '" + field + "': " + detail), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace weilcert
