#pragma once

#include <stdexcept>
#include <string>

namespace tmrat {

/// Malformed literal, descriptor or command payload.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input that the mathematics rejects: zero resultant, excluded
/// locus, division by zero, a factorization that does not split, ...
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero") {}
};

/// Roots were requested but the form has an irreducible factor of degree > 1
/// over the working field. `factor` is the printed irreducible remainder.
class IncompleteFactorization : public DomainError {
 public:
  IncompleteFactorization(const std::string& what, std::string factor)
      : DomainError(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

/// Operands live over different fields.
class FieldMismatch : public std::invalid_argument {
 public:
  FieldMismatch() : std::invalid_argument("field mismatch") {}
};

/// A postcondition that the mathematics guarantees failed to hold.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace tmrat
