#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tmrat/field.hpp"
#include "tmrat/projective.hpp"

namespace tmrat {

/// Dense univariate polynomial, coefficients low degree first, never with a
/// zero leading coefficient. The zero polynomial has degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<Element> coeffs);

  static Polynomial constant(Element c);
  /// z - root
  static Polynomial linear_root(const Element& root);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Element>& coefficients() const noexcept { return c_; }
  const Element& operator[](std::size_t i) const { return c_.at(i); }
  const Element& leading() const;

  Element evaluate(const Element& z) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  Polynomial scaled(const Element& s) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Polynomial in z, e.g. `3*z^2+1`.
  std::string to_string(char variable = 'z') const;

 private:
  void normalize();
  Field field_;
  std::vector<Element> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero). Exact fields only.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// base^exponent mod modulus.
Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus);

/// A binary form sum_i c_i X^(d-i) Y^i, coefficients listed high degree first in X.
class BinaryForm {
 public:
  /// Throws std::invalid_argument for an empty coefficient list.
  explicit BinaryForm(std::vector<Element> coeffs);

  /// prod (y_i X - x_i Y) over the given points.
  static BinaryForm from_roots(const std::vector<ProjPoint>& points, const Field& field);
  /// Homogenizes a univariate polynomial to the given degree (>= its degree).
  static BinaryForm homogenize(const Polynomial& f, unsigned degree);

  unsigned degree() const noexcept { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<Element>& coefficients() const noexcept { return c_; }
  const Element& operator[](std::size_t i) const { return c_.at(i); }
  const Field& field() const noexcept { return c_.front().field(); }
  bool is_zero() const;

  Element evaluate(const ProjPoint& p) const;
  BinaryForm derivative_x() const;
  BinaryForm derivative_y() const;
  /// f(a X + b Y, c X + d Y) for the matrix entries of g.
  BinaryForm substitute(const MobiusMap& g) const;
  /// Multiplicity of the root at infinity (number of leading zero coefficients).
  unsigned infinity_multiplicity() const;
  /// f(z, 1)
  Polynomial dehomogenize() const;
  /// Same degree and proportional coefficient vectors.
  bool proportional(const BinaryForm& other) const;

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  BinaryForm scaled(const Element& s) const;

  /// `[c0,c1,...,cd]`
  std::string to_string() const;

 private:
  std::vector<Element> c_;
};

/// Determinant by Gaussian elimination (partial pivoting by modulus over C).
Element determinant(std::vector<std::vector<Element>> m, const Field& field);

/// The 4x4 Sylvester determinant of two binary quadratics. Zero exactly when
/// they share a root over the algebraic closure. Throws DomainError for a zero form.
Element resultant2(const BinaryForm& f, const BinaryForm& g);

/// df/dX * dg/dY - df/dY * dg/dX; for quadratics, the form whose roots are
/// the critical points of [f : g].
BinaryForm wronskian(const BinaryForm& f, const BinaryForm& g);

/// b^2 - 4ac of a binary quadratic.
Element discriminant2(const BinaryForm& f);

/// gcd of two binary forms, normalized monic in the dehomogenized variable.
/// Exact fields only; throws DomainError on C or when both forms are zero.
BinaryForm poly_gcd(const BinaryForm& f, const BinaryForm& g);

}  // namespace tmrat
