#pragma once

// Runtime-selected fields of characteristic != 2.
//
// A Field is a cheap shared handle to an immutable descriptor. An Element
// carries its Field and one of four representations:
//
//   Rationals       reduced mpq_class
//   PrimeField      residue in [0, p)
//   ExtensionField  coefficient vector of length k over F_p, reduced mod the modulus
//   BigComplex      pair of MPFR floats; equality is tolerance based
//
// Mixing elements of different fields throws FieldMismatch.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "tmrat/bigfloat.hpp"

namespace tmrat {

enum class FieldKind { Rationals, PrimeField, ExtensionField, BigComplex };

using Rng = std::mt19937_64;

class Element;

namespace detail {
struct FieldData;
}

class Field {
 public:
  static constexpr unsigned kDefaultComplexBits = 128;
  static constexpr long kDefaultToleranceExponent = 80;
  /// Upper bound on p so residue products fit in 64 bits.
  static constexpr std::uint64_t kMaxPrime = (1ULL << 31);

  static Field rationals();
  /// Throws DomainError for p == 2, p not prime, or p >= kMaxPrime.
  static Field prime(std::uint64_t p);
  /// F_{p^k} with the lexicographically smallest monic irreducible modulus.
  static Field extension(std::uint64_t p, unsigned k);
  /// F_{p^k} with an explicit monic modulus (low degree first, length k + 1).
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  /// Complex numbers at `bits` of precision with relative tolerance 2^-tolerance_exponent.
  /// The default tolerance exponent is bits - 48 (80 at 128 bits).
  static Field complex(unsigned bits = kDefaultComplexBits, std::optional<long> tolerance_exponent = std::nullopt);

  /// `Q` | `Fp:<p>` | `Fpk:<p>^<k>[,mod=<poly in t>]` | `C[:<bits>]`
  static Field parse(std::string_view descriptor);

  FieldKind kind() const noexcept;
  std::uint64_t characteristic() const noexcept;
  /// p for the finite fields, 0 otherwise.
  std::uint64_t prime() const noexcept;
  /// Extension degree k (1 for F_p, 0 for Q and C).
  unsigned degree() const noexcept;
  /// Monic modulus, low degree first (ExtensionField only).
  const std::vector<std::uint64_t>& modulus() const noexcept;
  unsigned precision_bits() const noexcept;
  long tolerance_exponent() const noexcept;
  const BigFloat& tolerance() const;

  bool exact() const noexcept { return kind() != FieldKind::BigComplex; }
  bool finite() const noexcept { return kind() == FieldKind::PrimeField || kind() == FieldKind::ExtensionField; }
  /// Number of elements q = p^k of a finite field.
  mpz_class order() const;

  /// Canonical descriptor text, e.g. `Fpk:3^2,mod=t^2+1`.
  std::string describe() const;

  Element zero() const;
  Element one() const;
  Element from_int(long long value) const;
  Element from_integer(const mpz_class& value) const;
  /// Throws DivisionByZero when the denominator vanishes in the field.
  Element from_rational(const mpq_class& value) const;
  /// The class of t in F_p[t]/(modulus); ExtensionField only.
  Element generator() const;
  /// Square root of -1; BigComplex only.
  Element imaginary_unit() const;
  /// Parses an element literal; see parse.hpp for the grammar.
  Element parse_element(std::string_view text) const;

  /// Finite fields: the element with the given index in canonical order.
  Element element_at(std::uint64_t index) const;
  /// Finite fields: all elements in canonical order.
  std::vector<Element> elements() const;
  /// Uniform over finite fields; small-height rationals over Q; real and
  /// imaginary parts uniform in [-4, 4] over C.
  Element random(Rng& rng) const;

  friend bool operator==(const Field& a, const Field& b);

  const detail::FieldData& data() const noexcept { return *data_; }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
  std::shared_ptr<const detail::FieldData> data_;
};

class Element {
 public:
  using Value = std::variant<mpq_class, std::uint64_t, std::vector<std::uint64_t>, BigComplex>;

  Element(Field field, Value value);

  const Field& field() const noexcept { return field_; }

  bool is_zero() const;
  bool is_one() const;
  /// Exact backends: is_zero(). BigComplex: |this| <= tol * |reference|.
  bool negligible_against(const Element& reference) const;

  Element operator-() const;
  Element inv() const;
  Element pow(std::uint64_t exponent) const;
  Element pow(const mpz_class& exponent) const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Element& other);
  Element& operator/=(const Element& other);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Element& b) { return a *= b; }
  friend Element operator/(Element a, const Element& b) { return a /= b; }

  /// Exact equality on exact backends; |a - b| <= tol * max(1, |a|, |b|) on BigComplex.
  friend bool operator==(const Element& a, const Element& b);

  std::string to_string() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint64_t residue() const { return std::get<std::uint64_t>(value_); }
  const std::vector<std::uint64_t>& coefficients() const { return std::get<std::vector<std::uint64_t>>(value_); }
  const BigComplex& complex() const { return std::get<BigComplex>(value_); }

 private:
  void check_same_field(const Element& other) const;

  Field field_;
  Value value_;
};

/// Total order used for canonicalization. Q by value, F_p by residue, F_{p^k}
/// lexicographically on coefficients from the constant term up, C
/// lexicographically on (re, im) with tolerance-collapsed ties.
std::weak_ordering canonical_order(const Element& a, const Element& b);

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

}  // namespace tmrat
