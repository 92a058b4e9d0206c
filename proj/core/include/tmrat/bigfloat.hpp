#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace tmrat {

/// Owning wrapper around an `mpfr_t` with a fixed precision. All arithmetic
/// results take the larger precision of the operands and round to nearest.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec);
  BigFloat(mpfr_prec_t prec, long value);
  BigFloat(mpfr_prec_t prec, const mpq_class& value);
  /// Parses a decimal literal (`1.25`, `-3e-7`). Throws ParseError.
  BigFloat(mpfr_prec_t prec, std::string_view decimal);

  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  mpfr_ptr get() noexcept { return v_; }
  mpfr_srcptr get() const noexcept { return v_; }
  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(v_); }

  bool is_zero() const noexcept { return mpfr_zero_p(v_) != 0; }
  int sign() const noexcept { return mpfr_sgn(v_); }
  double to_double() const noexcept { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Shortest `%Rg` rendering with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a);
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);
  friend bool operator==(const BigFloat& a, const BigFloat& b);

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  friend BigFloat cbrt(const BigFloat& a);
  friend BigFloat hypot(const BigFloat& a, const BigFloat& b);
  friend BigFloat atan2(const BigFloat& y, const BigFloat& x);
  friend BigFloat cos(const BigFloat& a);
  friend BigFloat sin(const BigFloat& a);

  /// 2^exponent at the given precision.
  static BigFloat pow2(mpfr_prec_t prec, long exponent);

 private:
  mpfr_t v_;
};

/// Complex number as a pair of BigFloats of equal precision.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(mpfr_prec_t prec) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const noexcept { return re.precision(); }
  bool is_zero() const noexcept { return re.is_zero() && im.is_zero(); }

  friend BigComplex operator+(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  /// Throws DivisionByZero when `b` is exactly zero.
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator-(const BigComplex& a);
};

BigFloat modulus(const BigComplex& z);
/// Principal square root.
BigComplex csqrt(const BigComplex& z);
/// Principal cube root (argument divided by three).
BigComplex ccbrt(const BigComplex& z);

}  // namespace tmrat
