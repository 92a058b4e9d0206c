#include "tmrat/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "tmrat/error.hpp"

namespace tmrat {

namespace {

mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(mpfr_prec_t prec, long value) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t prec, const mpq_class& value) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(mpfr_prec_t prec, std::string_view decimal) {
  mpfr_init2(v_, prec);
  std::string text(decimal);
  char* end = nullptr;
  if (!text.empty()) mpfr_strtofr(v_, text.c_str(), &end, 10, MPFR_RNDN);
  if (text.empty() || end != text.c_str() + text.size()) {
    mpfr_clear(v_);
    throw ParseError("bad decimal literal '" + text + "'");
  }
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(v_, other.precision());
  mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

std::string BigFloat::to_string(int digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", digits, v_);
  std::string out(buffer);
  mpfr_free_str(buffer);
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_neg(r.v_, a.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

BigFloat abs(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat cbrt(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(max_prec(y, x));
  mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat cos(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_cos(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sin(const BigFloat& a) {
  BigFloat r(a.precision());
  mpfr_sin(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow2(mpfr_prec_t prec, long exponent) {
  BigFloat r(prec, 1L);
  mpfr_mul_2si(r.v_, r.v_, exponent, MPFR_RNDN);
  return r;
}

BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }

BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
  if (b.is_zero()) throw DivisionByZero();
  // Smith's algorithm keeps the intermediate quotient bounded.
  if (abs(b.re) >= abs(b.im)) {
    BigFloat ratio = b.im / b.re;
    BigFloat denom = b.re + b.im * ratio;
    return {(a.re + a.im * ratio) / denom, (a.im - a.re * ratio) / denom};
  }
  BigFloat ratio = b.re / b.im;
  BigFloat denom = b.re * ratio + b.im;
  return {(a.re * ratio + a.im) / denom, (a.im * ratio - a.re) / denom};
}

BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }

BigFloat modulus(const BigComplex& z) { return hypot(z.re, z.im); }

BigComplex csqrt(const BigComplex& z) {
  if (z.is_zero()) return BigComplex(z.precision());
  BigFloat r = modulus(z);
  BigFloat two(z.precision(), 2L);
  BigFloat real = sqrt((r + abs(z.re)) / two);
  BigFloat other = abs(z.im) / (two * real);
  if (z.re.sign() >= 0) {
    return {real, z.im.sign() < 0 ? -other : other};
  }
  return {other, z.im.sign() < 0 ? -real : real};
}

BigComplex ccbrt(const BigComplex& z) {
  if (z.is_zero()) return BigComplex(z.precision());
  BigFloat r = cbrt(modulus(z));
  BigFloat theta = atan2(z.im, z.re) / BigFloat(z.precision(), 3L);
  return {r * cos(theta), r * sin(theta)};
}

}  // namespace tmrat
