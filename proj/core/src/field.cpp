#include "tmrat/field.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "fp_poly.hpp"
#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  unsigned k = 0;
  std::vector<std::uint64_t> modulus;  // monic, low first, length k + 1
  unsigned bits = 0;
  long tol_exp = 0;
  std::optional<BigFloat> tol;
};

}  // namespace detail

using detail::FpPoly;
using detail::Residue;

namespace {

FpPoly to_poly(const std::vector<std::uint64_t>& coeffs) {
  FpPoly f(coeffs.begin(), coeffs.end());
  detail::trim(f);
  return f;
}

std::vector<std::uint64_t> pad(FpPoly f, unsigned k) {
  f.resize(k, 0);
  return f;
}

std::string format_t_poly(const std::vector<std::uint64_t>& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    std::uint64_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

int decimal_digits(unsigned bits) { return static_cast<int>(std::floor(bits * std::log10(2.0))) + 2; }

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError("bad " + std::string(what) + " '" + std::string(text) + "' in field descriptor");
  }
  return value;
}

void validate_prime(std::uint64_t p) {
  if (p == 2) throw DomainError("characteristic two unsupported");
  if (p >= Field::kMaxPrime) throw DomainError("prime too large: " + std::to_string(p));
  if (!detail::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

}  // namespace

// ---------------------------------------------------------------------------
// Field

Field Field::rationals() {
  static const auto data = [] {
    auto d = std::make_shared<detail::FieldData>();
    d->kind = FieldKind::Rationals;
    return d;
  }();
  return Field(data);
}

Field Field::prime(std::uint64_t p) {
  validate_prime(p);
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::PrimeField;
  d->p = p;
  d->k = 1;
  return Field(std::move(d));
}

Field Field::extension(std::uint64_t p, unsigned k) {
  validate_prime(p);
  if (k == 0) throw DomainError("extension degree must be positive");
  return extension(p, detail::smallest_irreducible(p, k));
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  validate_prime(p);
  for (auto& c : modulus) c %= p;
  FpPoly f = to_poly(modulus);
  if (f.size() < 2) throw DomainError("extension modulus must have positive degree");
  if (f.back() != 1) throw DomainError("extension modulus must be monic");
  if (!detail::is_irreducible(f, p)) throw DomainError("extension modulus is reducible over F_" + std::to_string(p));
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::ExtensionField;
  d->p = p;
  d->k = static_cast<unsigned>(f.size() - 1);
  d->modulus.assign(f.begin(), f.end());
  return Field(std::move(d));
}

Field Field::complex(unsigned bits, std::optional<long> tolerance_exponent) {
  if (bits < 64 || bits > 1u << 16) throw DomainError("complex precision must lie in [64, 65536] bits");
  long tol = tolerance_exponent.value_or(static_cast<long>(bits) - 48);
  if (tol < 1 || tol >= static_cast<long>(bits)) throw DomainError("complex tolerance exponent out of range");
  auto d = std::make_shared<detail::FieldData>();
  d->kind = FieldKind::BigComplex;
  d->bits = bits;
  d->tol_exp = tol;
  d->tol = BigFloat::pow2(bits, -tol);
  return Field(std::move(d));
}

Field Field::parse(std::string_view descriptor) {
  auto text = std::string(descriptor);
  text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }), text.end());
  std::string_view s = text;
  if (s == "Q") return rationals();
  if (s == "C") return complex();
  if (s.starts_with("C:")) return complex(static_cast<unsigned>(parse_uint(s.substr(2), "precision")));
  if (s.starts_with("Fp:")) return prime(parse_uint(s.substr(3), "prime"));
  if (s.starts_with("Fpk:")) {
    s.remove_prefix(4);
    std::string_view mod_text;
    if (auto comma = s.find(','); comma != std::string_view::npos) {
      mod_text = s.substr(comma + 1);
      s = s.substr(0, comma);
      if (!mod_text.starts_with("mod=")) throw ParseError("expected mod=<poly> in field descriptor");
      mod_text.remove_prefix(4);
    }
    auto caret = s.find('^');
    if (caret == std::string_view::npos) throw ParseError("expected Fpk:<p>^<k>");
    std::uint64_t p = parse_uint(s.substr(0, caret), "prime");
    auto k = static_cast<unsigned>(parse_uint(s.substr(caret + 1), "extension degree"));
    if (mod_text.empty()) return extension(p, k);
    Field base = prime(p);
    auto coeffs = parse_polynomial(mod_text, base, 't');
    std::vector<std::uint64_t> modulus;
    for (const auto& c : coeffs) modulus.push_back(c.residue());
    Field f = extension(p, modulus);
    if (f.degree() != k) throw DomainError("modulus degree does not match extension degree");
    return f;
  }
  throw ParseError("unknown field descriptor '" + std::string(descriptor) + "'");
}

FieldKind Field::kind() const noexcept { return data_->kind; }
std::uint64_t Field::characteristic() const noexcept { return data_->p; }
std::uint64_t Field::prime() const noexcept { return data_->p; }
unsigned Field::degree() const noexcept { return data_->k; }
const std::vector<std::uint64_t>& Field::modulus() const noexcept { return data_->modulus; }
unsigned Field::precision_bits() const noexcept { return data_->bits; }
long Field::tolerance_exponent() const noexcept { return data_->tol_exp; }

const BigFloat& Field::tolerance() const {
  if (!data_->tol) throw std::logic_error("tolerance requested on an exact field");
  return *data_->tol;
}

mpz_class Field::order() const {
  if (!finite()) throw std::logic_error("order of an infinite field");
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), data_->p, data_->k);
  return q;
}

std::string Field::describe() const {
  switch (kind()) {
    case FieldKind::Rationals:
      return "Q";
    case FieldKind::PrimeField:
      return "Fp:" + std::to_string(prime());
    case FieldKind::ExtensionField:
      return "Fpk:" + std::to_string(prime()) + "^" + std::to_string(degree()) + ",mod=" + format_t_poly(modulus());
    case FieldKind::BigComplex:
      return "C:" + std::to_string(precision_bits());
  }
  return {};
}

bool operator==(const Field& a, const Field& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.kind == y.kind && x.p == y.p && x.k == y.k && x.modulus == y.modulus && x.bits == y.bits &&
         x.tol_exp == y.tol_exp;
}

Element Field::zero() const { return from_int(0); }
Element Field::one() const { return from_int(1); }

Element Field::from_int(long long value) const { return from_integer(mpz_class(std::to_string(value))); }

Element Field::from_integer(const mpz_class& value) const {
  switch (kind()) {
    case FieldKind::Rationals:
      return Element(*this, mpq_class(value));
    case FieldKind::PrimeField:
      return Element(*this, static_cast<std::uint64_t>(mpz_fdiv_ui(value.get_mpz_t(), prime())));
    case FieldKind::ExtensionField: {
      std::vector<std::uint64_t> c(degree(), 0);
      c[0] = mpz_fdiv_ui(value.get_mpz_t(), prime());
      return Element(*this, std::move(c));
    }
    case FieldKind::BigComplex:
      return Element(*this, BigComplex(BigFloat(precision_bits(), mpq_class(value)), BigFloat(precision_bits())));
  }
  throw std::logic_error("unreachable");
}

Element Field::from_rational(const mpq_class& value) const {
  if (sgn(value.get_den()) == 0) throw DivisionByZero();
  if (kind() == FieldKind::Rationals) {
    mpq_class v = value;
    v.canonicalize();
    return Element(*this, std::move(v));
  }
  if (kind() == FieldKind::BigComplex) {
    return Element(*this, BigComplex(BigFloat(precision_bits(), value), BigFloat(precision_bits())));
  }
  Element den = from_integer(value.get_den());
  if (den.is_zero()) throw DivisionByZero();
  return from_integer(value.get_num()) / den;
}

Element Field::generator() const {
  if (kind() != FieldKind::ExtensionField) throw DomainError("generator t is only defined in extension fields");
  std::vector<std::uint64_t> c(degree(), 0);
  if (degree() == 1) {
    // t is a root of the linear modulus t + m0.
    c[0] = (prime() - modulus()[0]) % prime();
  } else {
    c[1] = 1;
  }
  return Element(*this, std::move(c));
}

Element Field::imaginary_unit() const {
  if (kind() != FieldKind::BigComplex) throw DomainError("imaginary unit is only defined over C");
  return Element(*this, BigComplex(BigFloat(precision_bits()), BigFloat(precision_bits(), 1L)));
}

Element Field::parse_element(std::string_view text) const {
  auto coeffs = parse_polynomial(text, *this, '\0');
  return coeffs.empty() ? zero() : coeffs.front();
}

Element Field::element_at(std::uint64_t index) const {
  if (kind() == FieldKind::PrimeField) return Element(*this, index % prime());
  if (kind() != FieldKind::ExtensionField) throw std::logic_error("element_at on an infinite field");
  std::vector<std::uint64_t> c(degree(), 0);
  for (std::size_t i = degree(); i-- > 0;) {
    c[i] = index % prime();
    index /= prime();
  }
  return Element(*this, std::move(c));
}

std::vector<Element> Field::elements() const {
  mpz_class q = order();
  if (q > 1'000'000) throw DomainError("field too large to enumerate");
  std::vector<Element> out;
  out.reserve(q.get_ui());
  for (std::uint64_t i = 0; i < q.get_ui(); ++i) out.push_back(element_at(i));
  return out;
}

Element Field::random(Rng& rng) const {
  switch (kind()) {
    case FieldKind::Rationals: {
      std::uniform_int_distribution<long> num(-20, 20);
      std::uniform_int_distribution<long> den(1, 9);
      mpq_class q(num(rng), den(rng));
      q.canonicalize();
      return Element(*this, q);
    }
    case FieldKind::PrimeField:
      return Element(*this, std::uniform_int_distribution<std::uint64_t>(0, prime() - 1)(rng));
    case FieldKind::ExtensionField: {
      std::vector<std::uint64_t> c(degree());
      for (auto& x : c) x = std::uniform_int_distribution<std::uint64_t>(0, prime() - 1)(rng);
      return Element(*this, std::move(c));
    }
    case FieldKind::BigComplex: {
      std::uniform_int_distribution<long> dist(-1'000'000, 1'000'000);
      mpq_class re(dist(rng), 250'000), im(dist(rng), 250'000);
      re.canonicalize();
      im.canonicalize();
      return Element(*this, BigComplex(BigFloat(precision_bits(), re), BigFloat(precision_bits(), im)));
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Element

Element::Element(Field field, Value value) : field_(std::move(field)), value_(std::move(value)) {}

void Element::check_same_field(const Element& other) const {
  if (!(field_ == other.field_)) throw FieldMismatch();
}

bool Element::is_zero() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return sgn(rational()) == 0;
    case FieldKind::PrimeField:
      return residue() == 0;
    case FieldKind::ExtensionField:
      return std::all_of(coefficients().begin(), coefficients().end(), [](auto c) { return c == 0; });
    case FieldKind::BigComplex:
      return modulus(complex()) <= field_.tolerance();
  }
  return false;
}

bool Element::is_one() const { return *this == field_.one(); }

bool Element::negligible_against(const Element& reference) const {
  check_same_field(reference);
  if (field_.exact()) return is_zero();
  return modulus(complex()) <= field_.tolerance() * modulus(reference.complex());
}

Element Element::operator-() const {
  return field_.zero() - *this;
}

Element& Element::operator+=(const Element& other) {
  check_same_field(other);
  const auto p = field_.prime();
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(value_) += other.rational();
      break;
    case FieldKind::PrimeField:
      value_ = detail::add_mod(residue(), other.residue(), p);
      break;
    case FieldKind::ExtensionField: {
      auto& c = std::get<std::vector<std::uint64_t>>(value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::add_mod(c[i], other.coefficients()[i], p);
      break;
    }
    case FieldKind::BigComplex:
      value_ = complex() + other.complex();
      break;
  }
  return *this;
}

Element& Element::operator-=(const Element& other) {
  check_same_field(other);
  const auto p = field_.prime();
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(value_) -= other.rational();
      break;
    case FieldKind::PrimeField:
      value_ = detail::sub_mod(residue(), other.residue(), p);
      break;
    case FieldKind::ExtensionField: {
      auto& c = std::get<std::vector<std::uint64_t>>(value_);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::sub_mod(c[i], other.coefficients()[i], p);
      break;
    }
    case FieldKind::BigComplex:
      value_ = complex() - other.complex();
      break;
  }
  return *this;
}

Element& Element::operator*=(const Element& other) {
  check_same_field(other);
  const auto p = field_.prime();
  switch (field_.kind()) {
    case FieldKind::Rationals:
      std::get<mpq_class>(value_) *= other.rational();
      break;
    case FieldKind::PrimeField:
      value_ = detail::mul_mod(residue(), other.residue(), p);
      break;
    case FieldKind::ExtensionField: {
      FpPoly prod = detail::poly_mul(to_poly(coefficients()), to_poly(other.coefficients()), p);
      value_ = pad(detail::poly_mod(prod, to_poly(field_.modulus()), p), field_.degree());
      break;
    }
    case FieldKind::BigComplex:
      value_ = complex() * other.complex();
      break;
  }
  return *this;
}

Element& Element::operator/=(const Element& other) { return *this *= other.inv(); }

Element Element::inv() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      if (sgn(rational()) == 0) throw DivisionByZero();
      return Element(field_, mpq_class(1) / rational());
    case FieldKind::PrimeField:
      return Element(field_, detail::inv_mod(residue(), field_.prime()));
    case FieldKind::ExtensionField: {
      FpPoly a = to_poly(coefficients());
      if (a.empty()) throw DivisionByZero();
      return Element(field_, pad(detail::poly_invmod(a, to_poly(field_.modulus()), field_.prime()), field_.degree()));
    }
    case FieldKind::BigComplex: {
      if (is_zero()) throw DivisionByZero();
      BigComplex one(BigFloat(field_.precision_bits(), 1L), BigFloat(field_.precision_bits()));
      return Element(field_, one / complex());
    }
  }
  throw std::logic_error("unreachable");
}

Element Element::pow(std::uint64_t exponent) const { return pow(mpz_class(std::to_string(exponent))); }

Element Element::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inv().pow(mpz_class(-exponent));
  Element result = field_.one();
  std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  if (exponent == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

bool operator==(const Element& a, const Element& b) {
  a.check_same_field(b);
  switch (a.field_.kind()) {
    case FieldKind::Rationals:
      return a.rational() == b.rational();
    case FieldKind::PrimeField:
      return a.residue() == b.residue();
    case FieldKind::ExtensionField:
      return a.coefficients() == b.coefficients();
    case FieldKind::BigComplex: {
      const auto& tol = a.field_.tolerance();
      BigFloat scale(a.field_.precision_bits(), 1L);
      BigFloat ma = modulus(a.complex());
      BigFloat mb = modulus(b.complex());
      if (ma > scale) scale = ma;
      if (mb > scale) scale = mb;
      return modulus(a.complex() - b.complex()) <= tol * scale;
    }
  }
  return false;
}

std::string Element::to_string() const {
  switch (field_.kind()) {
    case FieldKind::Rationals:
      return rational().get_str();
    case FieldKind::PrimeField:
      return std::to_string(residue());
    case FieldKind::ExtensionField:
      return format_t_poly(coefficients());
    case FieldKind::BigComplex: {
      int digits = decimal_digits(field_.precision_bits());
      const auto& z = complex();
      std::string out = z.re.to_string(digits);
      if (z.im.is_zero()) return out;
      out += z.im.sign() < 0 ? "-" : "+";
      out += abs(z.im).to_string(digits) + "i";
      return out;
    }
  }
  return {};
}

namespace {

std::weak_ordering tolerant_compare(const BigFloat& a, const BigFloat& b, const BigFloat& tol) {
  BigFloat scale(a.precision(), 1L);
  if (abs(a) > scale) scale = abs(a);
  if (abs(b) > scale) scale = abs(b);
  if (abs(a - b) <= tol * scale) return std::weak_ordering::equivalent;
  return a < b ? std::weak_ordering::less : std::weak_ordering::greater;
}

}  // namespace

std::weak_ordering canonical_order(const Element& a, const Element& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  switch (a.field().kind()) {
    case FieldKind::Rationals: {
      int c = cmp(a.rational(), b.rational());
      return c < 0 ? std::weak_ordering::less : c > 0 ? std::weak_ordering::greater : std::weak_ordering::equivalent;
    }
    case FieldKind::PrimeField:
      return a.residue() <=> b.residue();
    case FieldKind::ExtensionField:
      return a.coefficients() <=> b.coefficients();
    case FieldKind::BigComplex: {
      const auto& tol = a.field().tolerance();
      auto c = tolerant_compare(a.complex().re, b.complex().re, tol);
      if (c != std::weak_ordering::equivalent) return c;
      return tolerant_compare(a.complex().im, b.complex().im, tol);
    }
  }
  return std::weak_ordering::equivalent;
}

}  // namespace tmrat
