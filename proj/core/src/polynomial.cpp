#include "tmrat/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "tmrat/error.hpp"

namespace tmrat {

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(Field field, std::vector<Element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == field_)) throw FieldMismatch();
  }
  normalize();
}

Polynomial Polynomial::constant(Element c) {
  Field f = c.field();
  return Polynomial(std::move(f), {std::move(c)});
}

Polynomial Polynomial::linear_root(const Element& root) {
  return Polynomial(root.field(), {-root, root.field().one()});
}

void Polynomial::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Element& Polynomial::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return c_.back();
}

Element Polynomial::evaluate(const Element& z) const {
  Element acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Element> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
  return Polynomial(field_, std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(leading().inv());
}

Polynomial Polynomial::scaled(const Element& s) const {
  std::vector<Element> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c * s);
  return Polynomial(field_, std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Element> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return Polynomial(a.field_, std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Element> r(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return Polynomial(a.field_, std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  if (a.c_.empty() || b.c_.empty()) return Polynomial(a.field_);
  std::vector<Element> r(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(a.field_, std::move(r));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::string Polynomial::to_string(char variable) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coeff = c_[i].to_string();
    bool compound = coeff.find_first_of("+-*/t", 1) != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    if (!out.empty()) {
      if (coeff.front() == '-') {
        out += "-";
        coeff.erase(0, 1);
      } else {
        out += "+";
      }
    }
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (coeff == "-1") {
      out += "-";
    } else if (coeff != "1") {
      out += coeff + "*";
    }
    out += variable;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  const Field& field = a.field();
  if (a.degree() < b.degree()) return {Polynomial(field), a};
  std::vector<Element> rem = a.coefficients();
  std::vector<Element> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), field.zero());
  Element lead_inv = b.leading().inv();
  const auto& bc = b.coefficients();
  for (std::size_t i = rem.size(); i-- >= bc.size();) {
    Element c = rem[i] * lead_inv;
    std::size_t shift = i + 1 - bc.size();
    quot[shift] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) rem[shift + j] -= c * bc[j];
    rem[i] = field.zero();
  }
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.field().exact()) throw DomainError("polynomial gcd requires an exact field");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus) {
  Polynomial result = divmod(Polynomial::constant(base.field().one()), modulus).second;
  if (exponent == 0) return result;
  Polynomial b = divmod(base, modulus).second;
  std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = divmod(result * result, modulus).second;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = divmod(result * b, modulus).second;
  }
  return result;
}

// ---------------------------------------------------------------------------
// BinaryForm

BinaryForm::BinaryForm(std::vector<Element> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  for (const auto& c : c_) {
    if (!(c.field() == c_.front().field())) throw FieldMismatch();
  }
}

BinaryForm BinaryForm::from_roots(const std::vector<ProjPoint>& points, const Field& field) {
  BinaryForm acc({field.one()});
  for (const auto& p : points) acc = acc * BinaryForm({p.y(), -p.x()});
  return acc;
}

BinaryForm BinaryForm::homogenize(const Polynomial& f, unsigned degree) {
  if (f.degree() > static_cast<int>(degree)) throw std::invalid_argument("homogenize: degree too small");
  std::vector<Element> c(degree + 1, f.field().zero());
  // coefficient of z^j sits at X^j Y^(d-j), i.e. index d - j.
  for (int j = 0; j <= f.degree(); ++j) c[degree - static_cast<unsigned>(j)] = f[static_cast<std::size_t>(j)];
  return BinaryForm(std::move(c));
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Element& e) { return e.is_zero(); });
}

Element BinaryForm::evaluate(const ProjPoint& p) const {
  const Field& f = field();
  Element acc = f.zero();
  // Horner in X with Y powers: sum c_i X^(d-i) Y^i.
  Element ypow = f.one();
  std::vector<Element> xpow(c_.size(), f.one());
  for (std::size_t i = 1; i < c_.size(); ++i) xpow[i] = xpow[i - 1] * p.x();
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc += c_[i] * xpow[c_.size() - 1 - i] * ypow;
    ypow *= p.y();
  }
  return acc;
}

BinaryForm BinaryForm::derivative_x() const {
  const Field& f = field();
  if (degree() == 0) return BinaryForm({f.zero()});
  std::vector<Element> d;
  for (std::size_t i = 0; i < degree(); ++i) d.push_back(c_[i] * f.from_int(static_cast<long long>(degree() - i)));
  return BinaryForm(std::move(d));
}

BinaryForm BinaryForm::derivative_y() const {
  const Field& f = field();
  if (degree() == 0) return BinaryForm({f.zero()});
  std::vector<Element> d;
  for (std::size_t i = 1; i <= degree(); ++i) d.push_back(c_[i] * f.from_int(static_cast<long long>(i)));
  return BinaryForm(std::move(d));
}

BinaryForm BinaryForm::substitute(const MobiusMap& g) const {
  const Field& f = field();
  BinaryForm lx({g.a(), g.b()});
  BinaryForm ly({g.c(), g.d()});
  std::vector<Element> zero(degree() + 1, f.zero());
  BinaryForm acc(zero);
  for (std::size_t i = 0; i <= degree(); ++i) {
    BinaryForm term({c_[i]});
    for (std::size_t k = 0; k < degree() - i; ++k) term = term * lx;
    for (std::size_t k = 0; k < i; ++k) term = term * ly;
    acc = acc + term;
  }
  return acc;
}

unsigned BinaryForm::infinity_multiplicity() const {
  unsigned m = 0;
  while (m < c_.size() && c_[m].is_zero()) ++m;
  return m;
}

Polynomial BinaryForm::dehomogenize() const {
  std::vector<Element> low_first(c_.rbegin(), c_.rend());
  return Polynomial(field(), std::move(low_first));
}

bool BinaryForm::proportional(const BinaryForm& other) const {
  if (degree() != other.degree()) return false;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = i + 1; j < c_.size(); ++j) {
      if (!(c_[i] * other.c_[j] == c_[j] * other.c_[i])) return false;
    }
  }
  return is_zero() == other.is_zero();
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  const Field& f = a.field();
  std::vector<Element> r(a.c_.size() + b.c_.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(std::move(r));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding binary forms of different degree");
  std::vector<Element> r = a.c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
  return BinaryForm(std::move(r));
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("subtracting binary forms of different degree");
  std::vector<Element> r = a.c_;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
  return BinaryForm(std::move(r));
}

BinaryForm BinaryForm::scaled(const Element& s) const {
  std::vector<Element> r = c_;
  for (auto& c : r) c *= s;
  return BinaryForm(std::move(r));
}

std::string BinaryForm::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].to_string();
  }
  return out + "]";
}

// ---------------------------------------------------------------------------

Element determinant(std::vector<std::vector<Element>> m, const Field& field) {
  const std::size_t n = m.size();
  Element det = field.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if (field.exact()) {
      for (std::size_t r = col; r < n; ++r) {
        if (!m[r][col].is_zero()) {
          pivot = r;
          break;
        }
      }
    } else {
      BigFloat best(field.precision_bits());
      for (std::size_t r = col; r < n; ++r) {
        BigFloat mag = modulus(m[r][col].complex());
        if (mag > best) {
          best = mag;
          pivot = r;
        }
      }
    }
    if (pivot == n) return field.zero();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    Element inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      Element factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

Element resultant2(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != 2 || g.degree() != 2) throw std::invalid_argument("resultant2 expects binary quadratics");
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant of a zero form");
  const Field& field = f.field();
  const Element z = field.zero();
  std::vector<std::vector<Element>> s{
      {f[0], f[1], f[2], z},
      {z, f[0], f[1], f[2]},
      {g[0], g[1], g[2], z},
      {z, g[0], g[1], g[2]},
  };
  return determinant(std::move(s), field);
}

BinaryForm wronskian(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("wronskian expects forms of equal degree");
  return f.derivative_x() * g.derivative_y() - f.derivative_y() * g.derivative_x();
}

Element discriminant2(const BinaryForm& f) {
  if (f.degree() != 2) throw std::invalid_argument("discriminant2 expects a binary quadratic");
  return f[1] * f[1] - f.field().from_int(4) * f[0] * f[2];
}

BinaryForm poly_gcd(const BinaryForm& f, const BinaryForm& g) {
  const Field& field = f.field();
  if (!field.exact()) throw DomainError("poly_gcd is unavailable over C; use root clustering");
  if (!(field == g.field())) throw FieldMismatch();
  bool fz = f.is_zero();
  bool gz = g.is_zero();
  if (fz && gz) throw DomainError("gcd of two zero forms");
  unsigned m;
  if (fz) {
    m = g.infinity_multiplicity();
  } else if (gz) {
    m = f.infinity_multiplicity();
  } else {
    m = std::min(f.infinity_multiplicity(), g.infinity_multiplicity());
  }
  Polynomial h = gcd(f.dehomogenize(), g.dehomogenize());
  return BinaryForm::homogenize(h, m + static_cast<unsigned>(h.degree()));
}

}  // namespace tmrat
