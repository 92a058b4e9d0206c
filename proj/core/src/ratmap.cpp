#include "tmrat/ratmap.hpp"

#include <algorithm>

#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat {

namespace {

// Index of the coefficient used as the scaling pivot: first nonzero on exact
// fields, largest modulus on C.
std::size_t pivot_index(const std::array<Element, 6>& c) {
  if (c[0].field().exact()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (!c[i].is_zero()) return i;
    }
    throw DomainError("degenerate: zero map");
  }
  std::size_t best = 0;
  BigFloat best_mod = modulus(c[0].complex());
  for (std::size_t i = 1; i < c.size(); ++i) {
    BigFloat m = modulus(c[i].complex());
    if (m > best_mod) {
      best = i;
      best_mod = std::move(m);
    }
  }
  if (best_mod == BigFloat(best_mod.precision(), 0L)) throw DomainError("degenerate: zero map");
  return best;
}

// True when the form vanishes at p, up to the field tolerance on C.
bool vanishes_at(const BinaryForm& f, const ProjPoint& p) {
  Element v = f.evaluate(p);
  if (f.field().exact()) return v.is_zero();
  const auto prec = static_cast<mpfr_prec_t>(f.field().precision_bits());
  BigFloat scale(prec, 0L);
  BigFloat xm = modulus(p.x().complex());
  BigFloat ym = modulus(p.y().complex());
  const unsigned d = f.degree();
  for (unsigned i = 0; i <= d; ++i) {
    BigFloat term = modulus(f[i].complex());
    for (unsigned k = 0; k < d - i; ++k) term = term * xm;
    for (unsigned k = 0; k < i; ++k) term = term * ym;
    scale = scale + term;
  }
  return modulus(v.complex()) <= f.field().tolerance() * scale;
}

std::array<Element, 6> from_forms(const BinaryForm& n, const BinaryForm& d) {
  if (n.degree() != 2 || d.degree() != 2) throw DomainError("map components must be binary quadratics");
  return {n[0], n[1], n[2], d[0], d[1], d[2]};
}

}  // namespace

RatMap2::RatMap2(std::array<Element, 6> coeffs) : c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (!(c.field() == c_[0].field())) throw FieldMismatch();
  }
  if (c_[0].field().characteristic() == 2) throw DomainError("characteristic two unsupported");
  canonicalize();
  Element res = resultant();
  bool degenerate = res.is_zero();
  if (!field().exact()) {
    // The resultant is homogeneous of degree 4 in the (now unit-scaled) coefficients.
    degenerate = modulus(res.complex()) <= field().tolerance();
  }
  if (degenerate) throw DomainError("degenerate: common root");
}

RatMap2::RatMap2(const BinaryForm& numerator, const BinaryForm& denominator)
    : RatMap2(from_forms(numerator, denominator)) {}

void RatMap2::canonicalize() {
  const Element s = c_[pivot_index(c_)].inv();
  for (auto& c : c_) c *= s;
}

std::array<Element, 6> RatMap2::parse_coefficients(std::string_view text, const Field& field) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty map literal");
  std::array<Element, 6> c{field.zero(), field.zero(), field.zero(), field.zero(), field.zero(), field.zero()};
  if (text.front() == '[') {
    if (text.back() != ']') throw ParseError("map literal: missing ']'");
    auto rows = split_top_level(text.substr(1, text.size() - 2), ';');
    if (rows.size() != 2) throw ParseError("map literal: expected [a,b,c;d,e,f]");
    for (std::size_t r = 0; r < 2; ++r) {
      auto entries = split_top_level(rows[r], ',');
      if (entries.size() != 3) throw ParseError("map literal: expected three coefficients per row");
      for (std::size_t k = 0; k < 3; ++k) c[3 * r + k] = field.parse_element(entries[k]);
    }
    return c;
  }

  std::string_view num = text;
  std::string_view den = "1";
  auto parts = split_top_level(text, '/');
  if (parts.size() == 2 && !parts[1].empty() && parts[1].front() == '(') {
    num = parts[0];
    den = parts[1];
  }
  auto fill = [&](std::string_view s, std::size_t offset) {
    auto coeffs = parse_polynomial(s, field, 'z');
    if (coeffs.size() > 3) throw ParseError("map literal: component of degree > 2");
    // coeffs are low degree first; the row is X^2, XY, Y^2.
    for (std::size_t k = 0; k < coeffs.size(); ++k) c[offset + 2 - k] = coeffs[k];
  };
  fill(num, 0);
  fill(den, 3);
  return c;
}

RatMap2 RatMap2::parse(std::string_view text, const Field& field) { return RatMap2(parse_coefficients(text, field)); }

ProjPoint RatMap2::operator()(const ProjPoint& p) const {
  if (!(p.field() == field())) throw FieldMismatch();
  return ProjPoint(numerator().evaluate(p), denominator().evaluate(p));
}

BinaryForm RatMap2::fixed_point_form() const {
  // Y*(aX^2+bXY+cY^2) - X*(dX^2+eXY+fY^2)
  return BinaryForm({-c_[3], c_[0] - c_[4], c_[1] - c_[5], c_[2]});
}

BinaryForm RatMap2::critical_point_form() const { return wronskian(numerator(), denominator()); }

bool RatMap2::equivalent(const RatMap2& other) const {
  if (!(field() == other.field())) throw FieldMismatch();
  const std::size_t k = pivot_index(c_);
  if (other.c_[k].negligible_against(c_[k])) return false;
  for (std::size_t i = 0; i < 6; ++i) {
    if (!(c_[i] * other.c_[k] == other.c_[i] * c_[k])) return false;
  }
  return true;
}

BigFloat RatMap2::relative_distance(const RatMap2& other) const {
  if (!(field() == other.field())) throw FieldMismatch();
  if (field().exact()) return BigFloat(64, equivalent(other) ? 0L : 1L);
  const auto prec = static_cast<mpfr_prec_t>(field().precision_bits());
  const std::size_t k = pivot_index(c_);
  if (other.c_[k].is_zero()) return BigFloat(prec, 1L);
  const Element s = c_[k] / other.c_[k];
  BigFloat worst(prec, 0L);
  BigFloat top(prec, 0L);
  for (std::size_t i = 0; i < 6; ++i) {
    BigFloat diff = modulus((c_[i] - s * other.c_[i]).complex());
    if (diff > worst) worst = diff;
    BigFloat m = modulus(c_[i].complex());
    if (m > top) top = m;
  }
  return worst / top;
}

std::array<Element, 6> RatMap2::display_coefficients() const {
  if (field().kind() != FieldKind::Rationals) return c_;
  mpz_class lcm = 1;
  for (const auto& c : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  mpz_class content = 0;
  for (const auto& c : c_) {
    mpz_class v = mpq_class(c.rational() * lcm).get_num();
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  // The canonical representative already has a positive first nonzero entry.
  std::array<Element, 6> out = c_;
  mpq_class scale(lcm, content);
  scale.canonicalize();
  const Element s = field().from_rational(scale);
  for (auto& c : out) c *= s;
  return out;
}

std::string RatMap2::to_string() const {
  const auto c = display_coefficients();
  std::string out = "[";
  for (std::size_t i = 0; i < 6; ++i) {
    if (i == 3) out += ";";
    else if (i > 0) out += ",";
    out += c[i].to_string();
  }
  return out + "]";
}

std::string RatMap2::to_rational_string() const {
  const auto c = display_coefficients();
  const Polynomial n(field(), {c[2], c[1], c[0]});
  const Polynomial d(field(), {c[5], c[4], c[3]});
  return "(" + n.to_string('z') + ")/(" + d.to_string('z') + ")";
}

// ---------------------------------------------------------------------------

std::array<Element, 3> MultiplierSpectrum::symmetric_functions() const {
  if (entries.empty()) throw DomainError("empty multiplier spectrum");
  const Field& f = entries.front().multiplier.field();
  // Coefficients of prod (1 + mu_i t).
  std::array<Element, 4> e{f.one(), f.zero(), f.zero(), f.zero()};
  for (const auto& entry : entries) {
    for (unsigned m = 0; m < entry.multiplicity; ++m) {
      for (std::size_t k = 3; k >= 1; --k) e[k] += e[k - 1] * entry.multiplier;
    }
  }
  return {e[1], e[2], e[3]};
}

bool MultiplierSpectrum::satisfies_fixed_point_identity() const {
  auto s = symmetric_functions();
  const Field& f = s[0].field();
  return s[0] == s[2] + f.from_int(2);
}

RootList fixed_points(const RatMap2& phi, Rng& rng) { return roots(phi.fixed_point_form(), rng); }

RootList fixed_points(const RatMap2& phi) {
  Rng rng(0);
  return fixed_points(phi, rng);
}

RootList critical_points(const RatMap2& phi, Rng& rng) {
  const BinaryForm w = phi.critical_point_form();
  if (phi.field().exact() && discriminant2(w).is_zero()) {
    throw InternalError("critical points coincide for " + phi.to_string());
  }
  RootList r = roots(w, rng);
  if (r.complete && r.entries.size() != 2) {
    throw InternalError("critical points coincide for " + phi.to_string());
  }
  return r;
}

RootList critical_points(const RatMap2& phi) {
  Rng rng(0);
  return critical_points(phi, rng);
}

Element multiplier(const RatMap2& phi, const ProjPoint& p) {
  if (!(p.field() == phi.field())) throw FieldMismatch();
  const BinaryForm fix = phi.fixed_point_form();
  if (!vanishes_at(fix, p)) throw DomainError("not a fixed point: " + p.to_string());
  const Field& f = phi.field();
  if (f.exact() && fix.derivative_x().evaluate(p).is_zero() && fix.derivative_y().evaluate(p).is_zero()) {
    return f.one();
  }
  if (p.is_infinity()) {
    const MobiusMap inversion(f.zero(), f.one(), f.one(), f.zero());
    return multiplier(conjugate(phi, inversion), ProjPoint::affine(f.zero()));
  }
  const Polynomial n = phi.numerator().dehomogenize();
  const Polynomial d = phi.denominator().dehomogenize();
  const Element& z = p.value();
  const Element dz = d.evaluate(z);
  return (n.derivative().evaluate(z) * dz - n.evaluate(z) * d.derivative().evaluate(z)) / (dz * dz);
}

MultiplierSpectrum multiplier_spectrum(const RatMap2& phi, Rng& rng) {
  RootList fixed = fixed_points(phi, rng);
  if (!fixed.complete) {
    throw IncompleteFactorization("fixed points do not split over " + phi.field().describe(), fixed.unsplit_string());
  }
  MultiplierSpectrum s;
  for (const auto& e : fixed.entries) {
    Element mu = e.multiplicity >= 2 ? phi.field().one() : multiplier(phi, e.point);
    s.entries.push_back({e.point, e.multiplicity, std::move(mu)});
  }
  if (phi.field().exact() && !s.satisfies_fixed_point_identity()) {
    throw InternalError("multiplier identity fails for " + phi.to_string());
  }
  return s;
}

MultiplierSpectrum multiplier_spectrum(const RatMap2& phi) {
  Rng rng(0);
  return multiplier_spectrum(phi, rng);
}

RatMap2 conjugate(const RatMap2& phi, const MobiusMap& g) {
  if (!(g.field() == phi.field())) throw FieldMismatch();
  const MobiusMap h = g.inverse();
  const BinaryForm n = phi.numerator().substitute(h);
  const BinaryForm d = phi.denominator().substitute(h);
  return RatMap2(n.scaled(g.a()) + d.scaled(g.b()), n.scaled(g.c()) + d.scaled(g.d()));
}

std::pair<Element, Element> moduli_coordinates(const RatMap2& phi, Rng& rng) {
  auto s = multiplier_spectrum(phi, rng).symmetric_functions();
  return {s[0], s[1]};
}

std::pair<Element, Element> moduli_coordinates(const RatMap2& phi) {
  Rng rng(0);
  return moduli_coordinates(phi, rng);
}

}  // namespace tmrat
