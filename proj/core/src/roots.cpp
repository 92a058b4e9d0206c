#include "tmrat/roots.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "tmrat/error.hpp"

namespace tmrat {

unsigned RootList::total_multiplicity() const {
  unsigned total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

unsigned RootList::splitting_degree() const {
  unsigned k = 1;
  for (const auto& [factor, mult] : unsplit) k = std::lcm(k, static_cast<unsigned>(factor.degree()));
  return k;
}

std::string RootList::unsplit_string() const {
  std::string out;
  for (const auto& [factor, mult] : unsplit) {
    if (!out.empty()) out += "*";
    out += "(" + factor.to_string() + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out;
}

std::vector<ProjPoint> RootList::flattened() const {
  std::vector<ProjPoint> out;
  for (const auto& e : entries) {
    for (unsigned i = 0; i < e.multiplicity; ++i) out.push_back(e.point);
  }
  return out;
}

unsigned RootList::multiplicity_of(const ProjPoint& p) const {
  for (const auto& e : entries) {
    if (e.point == p) return e.multiplicity;
  }
  return 0;
}

namespace {

Polynomial variable(const Field& field) { return Polynomial(field, {field.zero(), field.one()}); }

Polynomial exact_quotient(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }

// Inverse Frobenius on the field: a -> a^(p^(k-1)).
Element frobenius_inverse(const Element& a) {
  const Field& f = a.field();
  if (f.kind() != FieldKind::ExtensionField || f.degree() == 1) return a;
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), f.prime(), f.degree() - 1);
  return a.pow(e);
}

Polynomial pth_root(const Polynomial& f) {
  const Field& field = f.field();
  const auto p = static_cast<std::size_t>(field.prime());
  std::vector<Element> out;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) out.push_back(frobenius_inverse(f[i]));
  return Polynomial(field, std::move(out));
}

void sqf_monic(const Polynomial& f, unsigned scale, std::vector<std::pair<Polynomial, unsigned>>& out) {
  if (f.degree() <= 0) return;
  Polynomial fp = f.derivative();
  if (fp.is_zero()) {
    sqf_monic(pth_root(f).monic(), scale * static_cast<unsigned>(f.field().prime()), out);
    return;
  }
  Polynomial c = gcd(f, fp);
  Polynomial w = exact_quotient(f, c);
  unsigned i = 1;
  while (w.degree() > 0) {
    Polynomial y = gcd(w, c);
    Polynomial z = exact_quotient(w, y);
    if (z.degree() > 0) out.emplace_back(z.monic(), i * scale);
    ++i;
    w = y;
    c = exact_quotient(c, y);
  }
  if (c.degree() > 0) {
    sqf_monic(pth_root(c).monic(), scale * static_cast<unsigned>(f.field().prime()), out);
  }
}

// --- finite fields ----------------------------------------------------------

Polynomial random_below(const Field& field, int degree, Rng& rng) {
  std::vector<Element> c;
  for (int i = 0; i < degree; ++i) c.push_back(field.random(rng));
  return Polynomial(field, std::move(c));
}

// `f` is monic, squarefree, and a product of distinct linear factors.
void equal_degree_split(const Polynomial& f, Rng& rng, std::vector<Element>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == 1) {
    out.push_back(-f[0] / f[1]);
    return;
  }
  const Field& field = f.field();
  mpz_class half = (field.order() - 1) / 2;
  const Polynomial one = Polynomial::constant(field.one());
  while (true) {
    Polynomial a = random_below(field, f.degree(), rng);
    if (a.degree() <= 0) continue;
    Polynomial d = gcd(f, powmod(a, half, f) - one);
    if (d.degree() > 0 && d.degree() < f.degree()) {
      equal_degree_split(d, rng, out);
      equal_degree_split(exact_quotient(f, d), rng, out);
      return;
    }
  }
}

void finite_field_roots(const Polynomial& g, Rng& rng, RootList& out) {
  const Field& field = g.field();
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    Polynomial z = variable(field);
    Polynomial linear_part = gcd(factor, powmod(z, field.order(), factor) - z);
    std::vector<Element> found;
    equal_degree_split(linear_part, rng, found);
    for (auto& r : found) out.entries.push_back({ProjPoint::affine(std::move(r)), mult});
    Polynomial rest = exact_quotient(factor, linear_part);
    if (rest.degree() > 0) out.unsplit.emplace_back(rest.monic(), mult);
  }
}

// --- rationals ----------------------------------------------------------------

int sign_of(const mpz_class& v) { return sgn(v); }

mpz_class eval_monic_cubic(const mpz_class& b, const mpz_class& c, const mpz_class& d, const mpz_class& y) {
  return ((y + b) * y + c) * y + d;
}

// The unique integer zero of a strictly monotone integer function on [lo, hi], if any.
template <class F>
std::optional<mpz_class> monotone_integer_zero(mpz_class lo, mpz_class hi, F g) {
  if (lo > hi) return std::nullopt;
  mpz_class vlo = g(lo), vhi = g(hi);
  if (vlo == 0) return lo;
  if (vhi == 0) return hi;
  if (sign_of(vlo) == sign_of(vhi)) return std::nullopt;
  while (hi - lo > 1) {
    mpz_class mid = (lo + hi) / 2;
    mpz_class vm = g(mid);
    if (vm == 0) return mid;
    if (sign_of(vm) == sign_of(vlo)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::nullopt;
}

mpz_class floor_div(const mpz_class& n, long d) {
  mpz_class q;
  mpz_fdiv_q_ui(q.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(d));
  return q;
}

// Integer roots of y^3 + b y^2 + c y + d by bisection on the monotone pieces.
std::vector<mpz_class> integer_roots_monic_cubic(const mpz_class& b, const mpz_class& c, const mpz_class& d) {
  mpz_class bound = 1 + std::max({abs(b), abs(c), abs(d)});
  auto g = [&](const mpz_class& y) { return eval_monic_cubic(b, c, d, y); };
  std::vector<std::pair<mpz_class, mpz_class>> pieces;
  mpz_class disc = 4 * b * b - 12 * c;  // of g' = 3y^2 + 2by + c
  if (disc <= 0) {
    pieces.emplace_back(-bound, bound);
  } else {
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    // upper = floor((-2b + sqrt(disc)) / 6)
    mpz_class upper = floor_div(-2 * b + s, 6);
    while (true) {
      mpz_class t = 6 * (upper + 1) + 2 * b;
      if (t <= 0 || t * t <= disc) {
        ++upper;
      } else {
        break;
      }
    }
    // lower = floor((-2b - sqrt(disc)) / 6)
    mpz_class lower = floor_div(-2 * b - s - 1, 6);
    while (true) {
      mpz_class t = 6 * (lower + 1) + 2 * b;
      if (t <= 0 && t * t >= disc) {
        ++lower;
      } else {
        break;
      }
    }
    pieces.emplace_back(-bound, std::min(lower, bound));
    pieces.emplace_back(std::max(mpz_class(lower + 1), mpz_class(-bound)), std::min(upper, bound));
    pieces.emplace_back(std::max(mpz_class(upper + 1), mpz_class(-bound)), bound);
  }
  std::vector<mpz_class> out;
  for (const auto& [lo, hi] : pieces) {
    if (auto r = monotone_integer_zero(lo, hi, g)) {
      if (std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
    }
  }
  return out;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& v) {
  if (sgn(v) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), v.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), v.get_den_mpz_t());
  return mpq_class(n, d);
}

// Roots of a monic squarefree polynomial of degree <= 3 over Q; returns the
// part without rational roots.
Polynomial rational_linear_roots(Polynomial f, std::vector<Element>& out) {
  const Field& field = f.field();
  if (f.degree() == 3) {
    mpz_class lcm = 1;
    for (const auto& c : f.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational().get_den_mpz_t());
    std::vector<mpz_class> a;
    for (const auto& c : f.coefficients()) a.emplace_back(mpq_class(c.rational() * lcm).get_num());
    // y = a3 z turns a3 z^3 + a2 z^2 + a1 z + a0 into a monic cubic in y.
    const mpz_class& a3 = a[3];
    for (const auto& y : integer_roots_monic_cubic(a[2], a[1] * a3, a[0] * a3 * a3)) {
      mpq_class z(y, a3);
      z.canonicalize();
      Element root = field.from_rational(z);
      out.push_back(root);
      f = exact_quotient(f, Polynomial::linear_root(root));
    }
  }
  if (f.degree() == 2) {
    const mpq_class& b = f[1].rational();
    const mpq_class& c = f[0].rational();
    if (auto s = rational_sqrt(b * b - 4 * c)) {
      out.push_back(field.from_rational(mpq_class((-b + *s) / 2)));
      out.push_back(field.from_rational(mpq_class((-b - *s) / 2)));
      return Polynomial::constant(field.one());
    }
    return f;
  }
  if (f.degree() == 1) {
    out.push_back(-f[0] / f[1]);
    return Polynomial::constant(field.one());
  }
  return f;
}

void rational_roots(const Polynomial& g, RootList& out) {
  for (const auto& [factor, mult] : squarefree_decomposition(g)) {
    std::vector<Element> found;
    Polynomial rest = rational_linear_roots(factor, found);
    for (auto& r : found) out.entries.push_back({ProjPoint::affine(std::move(r)), mult});
    if (rest.degree() > 0) out.unsplit.emplace_back(rest.monic(), mult);
  }
}

// --- complex --------------------------------------------------------------------

Element complex_from(const Field& field, BigComplex z) { return Element(field, std::move(z)); }

bool negligible(const BigFloat& value, const BigFloat& scale, const BigFloat& tol) { return abs(value) <= tol * scale; }

Element newton_step(const Polynomial& f, const Element& z) {
  Polynomial df = f.derivative();
  Element d = df.evaluate(z);
  if (d.is_zero()) return z;
  return z - f.evaluate(z) / d;
}

void complex_roots(const Polynomial& f, RootList& out) {
  const Field& field = f.field();
  const auto bits = field.precision_bits();
  const BigFloat& tol = field.tolerance();
  auto push = [&](const Element& z, unsigned m) { out.entries.push_back({ProjPoint::affine(z), m}); };
  const int n = f.degree();
  if (n <= 0) return;
  Polynomial g = f.monic();
  if (n == 1) {
    push(-g[0], 1);
    return;
  }
  const Element two = field.from_int(2);
  const Element three = field.from_int(3);
  if (n == 2) {
    const Element& b = g[1];
    const Element& c = g[0];
    Element disc = b * b - field.from_int(4) * c;
    BigFloat scale = modulus(b.complex()) * modulus(b.complex()) + BigFloat(bits, 4L) * modulus(c.complex());
    if (negligible(modulus(disc.complex()), scale, tol) || disc.complex().is_zero()) {
      push(-b / two, 2);
      return;
    }
    Element sq = complex_from(field, csqrt(disc.complex()));
    // Choose the sign that avoids cancellation in -b -+ sqrt(disc).
    BigFloat dot = b.complex().re * sq.complex().re + b.complex().im * sq.complex().im;
    Element q = dot.sign() >= 0 ? -(b + sq) / two : -(b - sq) / two;
    push(newton_step(g, q), 1);
    push(newton_step(g, c / q), 1);
    return;
  }
  // n == 3: z = t - b/3 gives t^3 + p t + q.
  const Element& b = g[2];
  const Element& c = g[1];
  const Element& d = g[0];
  Element shift = b / three;
  Element p = c - b * b / three;
  Element q = two * b * b * b / field.from_int(27) - b * c / three + d;
  BigFloat scale(bits, 1L);
  for (const BigFloat& s : {modulus(b.complex()), sqrt(modulus(c.complex())), cbrt(modulus(d.complex()))}) {
    if (s > scale) scale = s;
  }
  BigFloat mp = modulus(p.complex());
  BigFloat mq = modulus(q.complex());
  if (negligible(mp, scale * scale, tol) && negligible(mq, scale * scale * scale, tol)) {
    push(-shift, 3);
    return;
  }
  Element four = field.from_int(4);
  Element disc = four * p * p * p + field.from_int(27) * q * q;
  BigFloat disc_scale = BigFloat(bits, 4L) * mp * mp * mp + BigFloat(bits, 27L) * mq * mq;
  if (negligible(modulus(disc.complex()), disc_scale, tol)) {
    Element dbl = -(three * q) / (two * p);
    Element single = (three * q) / p;
    push(single - shift, 1);
    push(dbl - shift, 2);
    return;
  }
  Element inner = complex_from(field, csqrt((q * q / four + p * p * p / field.from_int(27)).complex()));
  Element half_q = -q / two;
  Element u3a = half_q + inner;
  Element u3b = half_q - inner;
  Element u3 = modulus(u3a.complex()) >= modulus(u3b.complex()) ? u3a : u3b;
  Element u = complex_from(field, ccbrt(u3.complex()));
  BigFloat half(bits, mpq_class(1, 2));
  BigFloat root3_half = sqrt(BigFloat(bits, 3L)) * half;
  Element omega = complex_from(field, BigComplex(-half, root3_half));
  Element uk = u;
  for (int k = 0; k < 3; ++k) {
    Element t = uk - p / (three * uk);
    push(newton_step(g, t - shift), 1);
    uk *= omega;
  }
}

}  // namespace

std::vector<std::pair<Polynomial, unsigned>> squarefree_decomposition(const Polynomial& f) {
  if (!f.field().exact()) throw DomainError("squarefree decomposition requires an exact field");
  std::vector<std::pair<Polynomial, unsigned>> out;
  if (f.is_zero()) throw DomainError("squarefree decomposition of zero");
  sqf_monic(f.monic(), 1, out);
  return out;
}

RootList roots(const BinaryForm& f, Rng& rng) {
  if (f.degree() > 3) throw DomainError("roots: degree > 3 unsupported");
  if (f.is_zero()) throw DomainError("roots of the zero form");
  const Field& field = f.field();
  RootList out;
  out.degree = f.degree();

  unsigned at_infinity = 0;
  Polynomial finite_part(field);
  if (field.exact()) {
    at_infinity = f.infinity_multiplicity();
    finite_part = f.dehomogenize();
  } else {
    std::size_t largest = 0;
    for (std::size_t i = 1; i <= f.degree(); ++i) {
      if (modulus(f[i].complex()) > modulus(f[largest].complex())) largest = i;
    }
    while (at_infinity <= f.degree() && f[at_infinity].negligible_against(f[largest])) ++at_infinity;
    std::vector<Element> low_first;
    for (std::size_t i = f.degree() + 1; i-- > at_infinity;) low_first.push_back(f[i]);
    finite_part = Polynomial(field, std::move(low_first));
  }
  if (at_infinity > 0) out.entries.push_back({ProjPoint::infinity(field), at_infinity});

  switch (field.kind()) {
    case FieldKind::PrimeField:
    case FieldKind::ExtensionField:
      finite_field_roots(finite_part, rng, out);
      break;
    case FieldKind::Rationals:
      rational_roots(finite_part, out);
      break;
    case FieldKind::BigComplex:
      complex_roots(finite_part, out);
      break;
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const RootEntry& a, const RootEntry& b) { return canonical_order(a.point, b.point) < 0; });
  out.complete = out.unsplit.empty() && out.total_multiplicity() == out.degree;
  if (out.unsplit.empty() && out.total_multiplicity() != out.degree) {
    throw InternalError("root multiplicities do not add up to the degree of " + f.to_string());
  }
  return out;
}

RootList roots(const BinaryForm& f) {
  Rng rng(0);
  return roots(f, rng);
}

}  // namespace tmrat
