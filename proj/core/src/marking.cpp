#include "tmrat/marking.hpp"

#include <algorithm>
#include <set>

#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat {

namespace {

constexpr std::array<std::array<std::size_t, 3>, 3> kCyclic{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}};

// Numerator and denominator of r_i before normalization.
std::pair<Element, Element> cross_ratio_pair(const std::array<ProjPoint, 3>& p, const std::array<ProjPoint, 2>& q,
                                             std::size_t i) {
  const auto& [ii, j, k] = kCyclic[i];
  (void)ii;
  return {bracket(p[j], q[0]) * bracket(p[k], q[1]), bracket(p[j], q[1]) * bracket(p[k], q[0])};
}

bool sums_to_zero(const Element& num, const Element& den) {
  Element s = num + den;
  if (s.field().exact()) return s.is_zero();
  const Element& ref = modulus(num.complex()) > modulus(den.complex()) ? num : den;
  return s.negligible_against(ref) || (num.is_zero() && den.is_zero());
}

std::string locus_message(Locus l) { return "excluded marking: locus " + to_string(l); }

std::array<ProjPoint, 3> parse_points3(std::string_view text, const Field& field) {
  auto items = split_top_level(text, ',');
  if (items.size() != 3) throw ParseError("expected three comma-separated points");
  return {ProjPoint::parse(items[0], field), ProjPoint::parse(items[1], field), ProjPoint::parse(items[2], field)};
}

std::string_view strip_parens(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw ParseError("expected a parenthesized tuple");
  return text.substr(1, text.size() - 2);
}

ProjPoint flip(const ProjPoint& x) { return ProjPoint(x.y() - x.x(), x.y() + x.x()); }

}  // namespace

std::string to_string(Locus locus) {
  switch (locus) {
    case Locus::C: return "C";
    case Locus::R1: return "R1";
    case Locus::R2: return "R2";
    case Locus::R3: return "R3";
  }
  return "?";
}

MarkingCheck validate_marking(const std::array<ProjPoint, 3>& fixed, const std::array<ProjPoint, 2>& critical) {
  const Field& f = fixed[0].field();
  for (const auto& p : fixed) {
    if (!(p.field() == f)) throw FieldMismatch();
  }
  for (const auto& q : critical) {
    if (!(q.field() == f)) throw FieldMismatch();
  }
  MarkingCheck out;
  if (critical[0] == critical[1]) out.violated.push_back(Locus::C);
  for (std::size_t i = 0; i < 3; ++i) {
    auto [num, den] = cross_ratio_pair(fixed, critical, i);
    if (sums_to_zero(num, den)) out.violated.push_back(static_cast<Locus>(static_cast<int>(Locus::R1) + i));
  }
  if (out.violated.empty()) out.marking.emplace(fixed, critical);
  return out;
}

TotalMarking::TotalMarking(std::array<ProjPoint, 3> fixed, std::array<ProjPoint, 2> critical)
    : p_(std::move(fixed)), q_(std::move(critical)) {
  for (const auto& p : p_) {
    if (!(p.field() == field())) throw FieldMismatch();
  }
  for (const auto& q : q_) {
    if (!(q.field() == field())) throw FieldMismatch();
  }
  if (q_[0] == q_[1]) throw DomainError(locus_message(Locus::C));
  for (std::size_t i = 0; i < 3; ++i) {
    auto [num, den] = cross_ratio_pair(p_, q_, i);
    if (sums_to_zero(num, den)) throw DomainError(locus_message(static_cast<Locus>(static_cast<int>(Locus::R1) + i)));
  }
}

TotalMarking TotalMarking::transported(const MobiusMap& g) const {
  return TotalMarking({g.apply(p_[0]), g.apply(p_[1]), g.apply(p_[2])}, {g.apply(q_[0]), g.apply(q_[1])});
}

std::string TotalMarking::to_string() const {
  return "(" + p_[0].to_string() + "," + p_[1].to_string() + "," + p_[2].to_string() + ";" + q_[0].to_string() +
         "," + q_[1].to_string() + ")";
}

bool operator==(const TotalMarking& a, const TotalMarking& b) { return a.p_ == b.p_ && a.q_ == b.q_; }

std::pair<std::array<ProjPoint, 3>, std::array<ProjPoint, 2>> parse_marking_points(std::string_view text,
                                                                                      const Field& field) {
  auto halves = split_top_level(strip_parens(text), ';');
  if (halves.size() != 2) throw ParseError("marking literal: expected (p1,p2,p3;q1,q2)");
  auto fixed = parse_points3(halves[0], field);
  auto crit = split_top_level(halves[1], ',');
  if (crit.size() != 2) throw ParseError("marking literal: expected two critical points");
  return {fixed, {ProjPoint::parse(crit[0], field), ProjPoint::parse(crit[1], field)}};
}

TotalMarking parse_marking(std::string_view text, const Field& field) {
  auto [p, q] = parse_marking_points(text, field);
  return TotalMarking(std::move(p), std::move(q));
}

// ---------------------------------------------------------------------------

bool CrossRatioTriple::on_w() const {
  return r[0].x() * r[1].x() * r[2].x() == r[0].y() * r[1].y() * r[2].y();
}

bool CrossRatioTriple::avoids_minus_one() const {
  return std::none_of(r.begin(), r.end(), [](const ProjPoint& p) { return sums_to_zero(p.x(), p.y()); });
}

std::string CrossRatioTriple::to_string() const {
  return "(" + r[0].to_string() + "," + r[1].to_string() + "," + r[2].to_string() + ")";
}

std::string CrossRatioTriple::to_homogeneous_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) out += ",";
    out += "[" + r[i].x().to_string() + "," + r[i].y().to_string() + "]";
  }
  return out + "]";
}

std::weak_ordering canonical_order(const CrossRatioTriple& a, const CrossRatioTriple& b) {
  for (std::size_t i = 0; i < 3; ++i) {
    auto c = canonical_order(a.r[i], b.r[i]);
    if (c != 0) return c;
  }
  return std::weak_ordering::equivalent;
}

CrossRatioTriple parse_cross_ratios(std::string_view text, const Field& field) {
  return CrossRatioTriple{parse_points3(strip_parens(text), field)};
}

CrossRatioTriple cross_ratios(const TotalMarking& m) {
  std::array<std::optional<ProjPoint>, 3> r;
  for (std::size_t i = 0; i < 3; ++i) {
    auto [num, den] = cross_ratio_pair(m.fixed(), m.critical(), i);
    if (num.is_zero() && den.is_zero()) throw InternalError("indeterminate cross ratio for " + m.to_string());
    r[i].emplace(std::move(num), std::move(den));
  }
  CrossRatioTriple out{{*r[0], *r[1], *r[2]}};
  if (m.field().exact() && !out.on_w()) throw InternalError("cross ratios off W for " + m.to_string());
  return out;
}

bool VPoint::on_v() const {
  const Element &a1 = x[0].x(), &b1 = x[0].y(), &a2 = x[1].x(), &b2 = x[1].y(), &a3 = x[2].x(), &b3 = x[2].y();
  Element s = a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3 + a1 * a2 * a3;
  if (s.field().exact()) return s.is_zero();
  return s == s.field().zero();
}

std::string VPoint::to_string() const {
  return "(" + x[0].to_string() + "," + x[1].to_string() + "," + x[2].to_string() + ")";
}

VPoint to_v_coords(const CrossRatioTriple& r) {
  if (!r.avoids_minus_one()) throw DomainError("cross ratio equal to -1");
  return VPoint{{flip(r[0]), flip(r[1]), flip(r[2])}};
}

CrossRatioTriple from_v_coords(const VPoint& x) {
  for (const auto& p : x.x) {
    if (p.is_infinity()) throw DomainError("V coordinate at infinity");
  }
  return CrossRatioTriple{{flip(x[0]), flip(x[1]), flip(x[2])}};
}

std::array<Element, 3> multipliers_from_v(const VPoint& x) {
  for (const auto& p : x.x) {
    if (p.is_infinity()) throw DomainError("V coordinate at infinity");
  }
  const Element one = x[0].field().one();
  std::array<Element, 3> mu{one, one, one};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& [ii, j, k] = kCyclic[i];
    (void)ii;
    mu[i] = one + x[j].value() * x[k].value();
  }
  return mu;
}

// ---------------------------------------------------------------------------

RatMap2 reconstruct(const TotalMarking& m) {
  const Field& f = m.field();
  const ProjPoint& q1 = m.q(0);
  const ProjPoint& q2 = m.q(1);
  // q1 -> 0, q2 -> inf
  const MobiusMap g(q1.y(), -q1.x(), q2.y(), -q2.x());
  std::vector<ProjPoint> pushed;
  for (const auto& p : m.fixed()) pushed.push_back(g.apply(p));
  const BinaryForm cubic = BinaryForm::from_roots(pushed, f);
  // psi = [C1 X^2 + C3 Y^2 : -C0 X^2 - C2 Y^2] has fixed-point form equal to the
  // cubic and critical points 0, inf.
  const RatMap2 psi({cubic[1], f.zero(), cubic[3], -cubic[0], f.zero(), -cubic[2]});
  RatMap2 phi = conjugate(psi, g.inverse());

  const std::vector<ProjPoint> fixed(m.fixed().begin(), m.fixed().end());
  const std::vector<ProjPoint> crit(m.critical().begin(), m.critical().end());
  if (!phi.fixed_point_form().proportional(BinaryForm::from_roots(fixed, f)) ||
      !phi.critical_point_form().proportional(BinaryForm::from_roots(crit, f))) {
    throw InternalError("reconstruction check failed for " + m.to_string());
  }
  return phi;
}

TotalMarking marking_from_w(const CrossRatioTriple& r) {
  const Field& f = r.field();
  if (!r.avoids_minus_one()) throw DomainError("cross ratio equal to -1");
  if (!r.on_w()) throw DomainError("cross ratios do not satisfy r1 r2 r3 = 1");
  const ProjPoint one = ProjPoint::affine(f.one());
  const std::array<ProjPoint, 2> q{ProjPoint::affine(f.zero()), ProjPoint::infinity(f)};
  auto inv = [](const ProjPoint& x) { return ProjPoint(x.y(), x.x()); };
  const std::array<std::array<ProjPoint, 3>, 3> charts{{
      {one, inv(r[2]), r[1]},
      {r[2], one, inv(r[0])},
      {inv(r[1]), r[0], one},
  }};
  for (const auto& p : charts) {
    auto check = validate_marking(p, q);
    if (check.marking && cross_ratios(*check.marking) == r) return *check.marking;
  }
  throw DomainError("cross ratios lie on an excluded curve of every chart");
}

RatMap2 reconstruct_from_w(const CrossRatioTriple& r) { return reconstruct(marking_from_w(r)); }

std::vector<std::pair<int, RatMap2>> chart_case_maps(const CrossRatioTriple& r) {
  const Field& f = r.field();
  std::vector<std::pair<int, RatMap2>> out;
  const ProjPoint& r2 = r[1];
  const ProjPoint& r3 = r[2];
  const bool r2_finite = !r2.is_infinity();
  const bool r3_finite = !r3.is_infinity();
  const bool r2_nonzero = r2_finite ? !r2.value().is_zero() : true;
  const bool r3_nonzero = r3_finite ? !r3.value().is_zero() : true;
  const Element one = f.one();
  const Element zero = f.zero();
  auto make = [&](int id, const Element& a, const Element& b, const Element& c, const Element& d) {
    try {
      out.emplace_back(id, RatMap2({a, zero, b, c, zero, d}));
    } catch (const DomainError&) {
      // Degenerate on this piece: r is off the chart.
    }
  };
  if (r2_finite && r3_nonzero) {
    const Element& s = r2.value();
    const Element t = r3_finite ? r3.value().inv() : zero;  // 1/r3
    make(1, one + s + t, s * t, one, s + t + s * t);
  }
  if (r2_finite && r3_finite) {
    const Element& s = r2.value();
    const Element& c = r3.value();
    make(2, c + s * c + one, s, c, s * c + one + s);
  }
  if (r2_nonzero && r3_nonzero) {
    const Element u = r2_finite ? r2.value().inv() : zero;  // 1/r2
    const Element t = r3_finite ? r3.value().inv() : zero;  // 1/r3
    make(3, u + one + u * t, t, u, one + u * t + t);
  }
  if (r2_nonzero && r3_finite) {
    const Element u = r2_finite ? r2.value().inv() : zero;
    const Element& c = r3.value();
    make(4, c * u + c + u, one, c * u, c + u + one);
  }
  return out;
}

// ---------------------------------------------------------------------------

Equivalence equivalent(const TotalMarking& a, const TotalMarking& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  Equivalence out{false, cross_ratios(a), cross_ratios(b), std::nullopt};
  out.equivalent = out.first == out.second;
  if (!out.equivalent) return out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.p(i) == a.q(0) || a.p(i) == a.q(1)) continue;
    MobiusMap g = MobiusMap::from_three({a.q(0), a.q(1), a.p(i)}, {b.q(0), b.q(1), b.p(i)});
    if (!(a.transported(g) == b)) throw InternalError("witness does not transport " + a.to_string());
    out.witness.emplace(std::move(g));
    return out;
  }
  throw InternalError("every fixed slot sits on a critical slot in " + a.to_string());
}

Orbit12 orbit12(const TotalMarking& m) {
  std::array<std::size_t, 3> perm{0, 1, 2};
  Orbit12 out{{}, cross_ratios(m), 0};
  do {
    std::array<ProjPoint, 3> p{m.p(perm[0]), m.p(perm[1]), m.p(perm[2])};
    out.triples.push_back(cross_ratios(TotalMarking(p, m.critical())));
    out.triples.push_back(cross_ratios(TotalMarking(p, {m.q(1), m.q(0)})));
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.canonical = *std::min_element(out.triples.begin(), out.triples.end(),
                                    [](const auto& x, const auto& y) { return canonical_order(x, y) < 0; });
  std::vector<CrossRatioTriple> sorted = out.triples;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return canonical_order(x, y) < 0; });
  out.distinct = static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return canonical_order(x, y) == 0; }) -
      sorted.begin());
  return out;
}

TotalMarking marking_of(const RatMap2& phi, Rng& rng) {
  RootList fixed = fixed_points(phi, rng);
  if (!fixed.complete) {
    throw IncompleteFactorization("fixed points do not split over " + phi.field().describe(), fixed.unsplit_string());
  }
  RootList crit = critical_points(phi, rng);
  if (!crit.complete) {
    throw IncompleteFactorization("critical points do not split over " + phi.field().describe(),
                                  crit.unsplit_string());
  }
  auto p = fixed.flattened();
  return TotalMarking({p[0], p[1], p[2]}, {crit.entries[0].point, crit.entries[1].point});
}

TotalMarking marking_of(const RatMap2& phi) {
  Rng rng(0);
  return marking_of(phi, rng);
}

}  // namespace tmrat
