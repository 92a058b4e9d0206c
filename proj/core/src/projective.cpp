#include "tmrat/projective.hpp"

#include "tmrat/error.hpp"
#include "tmrat/parse.hpp"

namespace tmrat {

ProjPoint::ProjPoint(Element x, Element y) : x_(std::move(x)), y_(std::move(y)) {
  if (!(x_.field() == y_.field())) throw FieldMismatch();
  bool y_vanishes = x_.field().exact() ? y_.is_zero() : y_.negligible_against(x_);
  if (y_vanishes) {
    if (x_.is_zero()) throw DomainError("projective point [0 : 0]");
    x_ = x_.field().one();
    y_ = x_.field().zero();
  } else {
    x_ /= y_;
    y_ = x_.field().one();
  }
}

ProjPoint ProjPoint::affine(Element value) {
  Element one = value.field().one();
  return ProjPoint(std::move(value), std::move(one));
}

ProjPoint ProjPoint::infinity(const Field& field) { return ProjPoint(field.one(), field.zero()); }

ProjPoint ProjPoint::parse(std::string_view text, const Field& field) {
  text = trim(text);
  if (text == "inf" || text == "oo" || text == "∞") return infinity(field);
  return affine(field.parse_element(text));
}

const Element& ProjPoint::value() const {
  if (is_infinity()) throw DomainError("affine coordinate of infinity");
  return x_;
}

std::string ProjPoint::to_string() const { return is_infinity() ? "inf" : x_.to_string(); }

bool operator==(const ProjPoint& a, const ProjPoint& b) {
  bool ai = a.is_infinity();
  bool bi = b.is_infinity();
  if (ai || bi) return ai == bi && a.field() == b.field();
  return a.x_ == b.x_;
}

std::weak_ordering canonical_order(const ProjPoint& a, const ProjPoint& b) {
  bool ai = a.is_infinity();
  bool bi = b.is_infinity();
  if (ai != bi) return ai ? std::weak_ordering::greater : std::weak_ordering::less;
  if (ai) return std::weak_ordering::equivalent;
  return canonical_order(a.x(), b.x());
}

Element bracket(const ProjPoint& p, const ProjPoint& q) { return p.x() * q.y() - p.y() * q.x(); }

// ---------------------------------------------------------------------------

MobiusMap::MobiusMap(Element a, Element b, Element c, Element d)
    : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (const auto& e : m_) {
    if (!(e.field() == m_[0].field())) throw FieldMismatch();
  }
  Element det = determinant();
  bool singular = det.is_zero();
  if (!field().exact()) {
    Element scale = m_[0] * m_[3];
    Element other = m_[1] * m_[2];
    singular = det.negligible_against(scale) && det.negligible_against(other);
  }
  if (singular) throw DomainError("singular Moebius matrix");
}

MobiusMap MobiusMap::identity(const Field& field) { return {field.one(), field.zero(), field.zero(), field.one()}; }

namespace {

// Sends p -> 0, q -> inf, r -> 1.
MobiusMap to_standard_frame(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  if (p == q || q == r || p == r) throw DomainError("Moebius frame needs three distinct points");
  // P -> [bracket(P, p) * bracket(r, q) : bracket(P, q) * bracket(r, p)]
  Element k1 = bracket(r, q);
  Element k2 = bracket(r, p);
  return MobiusMap(k1 * p.y(), -(k1 * p.x()), k2 * q.y(), -(k2 * q.x()));
}

}  // namespace

MobiusMap MobiusMap::from_three(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst) {
  MobiusMap s = to_standard_frame(src[0], src[1], src[2]);
  MobiusMap t = to_standard_frame(dst[0], dst[1], dst[2]);
  MobiusMap g = t.inverse().compose(s);
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(g.apply(src[i]) == dst[i])) throw InternalError("Moebius map from three points failed its check");
  }
  return g;
}

Element MobiusMap::determinant() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

ProjPoint MobiusMap::apply(const ProjPoint& p) const {
  if (!(p.field() == field())) throw FieldMismatch();
  return ProjPoint(m_[0] * p.x() + m_[1] * p.y(), m_[2] * p.x() + m_[3] * p.y());
}

MobiusMap MobiusMap::inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

MobiusMap MobiusMap::compose(const MobiusMap& o) const {
  return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
          m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

bool MobiusMap::equivalent(const MobiusMap& other) const {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!(m_[i] * other.m_[j] == m_[j] * other.m_[i])) return false;
    }
  }
  return true;
}

std::string MobiusMap::to_string() const {
  return "[" + m_[0].to_string() + "," + m_[1].to_string() + ";" + m_[2].to_string() + "," + m_[3].to_string() + "]";
}

std::vector<MobiusMap> enumerate_pgl2(const Field& field) {
  auto elems = field.elements();
  std::vector<MobiusMap> out;
  const Element one = field.one();
  const Element zero = field.zero();
  auto push = [&](const Element& a, const Element& b, const Element& c, const Element& d) {
    if ((a * d - b * c).is_zero()) return;
    out.emplace_back(a, b, c, d);
  };
  // a = 1
  for (const auto& b : elems) {
    for (const auto& c : elems) {
      for (const auto& d : elems) push(one, b, c, d);
    }
  }
  // a = 0, b = 1
  for (const auto& c : elems) {
    for (const auto& d : elems) push(zero, one, c, d);
  }
  return out;
}

}  // namespace tmrat
