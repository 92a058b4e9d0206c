#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "tmrat/field.hpp"

namespace tmrat {

/// A point [x : y] of the projective line, stored normalized: y = 1 when
/// y != 0, otherwise [1 : 0] (infinity).
class ProjPoint {
 public:
  /// Throws DomainError when both coordinates vanish.
  ProjPoint(Element x, Element y);

  static ProjPoint affine(Element value);
  static ProjPoint infinity(const Field& field);
  /// `inf` or an element literal.
  static ProjPoint parse(std::string_view text, const Field& field);

  const Element& x() const noexcept { return x_; }
  const Element& y() const noexcept { return y_; }
  const Field& field() const noexcept { return x_.field(); }

  bool is_infinity() const { return y_.is_zero(); }
  /// The affine coordinate x/y; throws DomainError at infinity.
  const Element& value() const;

  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b);

 private:
  Element x_;
  Element y_;
};

/// Canonical order on normalized points: finite points by value, infinity last.
std::weak_ordering canonical_order(const ProjPoint& a, const ProjPoint& b);

/// P.x * Q.y - P.y * Q.x on the normalized representatives.
Element bracket(const ProjPoint& p, const ProjPoint& q);

/// An element of PGL2 acting by [x : y] -> [a x + b y : c x + d y]. Stored up to
/// scalar; the determinant is never normalized.
class MobiusMap {
 public:
  /// Throws DomainError for a singular matrix.
  MobiusMap(Element a, Element b, Element c, Element d);

  static MobiusMap identity(const Field& field);
  /// The unique map sending src[i] to dst[i]. Throws DomainError if either
  /// triple has a repeated point. The result is checked on all three points.
  static MobiusMap from_three(const std::array<ProjPoint, 3>& src, const std::array<ProjPoint, 3>& dst);

  const Element& a() const noexcept { return m_[0]; }
  const Element& b() const noexcept { return m_[1]; }
  const Element& c() const noexcept { return m_[2]; }
  const Element& d() const noexcept { return m_[3]; }
  const Field& field() const noexcept { return m_[0].field(); }

  Element determinant() const;
  ProjPoint apply(const ProjPoint& p) const;
  /// Adjugate, which is the inverse up to scalar.
  MobiusMap inverse() const;
  /// (this * other)(P) = this(other(P)).
  MobiusMap compose(const MobiusMap& other) const;

  /// Proportional matrices.
  bool equivalent(const MobiusMap& other) const;

  std::string to_string() const;

 private:
  std::array<Element, 4> m_;
};

/// All (q^3 - q) elements of PGL2 over a finite field, each scaled so its
/// first nonzero entry is 1.
std::vector<MobiusMap> enumerate_pgl2(const Field& field);

}  // namespace tmrat
