#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tmrat/polynomial.hpp"
#include "tmrat/projective.hpp"
#include "tmrat/roots.hpp"

namespace tmrat {

/// A degree-two self-map [a X^2 + b XY + c Y^2 : d X^2 + e XY + f Y^2] of the
/// projective line with nonzero resultant, stored up to scalar. On exact
/// fields the first nonzero coefficient (in order a..f) is scaled to 1; on C
/// the coefficient of largest modulus is.
class RatMap2 {
 public:
  /// Throws DomainError("degenerate: common root") when the resultant vanishes.
  explicit RatMap2(std::array<Element, 6> coeffs);
  RatMap2(const BinaryForm& numerator, const BinaryForm& denominator);

  /// `(<poly in z>)/(<poly in z>)` or `[a,b,c;d,e,f]`.
  static RatMap2 parse(std::string_view text, const Field& field);
  /// The literal's coefficients as written, before any validation or scaling.
  static std::array<Element, 6> parse_coefficients(std::string_view text, const Field& field);

  const std::array<Element, 6>& coefficients() const noexcept { return c_; }
  const Element& operator[](std::size_t i) const { return c_.at(i); }
  const Field& field() const noexcept { return c_[0].field(); }

  BinaryForm numerator() const { return BinaryForm({c_[0], c_[1], c_[2]}); }
  BinaryForm denominator() const { return BinaryForm({c_[3], c_[4], c_[5]}); }
  Element resultant() const { return resultant2(numerator(), denominator()); }

  ProjPoint operator()(const ProjPoint& p) const;

  /// Y * phi0 - X * phi1, whose roots are the fixed points.
  BinaryForm fixed_point_form() const;
  /// The Wronskian of (phi0, phi1), whose roots are the critical points.
  BinaryForm critical_point_form() const;

  /// Proportional coefficient vectors.
  bool equivalent(const RatMap2& other) const;
  /// max_i |c_i - s * o_i| / max_i |c_i| after scaling `other` to agree with
  /// this map on its largest coefficient. Meaningful over C; 0 or 1 on exact fields.
  BigFloat relative_distance(const RatMap2& other) const;

  /// The canonical coefficients, except over Q where the representative is the
  /// primitive integer vector with positive first nonzero entry.
  std::array<Element, 6> display_coefficients() const;

  /// `[a,b,c;d,e,f]` of display_coefficients()
  std::string to_string() const;
  /// `(a*z^2+b*z+c)/(d*z^2+e*z+f)`
  std::string to_rational_string() const;

 private:
  void canonicalize();
  std::array<Element, 6> c_;
};

struct SpectrumEntry {
  ProjPoint point;
  unsigned multiplicity;
  Element multiplier;
};

struct MultiplierSpectrum {
  std::vector<SpectrumEntry> entries;

  /// sigma_1, sigma_2, sigma_3 of the multipliers counted with multiplicity.
  std::array<Element, 3> symmetric_functions() const;
  /// sigma_1 == sigma_3 + 2
  bool satisfies_fixed_point_identity() const;
};

RootList fixed_points(const RatMap2& phi, Rng& rng);
RootList fixed_points(const RatMap2& phi);

/// Throws InternalError if the two critical points coincide.
RootList critical_points(const RatMap2& phi, Rng& rng);
RootList critical_points(const RatMap2& phi);

/// Derivative of phi at the fixed point p (in a chart where p is finite).
/// Multiple fixed points return exactly 1. Throws DomainError if p is not fixed.
Element multiplier(const RatMap2& phi, const ProjPoint& p);

/// Throws IncompleteFactorization when the fixed points do not split.
MultiplierSpectrum multiplier_spectrum(const RatMap2& phi, Rng& rng);
MultiplierSpectrum multiplier_spectrum(const RatMap2& phi);

/// g o phi o g^-1
RatMap2 conjugate(const RatMap2& phi, const MobiusMap& g);

/// (sigma_1, sigma_2) of the multipliers: coordinates on the moduli space of
/// unmarked maps. Conjugation invariant.
std::pair<Element, Element> moduli_coordinates(const RatMap2& phi, Rng& rng);
std::pair<Element, Element> moduli_coordinates(const RatMap2& phi);

}  // namespace tmrat
