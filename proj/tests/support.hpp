#pragma once

// Shared generators and independent oracles for the test binaries. The
// oracles here deliberately avoid the library's own implementations of the
// quantity being checked: cross ratios come from the affine formula,
// resultants from an explicit Sylvester expansion, multipliers from the
// quotient rule on raw coefficients.

#include <array>
#include <functional>
#include <vector>

#include "tmrat/field.hpp"
#include "tmrat/marking.hpp"
#include "tmrat/projective.hpp"
#include "tmrat/ratmap.hpp"

namespace tmrat::testing {

inline ProjPoint random_point(const Field& F, Rng& rng) {
  // Infinity roughly once in 16 draws so the degenerate paths get exercised.
  if (rng() % 16 == 0) return ProjPoint::infinity(F);
  return ProjPoint::affine(F.random(rng));
}

// Small-height rationals, so that Q computations stay cheap.
inline ProjPoint random_rational_point(const Field& Q, Rng& rng) {
  if (rng() % 16 == 0) return ProjPoint::infinity(Q);
  const long num = static_cast<long>(rng() % 41) - 20;
  const long den = static_cast<long>(rng() % 12) + 1;
  return ProjPoint::affine(Q.from_rational(mpq_class(num, den)));
}

inline MobiusMap random_mobius(const Field& F, Rng& rng) {
  for (;;) {
    const Element a = F.random(rng), b = F.random(rng), c = F.random(rng), d = F.random(rng);
    if (!(a * d - b * c).is_zero()) return MobiusMap(a, b, c, d);
  }
}

inline std::vector<ProjPoint> all_points(const Field& F) {
  std::vector<ProjPoint> out;
  for (const auto& e : F.elements()) out.push_back(ProjPoint::affine(e));
  out.push_back(ProjPoint::infinity(F));
  return out;
}

template <class Draw>
TotalMarking random_valid_marking(Draw&& draw) {
  for (;;) {
    const std::array<ProjPoint, 3> p{draw(), draw(), draw()};
    const std::array<ProjPoint, 2> q{draw(), draw()};
    auto mc = validate_marking(p, q);
    if (mc.marking) return *mc.marking;
  }
}

inline TotalMarking random_valid_marking(const Field& F, Rng& rng) {
  return random_valid_marking([&] { return random_point(F, rng); });
}

// Generic: all five points affine and distinct, and no cross ratio in {0, inf, -1}.
inline TotalMarking random_generic_marking(const Field& F, Rng& rng) {
  for (;;) {
    std::array<ProjPoint, 5> pts{ProjPoint::affine(F.random(rng)), ProjPoint::affine(F.random(rng)),
                                 ProjPoint::affine(F.random(rng)), ProjPoint::affine(F.random(rng)),
                                 ProjPoint::affine(F.random(rng))};
    bool distinct = true;
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = i + 1; j < 5; ++j) distinct = distinct && !(pts[i] == pts[j]);
    }
    if (!distinct) continue;
    auto mc = validate_marking({pts[0], pts[1], pts[2]}, {pts[3], pts[4]});
    if (!mc.marking) continue;
    const CrossRatioTriple r = cross_ratios(*mc.marking);
    bool generic = true;
    for (std::size_t i = 0; i < 3; ++i) generic = generic && !r[i].is_infinity() && !r[i].value().is_zero();
    if (generic) return *mc.marking;
  }
}

// Every coefficient vector over a finite field with first nonzero entry 1
// and nonzero resultant (resultant computed by the test oracle below).
Element sylvester_resultant(const std::array<Element, 6>& c);

template <class Fn>
void for_each_map(const Field& F, Fn&& fn) {
  const std::vector<Element> els = F.elements();
  const std::size_t q = els.size();
  std::size_t total = 1;
  for (int i = 0; i < 6; ++i) total *= q;
  for (std::size_t code = 1; code < total; ++code) {
    std::array<std::size_t, 6> d{};
    std::size_t c = code;
    for (int i = 5; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = c % q;
      c /= q;
    }
    std::size_t first = 0;
    while (d[first] == 0) ++first;
    if (!els[d[first]].is_one()) continue;
    std::array<Element, 6> e{els[d[0]], els[d[1]], els[d[2]], els[d[3]], els[d[4]], els[d[5]]};
    if (sylvester_resultant(e).is_zero()) continue;
    fn(RatMap2(e));
  }
}

// r_i from the affine formula with the cyclic convention; factors through
// an infinite point cancel in pairs.
CrossRatioTriple cross_ratio_oracle(const TotalMarking& m);

// num(r1)num(r2)num(r3) == den(r1)den(r2)den(r3) on a homogeneous triple.
bool w_equation_oracle(const CrossRatioTriple& r);

// phi'(p) at a fixed point p, by the quotient rule on the coefficients.
Element derivative_oracle(const std::array<Element, 6>& c, const ProjPoint& p);

// Discriminant of the critical-point quadratic
// (ae - bd) z^2 + 2(af - cd) z + (bf - ce), expanded by hand.
Element critical_discriminant_oracle(const std::array<Element, 6>& c);

}  // namespace tmrat::testing
