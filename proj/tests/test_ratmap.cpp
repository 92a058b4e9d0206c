#include <gtest/gtest.h>

#include "support.hpp"
#include "tmrat/error.hpp"
#include "tmrat/ratmap.hpp"

using namespace tmrat;
using tmrat::testing::critical_discriminant_oracle;
using tmrat::testing::derivative_oracle;
using tmrat::testing::random_mobius;
using tmrat::testing::random_point;

namespace {

RatMap2 random_map(const Field& F, Rng& rng) {
  for (;;) {
    std::array<Element, 6> c{F.random(rng), F.random(rng), F.random(rng), F.random(rng), F.random(rng), F.random(rng)};
    if (tmrat::testing::sylvester_resultant(c).is_zero()) continue;
    return RatMap2(c);
  }
}

}  // namespace

TEST(RatMap, TripleFixedPointFixture) {
  const Field Q = Field::rationals();
  const RatMap2 phi = RatMap2::parse("(3*z^2+1)/(z^2+3)", Q);
  const RootList fixed = fixed_points(phi);
  ASSERT_TRUE(fixed.complete);
  ASSERT_EQ(fixed.entries.size(), 1u);
  EXPECT_EQ(fixed.entries[0].point, ProjPoint::affine(Q.one()));
  EXPECT_EQ(fixed.entries[0].multiplicity, 3u);
  const RootList crit = critical_points(phi);
  ASSERT_TRUE(crit.complete);
  EXPECT_EQ(crit.multiplicity_of(ProjPoint::affine(Q.zero())), 1u);
  EXPECT_EQ(crit.multiplicity_of(ProjPoint::infinity(Q)), 1u);
  const MultiplierSpectrum s = multiplier_spectrum(phi);
  const auto sig = s.symmetric_functions();
  EXPECT_EQ(sig[0], Q.from_int(3));
  EXPECT_EQ(sig[1], Q.from_int(3));
  EXPECT_EQ(sig[2], Q.one());
  EXPECT_TRUE(s.satisfies_fixed_point_identity());
  EXPECT_EQ(phi.to_string(), "[3,0,1;1,0,3]");
}

TEST(RatMap, CommonRootIsRejected) {
  const Field Q = Field::rationals();
  EXPECT_THROW(RatMap2::parse("[1,0,0;1,0,0]", Q), DomainError);
  EXPECT_THROW(RatMap2::parse("(z^2-1)/(z^2+z)", Q), DomainError);
}

TEST(RatMap, CharacteristicTwoIsRejected) {
  EXPECT_THROW(Field::parse("Fp:2"), DomainError);
  EXPECT_THROW(RatMap2::parse("[1,0,0;0,0,1]", Field::extension(2, 2)), DomainError);
}

TEST(RatMap, ParseForms) {
  const Field Q = Field::rationals();
  EXPECT_TRUE(RatMap2::parse("z^2", Q).equivalent(RatMap2::parse("[1,0,0;0,0,1]", Q)));
  EXPECT_TRUE(RatMap2::parse("(2*z^2)/(2)", Q).equivalent(RatMap2::parse("[1,0,0;0,0,1]", Q)));
  EXPECT_THROW(RatMap2::parse("[1,0;0,0,1]", Q), ParseError);
  EXPECT_THROW(RatMap2::parse("(z^3)/(1)", Q), ParseError);
}

TEST(RatMap, SquaringMapOverF7) {
  const Field F = Field::prime(7);
  const RatMap2 phi = RatMap2::parse("[1,0,0;0,0,1]", F);
  const MultiplierSpectrum s = multiplier_spectrum(phi);
  ASSERT_EQ(s.entries.size(), 3u);
  for (const auto& e : s.entries) {
    if (e.point.is_infinity() || e.point.value().is_zero()) {
      EXPECT_TRUE(e.multiplier.is_zero());
    } else {
      EXPECT_EQ(e.point.value(), F.one());
      EXPECT_EQ(e.multiplier, F.from_int(2));
    }
  }
  const auto [s1, s2] = moduli_coordinates(phi);
  EXPECT_EQ(s1, F.from_int(2));
  EXPECT_EQ(s2, F.zero());
}

TEST(RatMap, EvaluationAgreesWithCoefficients) {
  const Field F = Field::prime(101);
  Rng rng(8);
  for (int n = 0; n < 200; ++n) {
    const RatMap2 phi = random_map(F, rng);
    const Element z = F.random(rng);
    const auto& c = phi.coefficients();
    const Element num = c[0] * z * z + c[1] * z + c[2];
    const Element den = c[3] * z * z + c[4] * z + c[5];
    EXPECT_EQ(phi(ProjPoint::affine(z)), ProjPoint(num, den));
  }
}

TEST(RatMap, MultiplierMatchesQuotientRule) {
  Rng rng(9);
  for (const Field& F : {Field::prime(101), Field::extension(3, 2), Field::rationals()}) {
    for (int n = 0; n < 300; ++n) {
      const RatMap2 phi = random_map(F, rng);
      const RootList fixed = fixed_points(phi, rng);
      for (const auto& e : fixed.entries) {
        if (e.multiplicity != 1) continue;
        EXPECT_EQ(multiplier(phi, e.point), derivative_oracle(phi.coefficients(), e.point)) << phi.to_string();
      }
    }
  }
}

TEST(RatMap, NonFixedPointHasNoMultiplier) {
  const Field F = Field::prime(7);
  const RatMap2 phi = RatMap2::parse("[1,0,0;0,0,1]", F);
  EXPECT_THROW(multiplier(phi, ProjPoint::affine(F.from_int(3))), DomainError);
}

TEST(RatMap, FixedPointIdentityOnRandomSplitMaps) {
  Rng rng(10);
  for (const Field& F : {Field::prime(101), Field::extension(5, 2)}) {
    int complete = 0;
    for (int n = 0; n < 500; ++n) {
      const RatMap2 phi = random_map(F, rng);
      if (!fixed_points(phi, rng).complete) continue;
      ++complete;
      const auto s = multiplier_spectrum(phi, rng);
      const auto sig = s.symmetric_functions();
      EXPECT_EQ(sig[0], sig[2] + F.from_int(2));
    }
    EXPECT_GT(complete, 50);
  }
}

TEST(RatMap, SpectrumIsConjugationInvariant) {
  const Field F = Field::prime(101);
  Rng rng(11);
  for (int n = 0; n < 200; ++n) {
    const RatMap2 phi = random_map(F, rng);
    if (!fixed_points(phi, rng).complete) continue;
    const MobiusMap g = random_mobius(F, rng);
    const RatMap2 psi = conjugate(phi, g);
    const auto [a1, a2] = moduli_coordinates(phi, rng);
    const auto [b1, b2] = moduli_coordinates(psi, rng);
    EXPECT_EQ(a1, b1);
    EXPECT_EQ(a2, b2);
    // g carries fixed points of phi to fixed points of psi.
    for (const auto& e : fixed_points(phi, rng).entries) {
      EXPECT_EQ(psi(g.apply(e.point)), g.apply(e.point));
    }
  }
}

TEST(RatMap, SuperattractingExactlyAtCriticalFixedPoints) {
  const Field F = Field::prime(13);
  Rng rng(12);
  for (int n = 0; n < 500; ++n) {
    const RatMap2 phi = random_map(F, rng);
    const RootList fixed = fixed_points(phi, rng);
    if (!fixed.complete) continue;
    const BinaryForm w = phi.critical_point_form();
    for (const auto& e : multiplier_spectrum(phi, rng).entries) {
      EXPECT_EQ(e.multiplier.is_zero(), w.evaluate(e.point).is_zero());
    }
  }
}

TEST(RatMap, TwoDistinctCriticalPointsAgainstHandDiscriminant) {
  Rng rng(13);
  for (const Field& F : {Field::prime(101), Field::extension(3, 3), Field::rationals()}) {
    for (int n = 0; n < 200; ++n) {
      const RatMap2 phi = random_map(F, rng);
      EXPECT_FALSE(critical_discriminant_oracle(phi.coefficients()).is_zero());
      EXPECT_FALSE(discriminant2(phi.critical_point_form()).is_zero());
    }
  }
}

TEST(RatMap, ComplexMapsRoundTripThroughConjugation) {
  const Field C = Field::complex(128);
  Rng rng(14);
  for (int n = 0; n < 20; ++n) {
    const RatMap2 phi = random_map(C, rng);
    const MobiusMap g = tmrat::testing::random_mobius(C, rng);
    const RatMap2 back = conjugate(conjugate(phi, g), g.inverse());
    EXPECT_LT(back.relative_distance(phi).to_double(), 1e-25);
  }
}

TEST(RatMap, IrrationalFixedPointsOverQ) {
  const Field Q = Field::rationals();
  const RatMap2 phi = RatMap2::parse("(z^2+1)/(z^2-2*z+5)", Q);
  EXPECT_FALSE(fixed_points(phi).complete);
  EXPECT_THROW(multiplier_spectrum(phi), IncompleteFactorization);
}
