#include <gtest/gtest.h>

#include "tmrat/error.hpp"
#include "tmrat/field.hpp"

using namespace tmrat;

namespace {

std::vector<Field> exact_fields() {
  return {Field::rationals(), Field::prime(7), Field::prime(101), Field::extension(3, 2), Field::extension(13, 2),
          Field::extension(5, 3)};
}

}  // namespace

TEST(Field, ParseDescriptors) {
  EXPECT_EQ(Field::parse("Q").kind(), FieldKind::Rationals);
  EXPECT_EQ(Field::parse("Fp:7").prime(), 7u);
  const Field f9 = Field::parse("Fpk:3^2");
  EXPECT_EQ(f9.kind(), FieldKind::ExtensionField);
  EXPECT_EQ(f9.order(), 9);
  EXPECT_EQ(Field::parse("C").precision_bits(), Field::kDefaultComplexBits);
  EXPECT_EQ(Field::parse("C:256").precision_bits(), 256u);
  EXPECT_THROW(Field::parse("Fp:2"), DomainError);
  EXPECT_THROW(Field::parse("Fp:9"), DomainError);
  EXPECT_THROW(Field::parse("R"), ParseError);
  EXPECT_THROW(Field::parse("Fpk:3^0"), DomainError);
}

TEST(Field, ExplicitModulusMustBeIrreducible) {
  EXPECT_NO_THROW(Field::parse("Fpk:3^2,mod=t^2+1"));
  EXPECT_THROW(Field::parse("Fpk:5^2,mod=t^2+1"), DomainError);  // -1 is a square mod 5
}

TEST(Field, AxiomsOnRandomElements) {
  Rng rng(11);
  for (const Field& F : exact_fields()) {
    for (int n = 0; n < 300; ++n) {
      const Element a = F.random(rng), b = F.random(rng), c = F.random(rng);
      ASSERT_EQ(a + b, b + a) << F.describe();
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a - a, F.zero());
      ASSERT_EQ(a + (-a), F.zero());
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inv(), F.one());
        ASSERT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Field, FrobeniusFixesEveryElementOfFiniteFields) {
  Rng rng(3);
  for (const Field& F : {Field::prime(13), Field::extension(3, 2), Field::extension(7, 3)}) {
    const mpz_class q = F.order();
    for (int n = 0; n < 50; ++n) {
      const Element a = F.random(rng);
      EXPECT_EQ(a.pow(q), a) << F.describe() << " " << a;
    }
  }
}

TEST(Field, GeneratorHasFullOrderInSmallExtensions) {
  const Field F = Field::extension(3, 2);
  const Element g = F.generator();
  Element x = g;
  int order = 1;
  while (!x.is_one()) {
    x *= g;
    ++order;
  }
  // Not required to be primitive; only a nontrivial element of F_9 \ F_3.
  EXPECT_TRUE(order == 8 || order == 4);
  EXPECT_NE(g.pow(3), g);
}

TEST(Field, EnumerationIsExhaustiveAndDistinct) {
  for (const Field& F : {Field::prime(5), Field::extension(3, 2), Field::extension(2 + 3, 2)}) {
    const auto els = F.elements();
    ASSERT_EQ(mpz_class(els.size()), F.order());
    for (std::size_t i = 0; i < els.size(); ++i) {
      for (std::size_t j = i + 1; j < els.size(); ++j) ASSERT_FALSE(els[i] == els[j]);
    }
  }
}

TEST(Field, RationalLiterals) {
  const Field Q = Field::rationals();
  EXPECT_EQ(Q.parse_element("-3/6"), Q.from_rational(mpq_class(-1, 2)));
  EXPECT_EQ(Q.parse_element("-3/6").to_string(), "-1/2");
  EXPECT_THROW(Q.parse_element("1/0"), DomainError);
  EXPECT_THROW(Q.parse_element("abc"), ParseError);
  mpq_class bad(1);
  bad.get_den() = 0;  // not canonicalized, so GMP does not trap
  EXPECT_THROW(Q.from_rational(bad), DivisionByZero);
}

TEST(Field, ReductionOfRationalsModP) {
  const Field F = Field::prime(7);
  EXPECT_EQ(F.from_rational(mpq_class(1, 2)), F.from_int(4));
  EXPECT_EQ(F.from_int(-1), F.from_int(6));
  EXPECT_THROW(F.from_rational(mpq_class(1, 7)), DivisionByZero);
}

TEST(Field, ZeroHasNoInverse) {
  for (const Field& F : exact_fields()) EXPECT_THROW(F.zero().inv(), DivisionByZero);
}

TEST(Field, MixingFieldsIsRejected) {
  EXPECT_THROW(Field::prime(7).one() + Field::prime(11).one(), FieldMismatch);
}

TEST(Field, CanonicalOrderIsATotalOrder) {
  Rng rng(5);
  for (const Field& F : exact_fields()) {
    for (int n = 0; n < 200; ++n) {
      const Element a = F.random(rng), b = F.random(rng);
      const auto ab = canonical_order(a, b), ba = canonical_order(b, a);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ab < 0, ba > 0);
    }
  }
}

TEST(Field, ComplexArithmeticWithinTolerance) {
  const Field C = Field::complex(128);
  Rng rng(9);
  for (int n = 0; n < 100; ++n) {
    const Element a = C.random(rng), b = C.random(rng);
    if (a.is_zero()) continue;
    EXPECT_EQ(b / a * a, b);
    EXPECT_EQ((a + b) * (a - b), a * a - b * b);
  }
  const Element i = C.imaginary_unit();
  EXPECT_EQ(i * i, -C.one());
}

TEST(Field, ExtensionElementLiterals) {
  const Field F = Field::extension(3, 2);
  const Element t = F.generator();
  EXPECT_EQ(F.parse_element("t"), t);
  EXPECT_EQ(F.parse_element("2*t+1"), F.from_int(2) * t + F.one());
  EXPECT_EQ(F.parse_element(F.parse_element("2*t+1").to_string()), F.from_int(2) * t + F.one());
}
