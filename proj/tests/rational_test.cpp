#include <gtest/gtest.h>

#include "metaracah/errors.hpp"
#include "metaracah/rational.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, -6).str(), "-1/3");
  EXPECT_EQ(Rational(10, 2).str(), "5");
  EXPECT_EQ(Rational(0, 7).str(), "0");
  EXPECT_TRUE(Rational(4, 2).is_integer());
}

TEST(Rational, ParseAcceptsCanonicalAndSignedForms) {
  EXPECT_EQ(Rational::parse("-1/3"), Rational(-1, 3));
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("17"), Rational(17));
}

TEST(Rational, ParseRejectsMalformedInput) {
  for (const char* bad : {"", "1/", "/2", "a", "1/0", "1 /2", "1.5", "--1"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, DivisionByZeroIsDegenerate) {
  EXPECT_THROW(Rational(1) / Rational(0), DegenerateParameters);
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(Rational(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(Rational(2, 3).to_decimal(4), "0.6667");
  EXPECT_EQ(Rational(-1, 8).to_decimal(2), "-0.13");
  EXPECT_EQ(Rational(-1, 1000).to_decimal(2), "0.00");
  EXPECT_EQ(Rational(5).to_decimal(1), "5.0");
}

TEST(Rational, FactorialAndPowers) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(sign_power(3), Rational(-1));
  EXPECT_EQ(abs(Rational(-5, 2)), Rational(5, 2));
}

TEST(RationalProperty, FieldAxioms) {
  testgen::for_all(11, 300, [](testgen::Gen& g, int) {
    const Rational a = g.rational();
    const Rational b = g.nonzero_rational();
    const Rational c = g.rational();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a * b) / b, a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(-(-a), a);
  });
}

TEST(RationalProperty, ParseInvertsStr) {
  testgen::for_all(12, 300, [](testgen::Gen& g, int) {
    const Rational a = g.rational(100000, 9973);
    EXPECT_EQ(Rational::parse(a.str()), a);
  });
}

TEST(RationalProperty, OrderingAgreesWithSubtraction) {
  testgen::for_all(13, 300, [](testgen::Gen& g, int) {
    const Rational a = g.rational();
    const Rational b = g.rational();
    EXPECT_EQ(a < b, (b - a).sign() > 0);
  });
}

}  // namespace
}  // namespace metaracah
