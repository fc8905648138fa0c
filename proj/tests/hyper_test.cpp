#include <gtest/gtest.h>

#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

TEST(Pochhammer, SmallCases) {
  EXPECT_EQ(pochhammer(Rational(3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 4), Rational(3 * 4 * 5 * 6));
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
  EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
  EXPECT_EQ(multi_pochhammer({Rational(1), Rational(2)}, 3), Rational(6 * 24));
}

TEST(HypSum, KnownValue) {
  EXPECT_EQ(hyp_sum({Rational(-2), Rational(3), Rational(-5), Rational(1, 2)},
                    {Rational(-7), Rational(2), Rational(1, 3)}),
            Rational(-17, 28));
}

TEST(HypSum, TerminationIndexIsSmallestNonpositiveInteger) {
  const HypSeries s({Rational(-4), Rational(1, 2), Rational(-2)}, {Rational(3), Rational(5)});
  EXPECT_EQ(s.termination_index(), 2);
}

TEST(HypSum, NonTerminatingSeriesRejected) {
  EXPECT_THROW(HypSeries({Rational(1, 2), Rational(3)}, {Rational(2)}), PreconditionViolated);
}

TEST(HypSum, VanishingLowerParameterIsDegenerate) {
  EXPECT_THROW(hyp_sum({Rational(-3), Rational(1, 2)}, {Rational(-1)}), DegenerateParameters);
}

TEST(HypSum, ArgumentScalesTerms) {
  // 1F0(-n;;z) = (1 - z)^n
  EXPECT_EQ(hyp_sum({Rational(-3)}, {}, Rational(1, 2)), Rational(1, 8));
}

TEST(HypSumProperty, ChuVandermonde) {
  testgen::for_all(31, 150, [](testgen::Gen& g, int) {
    const int n = g.integer(0, 8);
    const Rational b = g.rational();
    Rational c = g.nonzero_rational();
    if (c.is_integer()) c += Rational(1, 2);
    EXPECT_EQ(hyp_sum({Rational(-n), b}, {c}), pochhammer(c - b, n) / pochhammer(c, n));
  });
}

TEST(HypSumProperty, PfaffSaalschutz) {
  testgen::for_all(32, 150, [](testgen::Gen& g, int) {
    const int n = g.integer(0, 7);
    const Rational a = g.rational();
    const Rational b = g.rational();
    const Rational c = g.nonzero_rational() + Rational(1, 29);
    const Rational d = a + b - c - n + 1;
    if (pochhammer(c, n).is_zero() || pochhammer(d, n).is_zero() || pochhammer(c - a - b, n).is_zero()) return;
    EXPECT_EQ(hyp_sum({Rational(-n), a, b}, {c, d}),
              pochhammer(c - a, n) * pochhammer(c - b, n) / (pochhammer(c, n) * pochhammer(c - a - b, n)));
  });
}

TEST(WhippleProperty, RandomBalancedInstances) {
  int checked = 0;
  testgen::for_all(33, 200, [&](testgen::Gen& g, int) {
    const int n = g.integer(0, 8);
    const Rational a = g.rational(), b = g.rational(), c = g.rational();
    const Rational d = g.nonzero_rational() + Rational(1, 31);
    const Rational e = g.nonzero_rational() + Rational(1, 37);
    const Rational f = Rational(1 - n) + a + b + c - d - e;
    try {
      EXPECT_TRUE(whipple_check(n, a, b, c, d, e, f));
      ++checked;
    } catch (const DegenerateParameters&) {
      // a lower parameter hit a nonpositive integer; not a Whipple instance
    }
  });
  EXPECT_GE(checked, 180);
}

TEST(Whipple, RejectsUnbalancedInput) {
  EXPECT_THROW(whipple_check(2, Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(2), Rational(3), Rational(4)),
               PreconditionViolated);
}

}  // namespace
}  // namespace metaracah
