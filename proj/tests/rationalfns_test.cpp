#include <gtest/gtest.h>

#include "metaracah/rationalfns.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

using testgen::all_pass;
using testgen::default_params;
using testgen::default_rho;

TEST(CalU, KnownValue) { EXPECT_EQ(calU(1, 1, default_params()), Rational(1331, 1313)); }

TEST(CalU, TrivialRowAndColumn) {
  const Params p = default_params(4);
  for (int k = 0; k <= p.N; ++k) {
    EXPECT_EQ(calU(0, k, p), Rational(1));
    EXPECT_EQ(calU(k, 0, p), Rational(1));
  }
}

TEST(CalU, TildeIsTheReflectedSubstitution) {
  const Params p = default_params(4);
  for (int m = 0; m <= p.N; ++m) {
    for (int n = 0; n <= p.N; ++n) {
      EXPECT_EQ(calU_tilde(m, n, p),
                calU(m, p.N - n, Rational(p.N) - p.alpha - 1, p.beta + 2 * p.zeta - 2, 2 - p.zeta, p.N));
    }
  }
}

TEST(RationalFunctions, SuiteAtDefaults) {
  const Params p = default_params();
  EXPECT_TRUE(all_pass(check_rational_identification(p)));
  EXPECT_TRUE(all_pass(biorthogonality(p)));
  EXPECT_TRUE(all_pass(check_rational_relations(p)));
}

TEST(RationalFunctions, NormsStartAtOne) {
  EXPECT_EQ(rational_norm(0, default_params()), Rational(1));
  EXPECT_EQ(rational_norm_dual(0, default_params()), Rational(1));
}

TEST(RationalFunctions, ContiguityShift) {
  const Params s = contiguity_shift(default_params());
  EXPECT_EQ(s.alpha, Rational(1, 3) - 1);
  EXPECT_EQ(s.beta, Rational(1, 5) - 2);
  EXPECT_EQ(s.zeta, Rational(1, 7) + 2);
  EXPECT_EQ(s.N, 5);
}

TEST(RationalFunctions, ResidualsVanishPointwise) {
  const Params p = default_params(4);
  for (int m = 0; m <= p.N; ++m) {
    for (int n = 0; n <= p.N; ++n) {
      EXPECT_TRUE(gevp_recurrence_residual(m, n, p).is_zero()) << m << "," << n;
      EXPECT_TRUE(difference_residual(m, n, p).is_zero()) << m << "," << n;
      EXPECT_TRUE(contiguity_residual(m, n, p).is_zero()) << m << "," << n;
    }
  }
}

TEST(HahnLimit, DeviationShrinksByAboutTenPerDecade) {
  const std::vector<Rational> ts = {Rational(1000), Rational(10000), Rational(100000)};
  const auto res = hahn_limit(1, 1, Rational(1, 3), Rational(1, 5), 5, ts, Rational(1, 1000));
  ASSERT_EQ(res.deviations.size(), 3U);
  EXPECT_NEAR(res.deviations[0].to_double(), -9.9e-4, 0.05e-4);
  EXPECT_NEAR(res.deviations[2].to_double(), -9.9e-6, 0.05e-6);
  EXPECT_TRUE(res.monotone);
  EXPECT_TRUE(res.improved);
  EXPECT_TRUE(res.last_below_threshold);
  EXPECT_TRUE(all_pass(hahn_limit_check(1, 1, Rational(1, 3), Rational(1, 5), 5, ts)));
}

TEST(HahnLimit, SmallTIsReportedAsFailure) {
  const std::vector<Rational> ts = {Rational(1), Rational(2)};
  const auto r = hahn_limit_check(1, 1, Rational(1, 3), Rational(1, 5), 5, ts);
  EXPECT_FALSE(r.find("hahn.threshold")->passed());
}

TEST(RationalFunctionsProperty, RandomParameters) {
  testgen::for_all(81, 16, [](testgen::Gen& g, int i) {
    const auto d = g.generic(1 + i % 8);
    SCOPED_TRACE(testgen::describe(d.params, d.rho));
    EXPECT_TRUE(all_pass(check_rational_identification(d.params)));
    EXPECT_TRUE(all_pass(biorthogonality(d.params)));
    EXPECT_TRUE(all_pass(check_rational_relations(d.params)));
  });
}

TEST(DualHahn, TrivialRowAndColumn) {
  const Params p = default_params(4);
  for (int k = 0; k <= p.N; ++k) {
    EXPECT_EQ(dual_hahn(0, k, p), Rational(1));
    EXPECT_EQ(dual_hahn(k, 0, p), Rational(1));
  }
  EXPECT_TRUE(all_pass(dual_hahn_expansion(p)));
}

}  // namespace
}  // namespace metaracah
