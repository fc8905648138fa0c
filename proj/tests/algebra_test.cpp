#include <gtest/gtest.h>

#include <algorithm>

#include "metaracah/algebra.hpp"
#include "metaracah/errors.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

using testgen::all_pass;
using testgen::default_params;
using testgen::default_rho;

bool mentions(const std::vector<std::string>& offenders, const std::string& text) {
  return std::any_of(offenders.begin(), offenders.end(),
                     [&](const std::string& o) { return o.find(text) != std::string::npos; });
}

TEST(Generators, ZAtSmallDimension) {
  const Params p{1, Rational(1, 3), Rational(1, 5), Rational(1, 7)};
  RationalMatrix expected(2, 2);
  expected(0, 0) = Rational(-1, 3);
  expected(1, 0) = Rational(1);
  expected(1, 1) = Rational(2, 3);
  EXPECT_EQ(build_Z(p), expected);
}

TEST(Generators, BidiagonalShapes) {
  const auto g = build_generators(default_params());
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      if (r != c && r != c + 1) {
        EXPECT_TRUE(g.Z(r, c).is_zero());
        EXPECT_TRUE(g.X(r, c).is_zero());
      }
      if (r != c && r + 1 != c) EXPECT_TRUE(g.V(r, c).is_zero());
    }
  }
}

TEST(Generators, ExplicitTransposesMatch) {
  const Params p = default_params(6);
  const auto g = build_generators(p);
  const auto t = build_transposes(p);
  EXPECT_EQ(t.Zt, g.Z.transpose());
  EXPECT_EQ(t.Vt, g.V.transpose());
  EXPECT_EQ(t.Xt, g.X.transpose());
}

TEST(CentralElements, KnownValues) {
  const auto c = central_params(default_params(2));
  EXPECT_EQ(c.xi, Rational(-3616, 1575));
  EXPECT_EQ(c.eta, Rational(27266, 11025));
}

TEST(Casimir, ScalarOnTheModule) {
  const auto C = casimir(default_params(2));
  EXPECT_EQ(C, Rational(-21842, 99225) * RationalMatrix::identity(3));
}

TEST(Relations, HoldAtDefaults) {
  EXPECT_TRUE(all_pass(check_defining_relations(default_params())));
  EXPECT_TRUE(all_pass(check_subalgebras(default_params(), default_rho())));
}

TEST(Relations, PerturbedGeneratorIsLocated) {
  const Params p = default_params(3);
  Generators g = build_generators(p);
  g.X(2, 1) += Rational(1);
  const auto r = check_defining_relations(g, p.zeta, central_params(p));
  EXPECT_FALSE(r.all_passed());
  for (const auto& c : r.checks) {
    if (!c.passed()) EXPECT_NE(c.detail.find("entry"), std::string::npos) << c.id;
  }
}

TEST(Genericity, DefaultsAreGeneric) {
  EXPECT_TRUE(static_cast<bool>(validate_params(default_params(), default_rho())));
}

TEST(Genericity, IntegerAlphaIsDegenerate) {
  const Params p{3, Rational(1), Rational(1, 5), Rational(1, 7)};
  const auto v = validate_params(p, default_rho());
  EXPECT_FALSE(v.ok);
  EXPECT_TRUE(mentions(v.offenders, "(-alpha)_{n+1}"));
  EXPECT_THROW(require_generic(p, default_rho(), Needs::kStandard), DegenerateParameters);
}

TEST(Genericity, RhoEntriesSkippedWithoutRho) {
  // 2 alpha + rho = 1 makes an f-basis denominator vanish
  const Params p = default_params(3);
  const Rational rho = Rational(1) - 2 * p.alpha;
  EXPECT_FALSE(degenerate_expressions(p, rho, Needs::kAll).empty());
  EXPECT_TRUE(degenerate_expressions(p, std::nullopt, Needs::kAll).empty());
}

TEST(Genericity, NeedsRestrictTheRegistry) {
  // alpha - beta = 1 only matters for the d basis and its relatives
  const Params p{4, Rational(1, 3), Rational(-2, 3), Rational(1, 7)};
  EXPECT_TRUE(degenerate_expressions(p, default_rho(), Needs::kBasisE).empty());
  EXPECT_FALSE(degenerate_expressions(p, default_rho(), Needs::kAll).empty());
}

TEST(Genericity, DimensionMustBePositive) {
  Params p = default_params();
  p.N = 0;
  EXPECT_TRUE(mentions(validate_params(p).offenders, "N >= 1"));
}

TEST(Heun, BidiagonalCombination) {
  const auto h = heun_bidiagonal(default_params(), Rational(2), Rational(-1, 3), Rational(5, 7));
  EXPECT_TRUE(h.bidiagonal);
  // h3 = -h4 and h2 = -h4
  EXPECT_EQ(h.H, heun_operator(default_params(), Rational(2), Rational(-1, 3), Rational(-5, 7), Rational(-5, 7),
                               Rational(5, 7)));
}

TEST(Heun, MismatchedCoefficientsFillTheSuperdiagonal) {
  const auto H = heun_operator(default_params(), Rational(1), Rational(1), Rational(1, 2), Rational(0), Rational(1, 3));
  EXPECT_FALSE(is_lower_bidiagonal(H));
  EXPECT_FALSE(H(0, 1).is_zero());
}

TEST(Spectrum, CharacteristicValueVanishesOnEigenvalues) {
  const Params p = default_params(4);
  const Rational rho = default_rho();
  const auto g = build_generators(p);
  const RationalMatrix W = g.X + rho * g.Z;
  for (int n = 0; n <= p.N; ++n) {
    EXPECT_TRUE(characteristic_value(W, (Rational(n) - p.alpha - rho) * (p.alpha - n)).is_zero()) << n;
  }
  EXPECT_FALSE(characteristic_value(W, Rational(1, 2)).is_zero());
}

TEST(AlgebraProperty, RelationsAndCentralityForRandomParameters) {
  testgen::for_all(41, 40, [](testgen::Gen& g, int i) {
    const auto d = g.generic(1 + i % 10, Needs::kStandard);
    SCOPED_TRACE(testgen::describe(d.params, d.rho));
    EXPECT_TRUE(all_pass(check_defining_relations(d.params)));
    const auto gens = build_generators(d.params);
    const auto C = casimir(d.params);
    EXPECT_TRUE(commutator(C, gens.X).is_zero());
    EXPECT_TRUE(commutator(C, gens.V).is_zero());
    EXPECT_TRUE(commutator(C, gens.Z).is_zero());
  });
}

TEST(AlgebraProperty, HeunCombinationsStayBidiagonal) {
  testgen::for_all(42, 40, [](testgen::Gen& g, int) {
    const auto d = g.generic(g.integer(1, 7), Needs::kStandard);
    EXPECT_TRUE(heun_bidiagonal(d.params, g.rational(), g.rational(), g.rational()).bidiagonal);
  });
}

TEST(AlgebraProperty, SubalgebrasForRandomParameters) {
  testgen::for_all(43, 20, [](testgen::Gen& g, int) {
    const auto d = g.generic(g.integer(1, 8));
    SCOPED_TRACE(testgen::describe(d.params, d.rho));
    EXPECT_TRUE(all_pass(check_subalgebras(d.params, d.rho)));
  });
}

}  // namespace
}  // namespace metaracah
