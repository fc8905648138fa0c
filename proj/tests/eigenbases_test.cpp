#include <gtest/gtest.h>

#include "metaracah/eigenbases.hpp"
#include "metaracah/errors.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

using testgen::all_pass;
using testgen::default_params;
using testgen::default_rho;

TEST(BasisLabels, RoundTrip) {
  for (BasisLabel l : all_basis_labels()) EXPECT_EQ(parse_basis_label(to_string(l)), l);
  EXPECT_FALSE(parse_basis_label("q").has_value());
  EXPECT_TRUE(is_dual(BasisLabel::kFStar));
  EXPECT_FALSE(is_dual(BasisLabel::kZ));
}

TEST(Eigenbases, ClosedFormsMatchOracleAtDefaults) {
  EXPECT_TRUE(all_pass(check_eigenbases(default_params(), default_rho())));
  EXPECT_TRUE(all_pass(check_orthogonality(default_params(), default_rho())));
}

TEST(Eigenbases, ZBasisSolvesItsEigenproblem) {
  const Params p = default_params(4);
  const auto fam = build_basis(p, default_rho(), BasisLabel::kZ);
  const auto Z = build_Z(p);
  for (int n = 0; n <= p.N; ++n) {
    const auto v = fam.vectors.column(n);
    auto lhs = Z * std::span<const Rational>(v);
    for (int i = 0; i <= p.N; ++i) EXPECT_EQ(lhs[i], fam.eigenvalues[n] * v[i]);
    EXPECT_EQ(fam.eigenvalues[n], Rational(n) - p.alpha);
  }
}

TEST(Eigenbases, ZActionOnDMatchesProduct) {
  const Params p = default_params(5);
  const auto D = build_basis(p, default_rho(), BasisLabel::kD).vectors;
  const auto ZD = build_Z(p) * D;
  for (int n = 0; n <= p.N; ++n) EXPECT_EQ(z_action_on_d(p, n), ZD.column(n)) << n;
}

TEST(Eigenbases, OracleRejectsDegenerateEigenvalue) {
  const auto I = RationalMatrix::identity(3);
  EXPECT_THROW(oracle_eigenvector(I, I, Rational(1), 0, Rational(1), "identity"), NondegenerateSpectrumViolated);
}

TEST(Eigenbases, DegenerateParametersRefuseToBuild) {
  const Params p{3, Rational(2), Rational(1, 5), Rational(1, 7)};
  EXPECT_THROW(build_basis(p, default_rho(), BasisLabel::kD), DegenerateParameters);
}

TEST(EigenbasesProperty, ClosedFormsMatchOracleForRandomParameters) {
  testgen::for_all(51, 20, [](testgen::Gen& g, int i) {
    const auto d = g.generic(1 + i % 8);
    SCOPED_TRACE(testgen::describe(d.params, d.rho));
    EXPECT_TRUE(all_pass(check_eigenbases(d.params, d.rho)));
    EXPECT_TRUE(all_pass(check_orthogonality(d.params, d.rho)));
  });
}

}  // namespace
}  // namespace metaracah
