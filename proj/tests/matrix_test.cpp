#include <gtest/gtest.h>

#include "metaracah/errors.hpp"
#include "metaracah/matrix.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

TEST(Matrix, IdentityAndDiagonal) {
  const RationalVector d = {Rational(1), Rational(2), Rational(3)};
  const auto D = RationalMatrix::diagonal(d);
  EXPECT_EQ(D * RationalMatrix::identity(3), D);
  EXPECT_EQ(D(1, 1), Rational(2));
  EXPECT_TRUE(D(0, 1).is_zero());
}

TEST(Matrix, ColumnsRoundTrip) {
  const std::vector<RationalVector> cols = {{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  const auto m = RationalMatrix::from_columns(cols);
  EXPECT_EQ(m(1, 0), Rational(2));
  EXPECT_EQ(m.column(1), cols[1]);
}

TEST(Matrix, SingularInverseThrows) {
  RationalMatrix m(2, 2);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  EXPECT_THROW(m.inverse(), DegenerateParameters);
}

TEST(Matrix, NullspaceOfRankOneMatrix) {
  RationalMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2U);
  for (const auto& v : ns) {
    for (const auto& x : m * std::span<const Rational>(v)) EXPECT_TRUE(x.is_zero());
  }
}

TEST(Matrix, FirstDifferenceIsLocated) {
  auto a = RationalMatrix::identity(3);
  auto b = a;
  b(2, 1) = Rational(1, 2);
  EXPECT_NE(describe_first_difference(a, b).find("(2,1)"), std::string::npos);
  EXPECT_EQ(a.first_nonzero()->row, 0);
  EXPECT_EQ((a - b).first_nonzero()->row, 2);
}

TEST(MatrixProperty, TransposeOfProduct) {
  testgen::for_all(21, 60, [](testgen::Gen& g, int) {
    const int n = g.integer(1, 5);
    const auto a = g.matrix(n, n + 1);
    const auto b = g.matrix(n + 1, n);
    EXPECT_EQ((a * b).transpose(), b.transpose() * a.transpose());
  });
}

TEST(MatrixProperty, InverseIsTwoSided) {
  testgen::for_all(22, 60, [](testgen::Gen& g, int) {
    const int n = g.integer(1, 6);
    const auto a = g.matrix(n, n) + Rational(50) * RationalMatrix::identity(n);  // diagonally dominant
    const auto inv = a.inverse();
    EXPECT_EQ(a * inv, RationalMatrix::identity(n));
    EXPECT_EQ(inv * a, RationalMatrix::identity(n));
  });
}

TEST(MatrixProperty, SolveSatisfiesSystem) {
  testgen::for_all(23, 60, [](testgen::Gen& g, int) {
    const int n = g.integer(1, 6);
    const auto a = g.matrix(n, n) + Rational(50) * RationalMatrix::identity(n);
    RationalVector b(n);
    for (auto& x : b) x = g.rational();
    const auto x = solve(a, b);
    EXPECT_EQ(a * std::span<const Rational>(x), b);
  });
}

TEST(MatrixProperty, NullspaceDimensionMatchesRankDeficit) {
  testgen::for_all(24, 40, [](testgen::Gen& g, int) {
    const int n = g.integer(2, 6);
    // last column duplicates the first, so nullity >= 1
    auto a = g.matrix(n, n);
    a.set_column(n - 1, a.column(0));
    const auto ns = nullspace(a);
    ASSERT_GE(ns.size(), 1U);
    for (const auto& v : ns) {
      for (const auto& x : a * std::span<const Rational>(v)) EXPECT_TRUE(x.is_zero());
    }
  });
}

TEST(MatrixProperty, CommutatorIdentities) {
  testgen::for_all(25, 40, [](testgen::Gen& g, int) {
    const int n = g.integer(1, 4);
    const auto a = g.matrix(n, n);
    const auto b = g.matrix(n, n);
    const auto c = g.matrix(n, n);
    EXPECT_TRUE((commutator(a, b) + commutator(b, a)).is_zero());
    EXPECT_EQ(commutator(a, b) + anticommutator(a, b), Rational(2) * a * b);
    // Jacobi
    EXPECT_TRUE((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b)))
                    .is_zero());
  });
}

}  // namespace
}  // namespace metaracah
