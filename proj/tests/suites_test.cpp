#include <gtest/gtest.h>

#include <set>

#include "metaracah/errors.hpp"
#include "metaracah/suites.hpp"
#include "support/generators.hpp"

namespace metaracah {
namespace {

using testgen::all_pass;
using testgen::default_params;
using testgen::default_rho;

TEST(Suites, EverySuitePassesAtDefaults) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name, default_params(), default_rho());
    EXPECT_TRUE(all_pass(r)) << name;
    EXPECT_FALSE(r.checks.empty()) << name;
    for (const auto& c : r.checks) EXPECT_EQ(c.id.rfind(name + ".", 0), 0U) << c.id;
  }
}

TEST(Suites, AllIsTheUnionOfTheParts) {
  const auto all = run_suite("all", default_params(3), default_rho());
  std::size_t total = 0;
  for (const auto& name : suite_names()) total += run_suite(name, default_params(3), default_rho()).checks.size();
  EXPECT_EQ(all.checks.size(), total);
  std::set<std::string> ids;
  for (const auto& c : all.checks) EXPECT_TRUE(ids.insert(c.id).second) << "duplicate id " << c.id;
}

TEST(Suites, UnknownNameRejected) {
  EXPECT_THROW(run_suite("nope", default_params(), default_rho()), PreconditionViolated);
}

TEST(Suites, DegenerateParametersRejected) {
  const Params p{3, Rational(1), Rational(1, 5), Rational(1, 7)};
  EXPECT_THROW(run_suite("algebra", p, default_rho()), DegenerateParameters);
}

TEST(Sampler, DrawsFromTheAdvertisedSet) {
  ParamSampler s(5);
  const std::set<long> primes = {3, 5, 7, 11, 13, 17, 19, 23};
  for (int i = 0; i < 500; ++i) {
    const Rational r = s.next_rational();
    ASSERT_FALSE(r.is_zero());
    // k/q in lowest terms: the denominator divides one of the primes
    const long den = r.denominator().get_si();
    EXPECT_TRUE(den == 1 || primes.count(den) == 1) << r;
    EXPECT_LE(abs(r), Rational(40, 3));
  }
}

TEST(Sampler, SameSeedSameStream) {
  ParamSampler a(42);
  ParamSampler b(42);
  for (int i = 0; i < 20; ++i) {
    const auto da = a.next(4);
    const auto db = b.next(4);
    EXPECT_EQ(da.params, db.params);
    EXPECT_EQ(da.rho, db.rho);
    EXPECT_EQ(da.resamples, db.resamples);
  }
}

TEST(Sampler, DrawsAreGeneric) {
  ParamSampler s(7);
  for (int i = 0; i < 30; ++i) {
    const auto d = s.next(1 + i % 8);
    ASSERT_FALSE(d.degenerate);
    EXPECT_TRUE(static_cast<bool>(validate_params(d.params, d.rho)));
  }
}

TEST(Sampler, ExhaustedBudgetIsFlagged) {
  ParamSampler s(1);
  const auto d = s.next(3, Needs::kAll, 0);
  EXPECT_TRUE(d.degenerate);
}

}  // namespace
}  // namespace metaracah
