#include "metaracah/hyper.hpp"

#include <optional>
#include <string>

#include "metaracah/errors.hpp"

namespace metaracah {

Rational pochhammer(const Rational& a, int n) {
  if (n < 0) throw PreconditionViolated("pochhammer: negative length");
  mpq_class acc(1);
  mpq_class term = a.raw();
  for (int i = 0; i < n; ++i) {
    if (sgn(term) == 0) return Rational(0);
    acc *= term;
    term += 1;
  }
  return Rational(acc);
}

Rational multi_pochhammer(std::span<const Rational> as, int n) {
  Rational acc(1);
  for (const auto& a : as) {
    acc *= pochhammer(a, n);
    if (acc.is_zero()) break;
  }
  return acc;
}

Rational multi_pochhammer(std::initializer_list<Rational> as, int n) {
  return multi_pochhammer(std::span<const Rational>(as.begin(), as.size()), n);
}

namespace {

std::optional<long> nonpositive_integer(const Rational& r) {
  if (r.fits_long() && r.sign() <= 0) return -r.to_long();
  return std::nullopt;
}

}  // namespace

HypSeries::HypSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument)
    : upper_(std::move(upper)), lower_(std::move(lower)), argument_(std::move(argument)) {
  std::optional<long> k;
  for (const auto& u : upper_) {
    if (auto v = nonpositive_integer(u); v && (!k || *v < *k)) k = v;
  }
  if (!k) throw PreconditionViolated("hypergeometric series does not terminate");
  termination_ = static_cast<int>(*k);

  std::vector<std::string> bad;
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    // (l)_k for k <= K involves factors l, l+1, ..., l+K-1
    if (auto v = nonpositive_integer(lower_[j]); v && *v <= termination_ - 1) {
      bad.push_back("lower parameter " + std::to_string(j) + " = " + lower_[j].str() + " vanishes at k=" +
                    std::to_string(*v + 1));
    }
  }
  if (!bad.empty()) throw DegenerateParameters(std::move(bad));
}

Rational hyp_sum(const HypSeries& s) {
  const auto& up = s.upper();
  const auto& lo = s.lower();
  mpq_class term(1);
  mpq_class sum(1);
  const mpq_class& z = s.argument().raw();
  for (int k = 0; k < s.termination_index(); ++k) {
    mpq_class num(1);
    mpq_class den(k + 1);
    for (const auto& u : up) num *= u.raw() + k;
    for (const auto& l : lo) den *= l.raw() + k;
    if (sgn(num) == 0) break;
    term *= num * z / den;
    sum += term;
  }
  return Rational(sum);
}

Rational hyp_sum(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument) {
  return hyp_sum(HypSeries(std::move(upper), std::move(lower), std::move(argument)));
}

bool whipple_check(int n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   const Rational& e, const Rational& f) {
  if (n < 0) throw PreconditionViolated("whipple_check: negative n");
  if (Rational(1 - n) + a + b + c != d + e + f) {
    throw PreconditionViolated("whipple_check: series is not balanced");
  }
  const Rational minus_n(-n);
  const Rational lhs = hyp_sum({minus_n, a, b, c}, {d, e, f});
  const Rational prefactor_den = multi_pochhammer({e, f}, n);
  if (prefactor_den.is_zero()) throw DegenerateParameters({"(e, f)_n vanishes"});
  const Rational rhs = multi_pochhammer({e - a, f - a}, n) / prefactor_den *
                       hyp_sum({minus_n, a, d - b, d - c}, {d, a + 1 - n - e, a + 1 - n - f});
  return lhs == rhs;
}

}  // namespace metaracah
