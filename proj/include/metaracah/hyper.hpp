#pragma once

#include <span>
#include <vector>

#include "metaracah/rational.hpp"

namespace metaracah {

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Rational pochhammer(const Rational& a, int n);

/// (a_1, ..., a_k)_n = (a_1)_n ... (a_k)_n.
Rational multi_pochhammer(std::span<const Rational> as, int n);
Rational multi_pochhammer(std::initializer_list<Rational> as, int n);

/// Terminating generalized hypergeometric series pFq(upper; lower; argument).
class HypSeries {
 public:
  /// Throws PreconditionViolated if no upper parameter is a nonpositive
  /// integer, DegenerateParameters if a lower Pochhammer vanishes within the
  /// summation range.
  HypSeries(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument = Rational(1));

  const std::vector<Rational>& upper() const { return upper_; }
  const std::vector<Rational>& lower() const { return lower_; }
  const Rational& argument() const { return argument_; }
  /// Smallest K with some upper parameter equal to -K.
  int termination_index() const { return termination_; }

 private:
  std::vector<Rational> upper_;
  std::vector<Rational> lower_;
  Rational argument_;
  int termination_ = 0;
};

/// Sum over k = 0..K of prod (upper)_k / prod (lower)_k * z^k / k!, evaluated
/// with the running term ratio.
Rational hyp_sum(const HypSeries& s);

/// Convenience: hyp_sum(HypSeries(upper, lower, z)).
Rational hyp_sum(std::vector<Rational> upper, std::vector<Rational> lower, Rational argument = Rational(1));

/// Whipple's transformation for a terminating balanced 4F3 at unit argument:
///   4F3(-n,a,b,c; d,e,f; 1)
///     = (e-a, f-a)_n / (e, f)_n * 4F3(-n, a, d-b, d-c; d, a+1-n-e, a+1-n-f; 1).
/// Both sides are evaluated exactly; returns whether they agree. Requires
/// 1 - n + a + b + c = d + e + f.
bool whipple_check(int n, const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   const Rational& e, const Rational& f);

}  // namespace metaracah
