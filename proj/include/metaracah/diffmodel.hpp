#pragma once

#include <map>
#include <vector>

#include "metaracah/algebra.hpp"
#include "metaracah/eigenbases.hpp"

namespace metaracah {

/// Finite Laurent polynomial sum_i coeffs[i] x^(min_exp + i), trimmed so the
/// first and last stored coefficients are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, const Rational& coefficient = Rational(1));
  static LaurentPoly from_terms(const std::map<int, Rational>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  /// Exponent range; both 0 for the zero polynomial.
  int min_exp() const { return min_exp_; }
  int max_exp() const { return min_exp_ + static_cast<int>(coeffs_.size()) - 1; }
  const RationalVector& coeffs() const { return coeffs_; }
  Rational coefficient(int exponent) const;
  std::map<int, Rational> terms() const;

  LaurentPoly derivative() const;
  /// Keeps exponents in [lo, hi].
  LaurentPoly truncated(int lo, int hi) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const Rational& s, const LaurentPoly& a);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void trim();

  int min_exp_ = 0;
  RationalVector coeffs_;
};

/// Coefficient of x^-1 in f*g.
Rational residue_pair(const LaurentPoly& f, const LaurentPoly& g);

/// a2 d^2/dx^2 + a1 d/dx + a0.
struct DiffOp {
  LaurentPoly a2;
  LaurentPoly a1;
  LaurentPoly a0;
};

LaurentPoly apply_diffop(const DiffOp& op, const LaurentPoly& f);

struct ModelGenerators {
  DiffOp Z;
  DiffOp V;
  DiffOp X;
};

/// Differential realizations of Z, V, X and of their transposes.
ModelGenerators model_generators(const Params& p);
ModelGenerators model_transposed_generators(const Params& p);

/// g_n = (-1)^n (-N)_n x^n and g*_n = (-1)^n x^(-n-1) / (-N)_n.
LaurentPoly g_basis(int n, int N);
LaurentPoly g_dual(int n, int N);

/// <g*_l, f> for l = 0..N.
RationalVector g_coordinates(const LaurentPoly& f, int N);

/// Column n holds the g-coordinates of op(g_n).
RationalMatrix operator_matrix(const DiffOp& op, int N);

/// Model functions of a family. Dual families use finite sums in negative
/// powers of x.
std::vector<LaurentPoly> model_basis(BasisLabel label, const Params& p, const Rational& rho);

/// J_m = (a+1)_m / m! 2F1(-m, m+a+b+1; a+1; x) with a = N-2alpha-beta-2zeta-1,
/// b = 2alpha-beta-N-1.
LaurentPoly jacobi(int m, const Params& p);

/// Generator matrices on g_n, model functions against the abstract bases,
/// e_n proportional to J_n.
VerificationReport check_model(const Params& p, const Rational& rho);

/// Four residue Grams.
VerificationReport model_orthogonality(const Params& p, const Rational& rho);

/// Residue formulas for S_m(n), U_m(n) and the dual Hahn polynomials.
VerificationReport integral_representations(const Params& p, const Rational& rho);

/// Pairing adjointness of the transposed realizations, their matrices on
/// g*_n modulo the ghosts g*_-1 and g*_(N+1), and the ghost support.
VerificationReport model_transposes(const Params& p);

}  // namespace metaracah
