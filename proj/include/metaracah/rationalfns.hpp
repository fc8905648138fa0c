#pragma once

#include <vector>

#include "metaracah/algebra.hpp"
#include "metaracah/eigenbases.hpp"

namespace metaracah {

/// 4F3(-m, -n, -a, m-2b-2c-1; -N, a-b-n, N-2a-b-2c; 1) at arbitrary (a, b, c).
Rational calU(int m, int n, const Rational& a, const Rational& b, const Rational& c, int N);

/// calU at (a, b, c) = (alpha, beta, zeta).
Rational calU(int m, int n, const Params& p);
/// calU(m, N-n) at (N - alpha - 1, beta + 2 zeta - 2, 2 - zeta).
Rational calU_tilde(int m, int n, const Params& p);

/// Closed forms of U_m(n) = <e_m|d*_n> and U~_m(n) = <e*_m|Z|d_n>.
Rational overlap_U_closed(int m, int n, const Params& p);
Rational overlap_Utilde_closed(int m, int n, const Params& p);

/// Dot-product overlaps; entry (m, n).
RationalMatrix overlap_U_grid(const Bases& b);
RationalMatrix overlap_Utilde_grid(const Bases& b, const RationalMatrix& Z);

/// Weights and norms of the two biorthogonality relations.
Rational rational_weight(int j, const Params& p);
Rational rational_weight_dual(int j, const Params& p);
Rational rational_norm(int n, const Params& p);
Rational rational_norm_dual(int n, const Params& p);

/// Identification of U and U~ against dot products, and both
/// biorthogonality relations.
VerificationReport check_rational_identification(const Params& p);
VerificationReport biorthogonality(const Params& p);

/// Residuals of the three-term relations; zero on the full grid.
Rational gevp_recurrence_residual(int m, int n, const Params& p);
Rational difference_residual(int m, int n, const Params& p);
Rational contiguity_residual(int m, int n, const Params& p);

/// Shifted parameters (alpha - 1, beta - 2, zeta + 2) of the contiguity relation.
Params contiguity_shift(const Params& p);

/// Dual Hahn polynomial 3F2(-k, -x, x + r1 + r2 + 1; r1 + 1, -N; 1) with
/// r1 = N - 2 alpha - beta - 2 zeta - 1, r2 = 2 alpha - beta - N - 1.
Rational dual_hahn(int k, int x, const Params& p);

/// calU as a finite combination of dual Hahn polynomials, and the closed
/// form of <e_m|z*_k>.
VerificationReport dual_hahn_expansion(const Params& p);

/// Residual grids, operator shift identities and the dual Hahn expansion.
VerificationReport check_rational_relations(const Params& p);

struct HahnLimitResult {
  std::vector<Rational> deviations;  // calU - target at each t
  bool monotone = false;              // |deviation| strictly decreasing
  bool last_below_threshold = false;  // |deviation at last t| < threshold
  bool improved = false;              // |last| < |first|
};

/// calU(m, n; t, t - aH, (N - 1 - bH + 2 aH)/2 - t, N) against
/// 3F2(-m, -n, m + bH - N; -N, aH - n; 1) at each t.
HahnLimitResult hahn_limit(int m, int n, const Rational& aH, const Rational& bH, int N,
                           const std::vector<Rational>& t_values, const Rational& threshold);
VerificationReport hahn_limit_check(int m, int n, const Rational& aH, const Rational& bH, int N,
                                    const std::vector<Rational>& t_values);

}  // namespace metaracah
