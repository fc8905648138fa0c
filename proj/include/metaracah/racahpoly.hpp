#pragma once

#include "metaracah/algebra.hpp"
#include "metaracah/eigenbases.hpp"
#include "metaracah/matrixreps.hpp"

namespace metaracah {

/// Racah-polynomial parameters attached to (Params, rho):
///   alpha_hat = -beta - rho - 1, beta_hat = -beta + rho - 2 zeta - 1,
///   gamma_hat = N - 2 alpha - rho.
struct RacahParams {
  Rational alpha_hat;
  Rational beta_hat;
  Rational gamma_hat;
  int N = 1;
};

RacahParams racah_params(const Params& p, const Rational& rho);

/// R_i(x) = 4F3(-i, i+a+b+1, -x, x+g-N; a+1, b+g+1, -N; 1).
Rational racah(int i, int x, const RacahParams& rp);

/// Weight W_n and norm N_m with sum_n W_n R_k(n) R_m(n) = N_m delta_km.
Rational racah_weight(int n, const RacahParams& rp);
Rational racah_norm(int m, const RacahParams& rp);

/// Closed forms of S_m(n) = <f*_n|e_m> and S~_m(n) = <f_n|e*_m>.
Rational overlap_S_closed(int m, int n, const Params& p, const Rational& rho);
Rational overlap_Stilde_closed(int m, int n, const Params& p, const Rational& rho);

/// Dot-product overlaps from basis columns; entry (m, n) holds the value at
/// degree m and variable n.
RationalMatrix overlap_S_grid(const Bases& b);
RationalMatrix overlap_Stilde_grid(const Bases& b);

/// mu_m S_m(n) - sum_k V^(f)_{n,k} S_m(k); zero for every (m, n).
Rational racah_recurrence(int m, int n, const Params& p, const Rational& rho);
/// Same with caller-supplied V^(f) coefficients (fault injection).
Rational racah_recurrence(int m, int n, const Params& p, const Rational& rho, const TridiagonalCoeffs& v_on_f);

/// nu_n S_m(n) - sum_k (X + rho Z)^(e)_{k,m} S_k(n); zero for every (m, n).
Rational racah_difference(int m, int n, const Params& p, const Rational& rho);

/// Identification of S and S~, the Gram relation sum_n S~_k(n) S_m(n) =
/// delta, orthogonality with W_n and N_m, recurrence and difference
/// residuals over the full grid.
VerificationReport check_racah(const Params& p, const Rational& rho);

/// Orthogonality with the weight and norm; also records the sign pattern
/// of the weights in the detail of an informational check.
VerificationReport racah_orthogonality(const Params& p, const Rational& rho);

}  // namespace metaracah
