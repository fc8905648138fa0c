#include "metaracah/racahpoly.hpp"

#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"

namespace metaracah {

namespace {

void require_index(int m, int N, const char* what) {
  if (m < 0 || m > N) throw PreconditionViolated(std::string(what) + ": index out of range");
}

// closed-form S_m(n) feeding the recurrence and difference residuals
Rational s_value(int m, int n, const Params& p, const Rational& rho) { return overlap_S_closed(m, n, p, rho); }

}  // namespace

RacahParams racah_params(const Params& p, const Rational& rho) {
  return RacahParams{-p.beta - rho - 1, -p.beta + rho - 2 * p.zeta - 1, Rational(p.N) - 2 * p.alpha - rho, p.N};
}

Rational racah(int i, int x, const RacahParams& rp) {
  require_index(i, rp.N, "racah");
  require_index(x, rp.N, "racah");
  const auto& [a, b, g, N] = rp;
  return hyp_sum({Rational(-i), a + b + (i + 1), Rational(-x), g + (x - N)}, {a + 1, b + g + 1, Rational(-N)});
}

Rational racah_weight(int n, const RacahParams& rp) {
  const auto& [a, b, g, N] = rp;
  return multi_pochhammer({-b - g - n, a + 1}, n) /
         (factorial(n) * multi_pochhammer({Rational(n - N), -g - n}, N - n) *
          multi_pochhammer({g - a - N, -b - N, g + (n - N)}, n));
}

Rational racah_norm(int m, const RacahParams& rp) {
  const auto& [a, b, g, N] = rp;
  return sign_power(N) * pochhammer(-a - b - (N + m + 1), N - m) * pochhammer(a + b + (m + 1), m) /
         (multi_pochhammer({Rational(-N), g - a - N, -b - N}, N - m) *
          multi_pochhammer({a + 1, Rational(-N), b + g + 1}, m));
}

Rational overlap_S_closed(int m, int n, const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kRacah);
  const RacahParams rp = racah_params(p, rho);
  const auto& [a, b, g, N] = rp;
  const Rational prefactor = pochhammer(a + 1, n) * multi_pochhammer({Rational(-N), b + g + 1}, m) /
                             (factorial(n) * pochhammer(g + (n - N), n) * pochhammer(a + b + (m + 1), m));
  return prefactor * racah(m, n, rp);
}

Rational overlap_Stilde_closed(int m, int n, const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kRacah);
  const RacahParams rp = racah_params(p, rho);
  const auto& [a, b, g, N] = rp;
  const Rational prefactor =
      sign_power(N) * multi_pochhammer({Rational(-N), g - a - N, -b - N}, N - m) * pochhammer(a + 1, m) *
      pochhammer(-g - b - n, n) /
      (pochhammer(-a - b - (N + m + 1), N - m) * multi_pochhammer({Rational(n - N), -g - n}, N - n) *
       multi_pochhammer({g - a - N, -N - b}, n));
  return prefactor * racah(m, n, rp);
}

RationalMatrix overlap_S_grid(const Bases& b) {
  // <f*_n|e_m> at (m, n)
  return (b.f_star.vectors.transpose() * b.e.vectors).transpose();
}

RationalMatrix overlap_Stilde_grid(const Bases& b) {
  return (b.f.vectors.transpose() * b.e_star.vectors).transpose();
}

Rational racah_recurrence(int m, int n, const Params& p, const Rational& rho, const TridiagonalCoeffs& v_on_f) {
  require_index(m, p.N, "racah_recurrence");
  require_index(n, p.N, "racah_recurrence");
  const Rational bz = p.beta + p.zeta;
  const Rational mu = (Rational(m - 1) - bz) * (bz - m);
  // transposition duality: Vt f*_n = sum_k V^(f)_{n,k} f*_k
  Rational rhs = v_on_f.diag[n] * s_value(m, n, p, rho);
  if (n >= 1) rhs += v_on_f.sup[n - 1] * s_value(m, n - 1, p, rho);
  if (n < p.N) rhs += v_on_f.sub[n] * s_value(m, n + 1, p, rho);
  return mu * s_value(m, n, p, rho) - rhs;
}

Rational racah_recurrence(int m, int n, const Params& p, const Rational& rho) {
  return racah_recurrence(m, n, p, rho, coeffs_V_on_f(p, rho));
}

Rational racah_difference(int m, int n, const Params& p, const Rational& rho) {
  require_index(m, p.N, "racah_difference");
  require_index(n, p.N, "racah_difference");
  const auto zc = coeffs_Z_on_e(p);
  const auto xc = coeffs_X_on_e(p);
  const Rational nu = (Rational(n) - p.alpha - rho) * (p.alpha - n);
  // (X + rho Z) e_m = sum_k W_{k,m} e_k over k = m-1, m, m+1
  Rational rhs = (xc.diag[m] + rho * zc.diag[m]) * s_value(m, n, p, rho);
  if (m >= 1) rhs += (xc.sub[m - 1] + rho * zc.sub[m - 1]) * s_value(m - 1, n, p, rho);
  if (m < p.N) rhs += (xc.sup[m] + rho * zc.sup[m]) * s_value(m + 1, n, p, rho);
  return nu * s_value(m, n, p, rho) - rhs;
}

VerificationReport racah_orthogonality(const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kRacah);
  VerificationReport r;
  r.suite = "racah";
  const RacahParams rp = racah_params(p, rho);
  const int dim = p.dim();
  RationalMatrix R(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) R(m, n) = racah(m, n, rp);
  }
  RationalVector w(dim);
  RationalVector norms(dim);
  for (int n = 0; n < dim; ++n) {
    w[n] = racah_weight(n, rp);
    norms[n] = racah_norm(n, rp);
  }
  const RationalMatrix gram = R * RationalMatrix::diagonal(w) * R.transpose();
  r.add_equal("orth.weighted", "sum_n W_n R_k(n) R_m(n) = N_m delta_km", gram, RationalMatrix::diagonal(norms));

  // S_m(n) = A_n B_m R_m(n), so the Gram relation sum_n S~_k(n) S_m(n) =
  // delta holds iff S~_k(n) N_k A_n B_k = W_n R_k(n)
  const auto& [a, b, g, N] = rp;
  RationalMatrix lhs(dim, dim);
  RationalMatrix rhs(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const Rational bk = multi_pochhammer({Rational(-N), b + g + 1}, k) / pochhammer(a + b + (k + 1), k);
    for (int n = 0; n < dim; ++n) {
      const Rational an = pochhammer(a + 1, n) / (factorial(n) * pochhammer(g + (n - N), n));
      lhs(k, n) = overlap_Stilde_closed(k, n, p, rho) * norms[k] * an * bk;
      rhs(k, n) = w[n] * R(k, n);
    }
  }
  r.add_equal("orth.consistent", "weight and norm reproduce S~ from S", lhs, rhs);

  std::string signs;
  for (const auto& x : w) signs += x.sign() > 0 ? '+' : (x.sign() < 0 ? '-' : '0');
  r.checks.push_back(Check{"orth.weightSigns", "signs of W_n (recorded, not asserted)", CheckStatus::kPass, signs});
  return r;
}

VerificationReport check_racah(const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kRacah | Needs::kBasisE | Needs::kBasisF | Needs::kCoeffsE | Needs::kCoeffsF);
  VerificationReport r;
  r.suite = "racah";
  const Bases bs = build_all_bases(p, rho);
  const int dim = p.dim();
  RationalMatrix s_closed(dim, dim);
  RationalMatrix st_closed(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      s_closed(m, n) = overlap_S_closed(m, n, p, rho);
      st_closed(m, n) = overlap_Stilde_closed(m, n, p, rho);
    }
  }
  const RationalMatrix s_dot = overlap_S_grid(bs);
  const RationalMatrix st_dot = overlap_Stilde_grid(bs);
  r.add_equal("ident.S", "<f*_n|e_m> equals prefactor times R_m(n)", s_dot, s_closed);
  r.add_equal("ident.Stilde", "<f_n|e*_m> equals prefactor times R_m(n)", st_dot, st_closed);
  r.add_equal("orth.S", "sum_n S~_k(n) S_m(n) = delta_km", st_closed * s_closed.transpose(),
              RationalMatrix::identity(dim));
  r.append(racah_orthogonality(p, rho));

  const auto vf = coeffs_V_on_f(p, rho);
  RationalMatrix rec(dim, dim);
  RationalMatrix diff(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      rec(m, n) = racah_recurrence(m, n, p, rho, vf);
      diff(m, n) = racah_difference(m, n, p, rho);
    }
  }
  r.add_zero("recurrence", "mu_m S_m(n) equals the V^(f) three-term combination", rec);
  r.add_zero("difference", "nu_n S_m(n) equals the (X + rho Z)^(e) three-term combination", diff);
  return r;
}

}  // namespace metaracah
