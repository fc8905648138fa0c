#include "metaracah/rationalfns.hpp"

#include <stdexcept>

#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"

namespace metaracah {

namespace {

void require_index(int m, int N, const char* what) {
  if (m < 0 || m > N) throw PreconditionViolated(std::string(what) + ": index out of range");
}

// calU at (alpha, beta, zeta) with out-of-range indices mapped to a sentinel
// that must be multiplied by a vanishing coefficient
Rational u_or_boundary(int m, int n, const Params& p, const Rational& coefficient) {
  if (m >= 0 && m <= p.N && n >= 0 && n <= p.N) return calU(m, n, p);
  if (!coefficient.is_zero()) throw std::logic_error("boundary coefficient does not vanish");
  return Rational(0);
}

}  // namespace

Rational calU(int m, int n, const Rational& a, const Rational& b, const Rational& c, int N) {
  require_index(m, N, "calU");
  require_index(n, N, "calU");
  return hyp_sum({Rational(-m), Rational(-n), -a, Rational(m - 1) - 2 * b - 2 * c},
                 {Rational(-N), a - b - n, Rational(N) - 2 * a - b - 2 * c});
}

Rational calU(int m, int n, const Params& p) { return calU(m, n, p.alpha, p.beta, p.zeta, p.N); }

Rational calU_tilde(int m, int n, const Params& p) {
  require_index(n, p.N, "calU_tilde");
  return calU(m, p.N - n, Rational(p.N - 1) - p.alpha, p.beta + 2 * p.zeta - 2, 2 - p.zeta, p.N);
}

Rational overlap_U_closed(int m, int n, const Params& p) {
  require_generic(p, std::nullopt, Needs::kRational);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  const Rational prefactor = pochhammer(a - b - n, n) * multi_pochhammer({Rational(-N), N - 2 * a - b - 2 * z}, m) /
                             (factorial(n) * pochhammer(-a, n + 1) * pochhammer(Rational(m - 1) - 2 * b - 2 * z, m));
  return prefactor * calU(m, n, p);
}

Rational overlap_Utilde_closed(int m, int n, const Params& p) {
  require_generic(p, std::nullopt, Needs::kRational | Needs::kStandard | Needs::kBasisE);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  const Rational shift = 2 * a + b + 2 * z + (1 - 2 * N);
  const Rational num = (Rational(n) - a) * multi_pochhammer({a + b + 2 * z - N, 2 * a - b - N}, N - n) *
                       multi_pochhammer({Rational(m + 1), shift}, N - m);
  const Rational den = multi_pochhammer({Rational(n - N), Rational(n) - a, shift}, N - n) *
                       pochhammer(2 * b + 2 * z + (1 - N - m), N - m);
  return num / den * calU_tilde(m, n, p);
}

RationalMatrix overlap_U_grid(const Bases& b) {
  return b.e.vectors.transpose() * b.d_star.vectors;
}

RationalMatrix overlap_Utilde_grid(const Bases& b, const RationalMatrix& Z) {
  return b.e_star.vectors.transpose() * Z * b.d.vectors;
}

Rational rational_weight(int j, const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  return multi_pochhammer({Rational(-N), 1 - a + b, N - 2 * a - b - 2 * z}, j) *
         multi_pochhammer({2 * a - b - N, a + b + 2 * z - N}, N - j) /
         (factorial(j) * multi_pochhammer({-a, -2 * b - 2 * z}, N));
}

Rational rational_weight_dual(int j, const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  return pochhammer(Rational(-N), j) / factorial(j) * (Rational(2 * j - 1) - 2 * b - 2 * z) /
         pochhammer(Rational(j - 1) - 2 * b - 2 * z, N + 1) *
         multi_pochhammer({1 - 2 * a + b, 1 - a - b - 2 * z}, N) / pochhammer(-a, N);
}

Rational rational_norm(int n, const Params& p) {
  // (x)_{n-1} written as (x-1)_n / (x-1) so that n = 0 is covered
  const Rational x1 = -2 * p.beta - 2 * p.zeta - 1;
  return factorial(n) * pochhammer(Rational(p.N) - 2 * p.beta - 2 * p.zeta, n) * x1 /
         (pochhammer(Rational(-p.N), n) * (Rational(2 * n - 1) - 2 * p.beta - 2 * p.zeta) * pochhammer(x1, n));
}

Rational rational_norm_dual(int n, const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  return multi_pochhammer({Rational(1), 1 - 2 * a + b, 1 - a - b - 2 * z}, n) /
         multi_pochhammer({Rational(-p.N), 1 - a + b, p.N - 2 * a - b - 2 * z}, n);
}

VerificationReport check_rational_identification(const Params& p) {
  require_generic(p, std::nullopt, Needs::kRational | Needs::kStandard | Needs::kBasisD | Needs::kBasisE);
  VerificationReport r;
  r.suite = "rational";
  const Rational unused_rho(0);
  Bases bs;
  bs.d = build_basis(p, unused_rho, BasisLabel::kD);
  bs.d_star = build_basis(p, unused_rho, BasisLabel::kDStar);
  bs.e = build_basis(p, unused_rho, BasisLabel::kE);
  bs.e_star = build_basis(p, unused_rho, BasisLabel::kEStar);
  const auto Z = build_Z(p);
  const int dim = p.dim();
  RationalMatrix u(dim, dim);
  RationalMatrix ut(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      u(m, n) = overlap_U_closed(m, n, p);
      ut(m, n) = overlap_Utilde_closed(m, n, p);
    }
  }
  r.add_equal("ident.U", "<e_m|d*_n> equals prefactor times calU", overlap_U_grid(bs), u);
  r.add_equal("ident.Utilde", "<e*_m|Z|d_n> equals prefactor times calU~", overlap_Utilde_grid(bs, Z), ut);
  const auto I = RationalMatrix::identity(dim);
  r.add_equal("orth.Urows", "sum_n U~_k(n) U_m(n) = delta_km", ut * u.transpose(), I);
  r.add_equal("orth.Ucols", "sum_m U~_m(k) U_m(n) = delta_kn", ut.transpose() * u, I);
  return r;
}

VerificationReport biorthogonality(const Params& p) {
  require_generic(p, std::nullopt, Needs::kRational);
  VerificationReport r;
  r.suite = "rational";
  const int dim = p.dim();
  RationalMatrix u(dim, dim);
  RationalMatrix ut(dim, dim);
  RationalVector w(dim);
  RationalVector ws(dim);
  RationalVector h(dim);
  RationalVector hs(dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      u(m, n) = calU(m, n, p);
      ut(m, n) = calU_tilde(m, n, p);
    }
    w[m] = rational_weight(m, p);
    ws[m] = rational_weight_dual(m, p);
    h[m] = rational_norm(m, p);
    hs[m] = rational_norm_dual(m, p);
  }
  // (m, n) entry: sum_j W(j) calU~_m(j) calU_n(j)
  r.add_equal("biorth.first", "sum_j W(j) calU~_m(j) calU_n(j) = h_n delta",
              ut * RationalMatrix::diagonal(w) * u.transpose(), RationalMatrix::diagonal(h));
  r.add_equal("biorth.second", "sum_j W*(j) calU~_j(m) calU_j(n) = h*_n delta",
              ut.transpose() * RationalMatrix::diagonal(ws) * u, RationalMatrix::diagonal(hs));
  r.add("biorth.normalization", "h_0 = h*_0 = 1", h[0] == 1 && hs[0] == 1,
        "h_0 = " + h[0].str() + ", h*_0 = " + hs[0].str());
  return r;
}

Rational gevp_recurrence_residual(int m, int n, const Params& p) {
  require_index(m, p.N, "gevp_recurrence_residual");
  require_index(n, p.N, "gevp_recurrence_residual");
  require_generic(p, std::nullopt, Needs::kRational | Needs::kCoeffsE);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  const Rational s = Rational(2 * m) - 2 * b - 2 * z;
  const Rational A = Rational(m - N) * (Rational(m + N) - 2 * a - b - 2 * z) * (Rational(m - 1) - 2 * b - 2 * z) /
                     ((s - 1) * s);
  const Rational C = -Rational(m) * (Rational(m - N - 1) + 2 * a - b) * (Rational(m + N - 1) - 2 * b - 2 * z) /
                     ((s - 2) * (s - 1));
  const Rational up = u_or_boundary(m + 1, n, p, A);
  const Rational mid = calU(m, n, p);
  const Rational down = u_or_boundary(m - 1, n, p, C);
  const Rational shift = Rational(m) + a - b;
  const Rational lower = Rational(m - 1) - a - b - 2 * z;
  const Rational lhs = Rational(n) * (A * up - (A + C + a) * mid + C * down);
  const Rational rhs = shift * A * up - (shift * A - lower * C) * mid - lower * C * down;
  return lhs - rhs;
}

Rational difference_residual(int m, int n, const Params& p) {
  require_index(m, p.N, "difference_residual");
  require_index(n, p.N, "difference_residual");
  require_generic(p, std::nullopt, Needs::kRational);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  const Rational B = Rational(n - N) * (Rational(n + N) - 2 * a - b - 2 * z) * (Rational(n + 1) - a + b);
  const Rational D = Rational(n) * (Rational(n) - 2 * a + b) * (Rational(n - 1) - a - b - 2 * z);
  const Rational tail = n == 0 ? Rational(0) : Rational(n) * (Rational(n) - 2 * a + b) / (Rational(n) - a + b);
  const Rational up = u_or_boundary(m, n + 1, p, B);
  const Rational mid = calU(m, n, p);
  const Rational down = u_or_boundary(m, n - 1, p, D + tail);
  const Rational lhs = B * up - (B + D) * mid + D * down;
  const Rational rhs = Rational(m) * (2 * b + 2 * z + (1 - m)) * ((Rational(n) - a) * mid - tail * down);
  return lhs - rhs;
}

Params contiguity_shift(const Params& p) { return Params{p.N, p.alpha - 1, p.beta - 2, p.zeta + 2}; }

Rational contiguity_residual(int m, int n, const Params& p) {
  require_index(m, p.N, "contiguity_residual");
  require_index(n, p.N, "contiguity_residual");
  require_generic(p, std::nullopt, Needs::kRational | Needs::kStandard);
  const Params shifted = contiguity_shift(p);
  require_generic(shifted, std::nullopt, Needs::kRational);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  Rational rhs = (Rational(n) - a) * (Rational(n) - a + b) / (a * (a - b)) * calU(m, n, p);
  if (n > 0) rhs += Rational(n) * (Rational(n) - 2 * a + b) / (a * (b - a)) * calU(m, n - 1, p);
  return calU(m, n, shifted) - rhs;
}

Rational dual_hahn(int k, int x, const Params& p) {
  require_index(k, p.N, "dual_hahn");
  require_index(x, p.N, "dual_hahn");
  const Rational r1 = Rational(p.N - 1) - 2 * p.alpha - p.beta - 2 * p.zeta;
  const Rational r2 = 2 * p.alpha - p.beta - (p.N + 1);
  return hyp_sum({Rational(-k), Rational(-x), r1 + r2 + (x + 1)}, {r1 + 1, Rational(-p.N)});
}

VerificationReport dual_hahn_expansion(const Params& p) {
  require_generic(p, std::nullopt, Needs::kRational | Needs::kBasisE);
  VerificationReport r;
  r.suite = "rational";
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int dim = p.dim();
  RationalMatrix direct(dim, dim);
  RationalMatrix expanded(dim, dim);
  RationalMatrix ez_closed(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      direct(m, n) = calU(m, n, p);
      Rational sum(0);
      for (int k = 0; k <= n; ++k) {
        sum += pochhammer(-a, k) * pochhammer(2 * a - b - n, n - k) / (factorial(n - k) * factorial(k)) *
               dual_hahn(k, m, p);
      }
      expanded(m, n) = factorial(n) / pochhammer(a - b - n, n) * sum;
      ez_closed(m, n) = multi_pochhammer({Rational(-p.N), p.N - 2 * a - b - 2 * z}, m) /
                        (factorial(n) * pochhammer(Rational(m - 1) - 2 * b - 2 * z, m)) * dual_hahn(n, m, p);
    }
  }
  r.add_equal("dualHahn.expansion", "calU_m(n) as a dual Hahn combination", expanded, direct);
  const Rational unused_rho(0);
  const auto E = build_basis(p, unused_rho, BasisLabel::kE).vectors;
  const auto Zs = build_basis(p, unused_rho, BasisLabel::kZStar).vectors;
  r.add_equal("dualHahn.ez", "<e_m|z*_k> equals prefactor times dual Hahn", E.transpose() * Zs, ez_closed);
  return r;
}

VerificationReport check_rational_relations(const Params& p) {
  VerificationReport r;
  r.suite = "rational";
  const int dim = p.dim();
  RationalMatrix gevp(dim, dim);
  RationalMatrix diff(dim, dim);
  RationalMatrix contig(dim, dim);
  for (int m = 0; m < dim; ++m) {
    for (int n = 0; n < dim; ++n) {
      gevp(m, n) = gevp_recurrence_residual(m, n, p);
      diff(m, n) = difference_residual(m, n, p);
      contig(m, n) = contiguity_residual(m, n, p);
    }
  }
  r.add_zero("gevp", "generalized eigenvalue recurrence in m", gevp);
  r.add_zero("difference", "difference equation in n", diff);
  r.add_zero("contiguity", "contiguity relation under (alpha-1, beta-2, zeta+2)", contig);

  const auto g = build_generators(p);
  const auto s = build_generators(contiguity_shift(p));
  const auto I = RationalMatrix::identity(dim);
  r.add_equal("shift.X", "X - 2Z - I equals X at shifted parameters", g.X - Rational(2) * g.Z - I, s.X);
  r.add_equal("shift.Z", "Z + I equals Z at shifted parameters", g.Z + I, s.Z);
  r.add_equal("shift.V", "V is unchanged at shifted parameters", g.V, s.V);
  r.append(dual_hahn_expansion(p));
  return r;
}

HahnLimitResult hahn_limit(int m, int n, const Rational& aH, const Rational& bH, int N,
                           const std::vector<Rational>& t_values, const Rational& threshold) {
  if (t_values.empty()) throw PreconditionViolated("hahn_limit: no t values");
  const Rational target = hyp_sum({Rational(-m), Rational(-n), bH + (m - N)}, {Rational(-N), aH - n});
  HahnLimitResult out;
  for (const auto& t : t_values) {
    const Rational c = (Rational(N - 1) - bH + 2 * aH) / 2 - t;
    out.deviations.push_back(calU(m, n, t, t - aH, c, N) - target);
  }
  out.monotone = true;
  for (std::size_t i = 1; i < out.deviations.size(); ++i) {
    const Rational prev = abs(out.deviations[i - 1]);
    const Rational cur = abs(out.deviations[i]);
    if (!(cur < prev) && !(cur.is_zero() && prev.is_zero())) out.monotone = false;
  }
  const Rational last = abs(out.deviations.back());
  const Rational first = abs(out.deviations.front());
  out.last_below_threshold = last < threshold;
  out.improved = last < first || (last.is_zero() && first.is_zero());
  return out;
}

VerificationReport hahn_limit_check(int m, int n, const Rational& aH, const Rational& bH, int N,
                                    const std::vector<Rational>& t_values) {
  const Rational threshold(1, 1000);
  const auto res = hahn_limit(m, n, aH, bH, N, t_values, threshold);
  VerificationReport r;
  r.suite = "rational";
  std::string devs;
  for (const auto& d : res.deviations) devs += (devs.empty() ? "" : ", ") + d.to_decimal(12);
  r.add("hahn.threshold", "deviation at the largest t below 1/1000", res.last_below_threshold, devs);
  r.add("hahn.improves", "deviation at the largest t below the deviation at the smallest t", res.improved, devs);
  r.add("hahn.monotone", "deviation magnitude decreasing along t", res.monotone, devs);
  return r;
}

}  // namespace metaracah
