#include "metaracah/matrixreps.hpp"

#include <functional>

#include "metaracah/eigenbases.hpp"
#include "metaracah/errors.hpp"

namespace metaracah {

namespace {

using Band = std::function<Rational(int n)>;

// sup(n) for n < N, diag(n) for all n, sub(n) = O_{n-1,n} for n >= 1
TridiagonalCoeffs bands(int N, const Band& sup, const Band& diag, const Band& sub) {
  TridiagonalCoeffs c;
  for (int n = 0; n <= N; ++n) {
    c.diag.push_back(diag ? diag(n) : Rational(0));
    if (n < N) c.sup.push_back(sup ? sup(n) : Rational(0));
    if (n >= 1) c.sub.push_back(sub ? sub(n) : Rational(0));
  }
  return c;
}

std::string entry_text(int r, int c, const Rational& v) {
  return "entry (" + std::to_string(r) + "," + std::to_string(c) + ") = " + v.str();
}

}  // namespace

RationalMatrix TridiagonalCoeffs::assemble() const {
  const int dim = static_cast<int>(diag.size());
  RationalMatrix m(dim, dim);
  for (int n = 0; n < dim; ++n) {
    m(n, n) = diag[n];
    if (n + 1 < dim) {
      m(n + 1, n) = sup[n];
      m(n, n + 1) = sub[n];
    }
  }
  return m;
}

TridiagonalCoeffs TridiagonalCoeffs::from_matrix(const RationalMatrix& m) {
  TridiagonalCoeffs c;
  for (int n = 0; n < m.rows(); ++n) {
    c.diag.push_back(m(n, n));
    if (n + 1 < m.rows()) {
      c.sup.push_back(m(n + 1, n));
      c.sub.push_back(m(n, n + 1));
    }
  }
  return c;
}

TridiagonalCoeffs coeffs_Z_on_e(const Params& p) {
  require_generic(p, std::nullopt, Needs::kCoeffsE);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  return bands(
      N, [](int) { return Rational(1); },
      [&](int n) {
        const Rational s = Rational(2 * n) - 2 * b - 2 * z;
        return Rational(n) * (Rational(n + N - 1) - 2 * b - 2 * z) * (Rational(n - N - 1) + 2 * a - b) /
                   ((s - 2) * (s - 1)) -
               Rational(n - N) * (Rational(n - 1) - 2 * b - 2 * z) * (Rational(n + N) - 2 * a - b - 2 * z) /
                   ((s - 1) * s) -
               a;
      },
      [&](int n) {
        const Rational s = Rational(2 * n) - 2 * b - 2 * z;
        return Rational(n * (N + 1 - n)) * (Rational(n - N - 1) + 2 * a - b) * (Rational(n - 2) - 2 * b - 2 * z) *
               (Rational(n + N - 1) - 2 * b - 2 * z) * (Rational(n + N - 1) - 2 * a - b - 2 * z) /
               ((s - 3) * (s - 2) * (s - 2) * (s - 1));
      });
}

TridiagonalCoeffs coeffs_X_on_e(const Params& p) {
  const auto zc = coeffs_Z_on_e(p);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  return bands(
      N, [&](int n) { return b - n; },
      [&](int n) {
        const Rational s = Rational(2 * n) - 2 * b - 2 * z;
        return Rational(n) * (Rational(n + N - 1) - 2 * b - 2 * z) * (Rational(n - N - 1) + 2 * a - b) *
                   (Rational(n - 1) - b - 2 * z) / ((s - 2) * (s - 1)) +
               Rational(n - N) * (Rational(n - 1) - 2 * b - 2 * z) * (Rational(n + N) - 2 * a - b - 2 * z) *
                   (Rational(n) - b) / ((s - 1) * s) -
               a * a;
      },
      [&](int n) { return (Rational(n - 1) - b - 2 * z) * zc.sub[n - 1]; });
}

TridiagonalCoeffs coeffs_V_on_f(const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kCoeffsF);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  return bands(
      N,
      [&](int n) {
        const Rational s = Rational(2 * n) - 2 * a - rho;
        return -(Rational(n + 1) - 2 * a + b) * (Rational(n) - 2 * a - rho) * (Rational(n + N + 1) - 2 * a - rho) *
               (Rational(n - N + 1) + b - rho + 2 * z) * (Rational(n) - b - rho) / (s * (s + 1) * (s + 1) * (s + 2));
      },
      [&](int n) {
        const Rational s = Rational(2 * n) - 2 * a - rho;
        return Rational(n) * (Rational(n) - 2 * a + b) * (Rational(n - N) + b - rho + 2 * z) *
                   (Rational(n + N) - 2 * a - rho) / ((s - 1) * s) +
               Rational(n - N) * (Rational(n) - 2 * a - rho) * (Rational(n) - b - rho) *
                   (Rational(n + N) - 2 * a - b - 2 * z) / (s * (s + 1)) -
               (b + z + 1) * (b + z);
      },
      [&](int n) { return -Rational(n * (n - N - 1)) * (Rational(n + N - 1) - 2 * a - b - 2 * z); });
}

DCoeffs coeffs_on_d(const Params& p) {
  require_generic(p, std::nullopt, Needs::kStandard);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  DCoeffs c;
  c.Z = bands(
      N, [&](int n) { return (Rational(n + 1) - 2 * a + b) / (Rational(n + 1) - a); },
      [&](int n) { return Rational(n) - a; }, nullptr);
  c.X = bands(
      N, [&](int n) { return -(Rational(n) - a) * (Rational(n + 1) - 2 * a + b) / (Rational(n + 1) - a); },
      [&](int n) { return -(Rational(n) - a) * (Rational(n) - a); }, nullptr);
  c.VZ = bands(
      N,
      [&](int n) {
        return -(Rational(n + 1) - 2 * a + b) * (Rational(n) - a - z) * (Rational(n + 1) - a - z) / (Rational(n + 1) - a);
      },
      [&](int n) {
        return Rational(N) * (Rational(N) - b - 2 * a - 2 * z) * (Rational(n + 1) - a + b) +
               (b + z) * (b + z + 1) * (a + n) - Rational(2 * n) * (Rational(n) - 2 * a - z) * (Rational(n) - a - z);
      },
      [&](int n) { return -Rational(n * (n - N - 1)) * (Rational(n) - a) * (Rational(n + N - 1) - 2 * a - b - 2 * z); });
  return c;
}

DCoeffs coeffs_on_dstar(const Params& p) {
  const DCoeffs d = coeffs_on_d(p);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  DCoeffs c;
  c.Z = bands(
      N, nullptr, [&](int n) { return Rational(n) - a; },
      [&](int n) { return (Rational(n) - 2 * a + b) / (Rational(n) - a); });
  c.X = bands(
      N, nullptr, [&](int n) { return -(Rational(n) - a) * (Rational(n) - a); },
      [&](int n) { return 2 * a - b - n; });
  c.VZ = bands(
      N,
      [&](int n) { return -(Rational(n + 1) - a) * Rational((n - N) * (n + 1)) * (Rational(n + N) - 2 * a - b - 2 * z); },
      [&](int n) { return d.VZ.diag[n]; },
      [&](int n) {
        return -(Rational(n - 1) - a - z) * (Rational(n) - a - z) * (Rational(n) - 2 * a + b) / (Rational(n) - a);
      });
  return c;
}

ZCoeffs coeffs_on_z(const Params& p) {
  require_generic(p, std::nullopt, Needs::kStandard);
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const int N = p.N;
  const Rational top = Rational(N) - b - z;
  ZCoeffs c;
  c.V = bands(
      N, [&](int n) { return -(Rational(n + 1) - 2 * a + b); },
      [&](int n) {
        return (Rational(n + 1) - 2 * a + b) * (n - N) + Rational(n) * (Rational(n + N - 1) - 2 * a - b - 2 * z) -
               top * (top - 1);
      },
      [&](int n) { return -Rational(n * (n - N - 1)) * (Rational(n + N - 1) - 2 * a - b - 2 * z); });
  c.X = bands(
      N, [&](int n) { return Rational(n + 1) - 2 * a + b; },
      [&](int n) { return -(Rational(n) - a) * (Rational(n) - a); }, nullptr);
  c.Vtilde = bands(
      N, [&](int n) { return (Rational(n + 1) - 2 * a + b) / (Rational(n) - a); },
      [&](int n) { return a - n; }, nullptr);
  return c;
}

std::string to_string(Pattern kind) {
  switch (kind) {
    case Pattern::kDiagonal: return "diagonal";
    case Pattern::kLowerBidiagonal: return "lowerBidiagonal";
    case Pattern::kUpperBidiagonal: return "upperBidiagonal";
    case Pattern::kTridiagonal: return "tridiagonal";
    case Pattern::kIrreducibleTridiagonal: return "irreducibleTridiagonal";
    case Pattern::kIrreducibleLowerBidiagonal: return "irreducibleLowerBidiagonal";
  }
  return "?";
}

std::optional<std::string> pattern_violation(const RationalMatrix& m, Pattern kind) {
  const bool lower = kind != Pattern::kDiagonal && kind != Pattern::kUpperBidiagonal;
  const bool upper = kind == Pattern::kUpperBidiagonal || kind == Pattern::kTridiagonal ||
                     kind == Pattern::kIrreducibleTridiagonal;
  const bool irreducible =
      kind == Pattern::kIrreducibleTridiagonal || kind == Pattern::kIrreducibleLowerBidiagonal;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      const bool allowed = r == c || (lower && r == c + 1) || (upper && r + 1 == c);
      if (!allowed && !m(r, c).is_zero()) return "fill at " + entry_text(r, c, m(r, c));
      if (allowed && r != c && irreducible && m(r, c).is_zero()) {
        return "vanishing off-diagonal entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
      }
    }
  }
  return std::nullopt;
}

RationalMatrix conjugate(const RationalMatrix& dual, const RationalMatrix& op, const RationalMatrix& basis) {
  return dual.transpose() * op * basis;
}

VerificationReport check_coefficients(const Params& p, const Rational& rho) {
  VerificationReport r;
  r.suite = "matrixreps";
  const auto g = build_generators(p);
  const auto t = build_transposes(p);
  const Bases bs = build_all_bases(p, rho);
  const RationalMatrix& E = bs.e.vectors;
  const RationalMatrix& Es = bs.e_star.vectors;
  const RationalMatrix& F = bs.f.vectors;
  const RationalMatrix& Fs = bs.f_star.vectors;
  const RationalMatrix& Zb = bs.z.vectors;
  const RationalMatrix& Zs = bs.z_star.vectors;
  const RationalMatrix ZD = g.Z * bs.d.vectors;
  const RationalMatrix& Ds = bs.d_star.vectors;

  r.add_equal("e.Z", "Z in the e basis", coeffs_Z_on_e(p).assemble(), conjugate(Es, g.Z, E));
  r.add_equal("e.X", "X in the e basis", coeffs_X_on_e(p).assemble(), conjugate(Es, g.X, E));
  r.add_equal("f.V", "V in the f basis", coeffs_V_on_f(p, rho).assemble(), conjugate(Fs, g.V, F));

  const DCoeffs d = coeffs_on_d(p);
  r.add_equal("d.Z", "Z in the Z d_n basis", d.Z.assemble(), conjugate(Ds, g.Z, ZD));
  r.add_equal("d.X", "X in the d basis paired through Z", d.X.assemble(), conjugate(Ds, g.Z * g.X, bs.d.vectors));
  r.add_equal("d.VZ", "VZ in the Z d_n basis", d.VZ.assemble(), conjugate(Ds, g.Z * g.V * g.Z, bs.d.vectors));
  const DCoeffs ds = coeffs_on_dstar(p);
  r.add_equal("dStar.Zt", "Zt in the d* basis", ds.Z.assemble(), conjugate(ZD, t.Zt, Ds));
  r.add_equal("dStar.Xt", "Xt in the d* basis", ds.X.assemble(), conjugate(ZD, t.Xt, Ds));
  r.add_equal("dStar.VtZt", "Vt Zt in the d* basis", ds.VZ.assemble(), conjugate(ZD, t.Vt * t.Zt, Ds));
  r.add("dStar.sharedDiagonal", "diagonal of Vt Zt on d* equals diagonal of VZ on d", ds.VZ.diag == d.VZ.diag,
        "diagonals differ");

  const ZCoeffs zc = coeffs_on_z(p);
  r.add_equal("z.V", "V in the z basis", zc.V.assemble(), conjugate(Zs, g.V, Zb));
  r.add_equal("z.X", "X in the z basis", zc.X.assemble(), conjugate(Zs, g.X, Zb));
  r.add_equal("z.Vtilde", "X Z^-1 in the z basis", zc.Vtilde.assemble(), conjugate(Zs, g.X * g.Z.inverse(), Zb));
  bool negated = true;
  for (std::size_t n = 0; n < zc.X.sup.size(); ++n) negated = negated && zc.X.sup[n] == -zc.V.sup[n];
  r.add("z.XsupNegV", "X super entry in the z basis is minus the V super entry", negated, "entries differ");

  // transposition duality: O^T in b* equals the transpose of O in b
  struct Pair {
    const char* name;
    const RationalMatrix* basis;
    const RationalMatrix* dual;
  };
  const Pair pairs[] = {{"e", &E, &Es}, {"f", &F, &Fs}, {"z", &Zb, &Zs}};
  const std::pair<const char*, std::pair<const RationalMatrix*, const RationalMatrix*>> ops[] = {
      {"Z", {&g.Z, &t.Zt}}, {"V", {&g.V, &t.Vt}}, {"X", {&g.X, &t.Xt}}};
  for (const auto& pr : pairs) {
    for (const auto& [oname, mats] : ops) {
      r.add_equal(std::string("duality.") + pr.name + "." + oname,
                  std::string(oname) + "t in the " + pr.name + "* basis is the transpose of " + oname + " in " +
                      pr.name,
                  conjugate(*pr.basis, *mats.second, *pr.dual), conjugate(*pr.dual, *mats.first, *pr.basis).transpose());
    }
  }
  return r;
}

VerificationReport verify_leonard_trio(const Params& p) {
  require_generic(p, std::nullopt, Needs::kStandard | Needs::kBasisD | Needs::kBasisE);
  VerificationReport r;
  r.suite = "matrixreps";
  const auto g = build_generators(p);
  const RationalMatrix Vt = g.X * g.Z.inverse();
  const Rational unused_rho(0);
  const auto E = build_basis(p, unused_rho, BasisLabel::kE).vectors;
  const auto Es = build_basis(p, unused_rho, BasisLabel::kEStar).vectors;
  const auto D = build_basis(p, unused_rho, BasisLabel::kD).vectors;
  const auto Ds = build_basis(p, unused_rho, BasisLabel::kDStar).vectors;
  const auto Zb = build_basis(p, unused_rho, BasisLabel::kZ).vectors;
  const auto Zs = build_basis(p, unused_rho, BasisLabel::kZStar).vectors;
  const RationalMatrix Et = g.Z * D;  // e-tilde basis

  auto expect = [&r](const std::string& id, const std::string& ref, const RationalMatrix& m, Pattern kind) {
    const auto bad = pattern_violation(m, kind);
    r.add(id, ref + " is " + to_string(kind), !bad, bad.value_or(""));
  };

  expect("trio.i.V", "V in the e basis", conjugate(Es, g.V, E), Pattern::kDiagonal);
  expect("trio.i.VtildeZ", "X = (X Z^-1) Z in the e basis", conjugate(Es, Vt * g.Z, E), Pattern::kTridiagonal);
  expect("trio.i.Z", "Z in the e basis", conjugate(Es, g.Z, E), Pattern::kIrreducibleTridiagonal);

  const RationalMatrix vt_et = conjugate(Ds, Vt, Et);
  expect("trio.ii.Vtilde", "X Z^-1 in the Z d_n basis", vt_et, Pattern::kDiagonal);
  RationalVector lambda;
  for (int n = 0; n <= p.N; ++n) lambda.push_back(p.alpha - n);
  r.add_equal("trio.ii.eigenvalue", "X Z^-1 Z d_n = (alpha - n) Z d_n", vt_et, RationalMatrix::diagonal(lambda));
  expect("trio.ii.ZV", "ZV in the Z d_n basis", conjugate(Ds, g.Z * g.V, Et), Pattern::kTridiagonal);
  expect("trio.ii.Z", "Z in the Z d_n basis", conjugate(Ds, g.Z, Et), Pattern::kIrreducibleLowerBidiagonal);
  r.add_equal("trio.ii.ZVcoeffs", "ZV on Z d_n has the VZ coefficients of d", conjugate(Ds, g.Z * g.V, Et),
              coeffs_on_d(p).VZ.assemble());

  expect("trio.iii.Z", "Z in the z basis", conjugate(Zs, g.Z, Zb), Pattern::kDiagonal);
  expect("trio.iii.Vtilde", "X Z^-1 in the z basis", conjugate(Zs, Vt, Zb), Pattern::kIrreducibleLowerBidiagonal);
  expect("trio.iii.V", "V in the z basis", conjugate(Zs, g.V, Zb), Pattern::kIrreducibleTridiagonal);
  return r;
}

}  // namespace metaracah
