#include "metaracah/algebra.hpp"

#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"

namespace metaracah {

namespace {

using P = const Params&;
using R = const Rational&;

DenominatorExpr expr(std::string label, Needs needs, bool uses_rho,
                     std::function<Rational(const Params&, const Rational&, int)> f) {
  return DenominatorExpr{std::move(label), needs, uses_rho, std::move(f)};
}

std::vector<DenominatorExpr> make_registry() {
  std::vector<DenominatorExpr> r;
  // d and d* bases, Z d_n
  r.push_back(expr("(-alpha)_{n+1}", Needs::kBasisD | Needs::kRational | Needs::kStandard, false,
                   [](P p, R, int n) { return pochhammer(-p.alpha, n + 1); }));
  r.push_back(expr("(alpha-beta-n)_n", Needs::kBasisD | Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(p.alpha - p.beta - n, n); }));
  r.push_back(expr("(n-N-alpha+beta+1)_{N-n}", Needs::kBasisD, false,
                   [](P p, R, int n) { return pochhammer(Rational(n - p.N + 1) - p.alpha + p.beta, p.N - n); }));
  r.push_back(expr("(n-alpha+beta+1)", Needs::kBasisD, false,
                   [](P p, R, int n) { return Rational(n + 1) - p.alpha + p.beta; }));
  // e-basis coefficient denominators and the GEVP recurrence
  for (int k = -3; k <= 3; ++k) {
    r.push_back(expr("(2n-2beta-2zeta" + std::string(k < 0 ? "" : "+") + std::to_string(k) + ")", Needs::kCoeffsE,
                     false, [k](P p, R, int n) { return Rational(2 * n + k) - 2 * p.beta - 2 * p.zeta; }));
  }
  // f-basis coefficient denominators
  for (int k = -1; k <= 2; ++k) {
    r.push_back(expr("(2n-2alpha-rho" + std::string(k < 0 ? "" : "+") + std::to_string(k) + ")", Needs::kCoeffsF,
                     true, [k](P p, R rho, int n) { return Rational(2 * n + k) - 2 * p.alpha - rho; }));
  }
  r.push_back(expr("(n-alpha)", Needs::kStandard | Needs::kBasisD | Needs::kRational, false,
                   [](P p, R, int n) { return Rational(n) - p.alpha; }));
  r.push_back(expr("(n-alpha+1)", Needs::kStandard | Needs::kBasisD, false,
                   [](P p, R, int n) { return Rational(n + 1) - p.alpha; }));
  r.push_back(expr("(n-alpha+beta)", Needs::kStandard | Needs::kRational, false,
                   [](P p, R, int n) { return Rational(n) - p.alpha + p.beta; }));
  // e and e*
  r.push_back(expr("(n-2beta-2zeta-1)_n", Needs::kBasisE | Needs::kRacah | Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(Rational(n - 1) - 2 * p.beta - 2 * p.zeta, n); }));
  r.push_back(expr("(2beta+2zeta-N-n+1)_{N-n}", Needs::kBasisE | Needs::kRacah | Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(2 * p.beta + 2 * p.zeta + (1 - p.N - n), p.N - n); }));
  r.push_back(expr("(2alpha+beta+2zeta-2N+1)_{N-n}", Needs::kBasisE | Needs::kRational, false, [](P p, R, int n) {
    return pochhammer(2 * p.alpha + p.beta + 2 * p.zeta + (1 - 2 * p.N), p.N - n);
  }));
  r.push_back(expr("(N-2alpha-beta-2zeta)_n", Needs::kBasisE | Needs::kRacah | Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(Rational(p.N) - 2 * p.alpha - p.beta - 2 * p.zeta, n); }));
  // f and f*
  r.push_back(expr("(n-2alpha-rho)_n", Needs::kBasisF | Needs::kRacah, true,
                   [](P p, R rho, int n) { return pochhammer(Rational(n) - 2 * p.alpha - rho, n); }));
  r.push_back(expr("(2alpha+rho-N-n)_{N-n}", Needs::kBasisF | Needs::kRacah, true,
                   [](P p, R rho, int n) { return pochhammer(2 * p.alpha + rho - (p.N + n), p.N - n); }));
  r.push_back(expr("(-beta-rho)_n", Needs::kBasisF | Needs::kRacah, true,
                   [](P p, R rho, int n) { return pochhammer(-p.beta - rho, n); }));
  r.push_back(expr("(beta+rho-N+1)_{N-n}", Needs::kBasisF | Needs::kRacah, true,
                   [](P p, R rho, int n) { return pochhammer(p.beta + rho + (1 - p.N), p.N - n); }));
  // Racah overlaps, weights and norms
  r.push_back(expr("(beta-2alpha+1)_n", Needs::kRacah, false,
                   [](P p, R, int n) { return pochhammer(p.beta - 2 * p.alpha + 1, n); }));
  r.push_back(expr("(beta-rho+2zeta-N+1)_n", Needs::kRacah, true,
                   [](P p, R rho, int n) { return pochhammer(p.beta - rho + 2 * p.zeta + (1 - p.N), n); }));
  // rational functions, weights and norms
  r.push_back(expr("(j-1-2beta-2zeta)_{N+1}", Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(Rational(n - 1) - 2 * p.beta - 2 * p.zeta, p.N + 1); }));
  r.push_back(expr("(-2beta-2zeta)_N", Needs::kRational, false,
                   [](P p, R, int) { return pochhammer(-2 * p.beta - 2 * p.zeta, p.N); }));
  r.push_back(expr("(2alpha-beta-N)_n", Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(2 * p.alpha - p.beta - p.N, n); }));
  r.push_back(expr("(n-alpha-beta-2zeta+1)_{N-n}", Needs::kRational, false, [](P p, R, int n) {
    return pochhammer(Rational(n + 1) - p.alpha - p.beta - 2 * p.zeta, p.N - n);
  }));
  r.push_back(expr("(1-alpha+beta)_n", Needs::kRational, false,
                   [](P p, R, int n) { return pochhammer(Rational(1) - p.alpha + p.beta, n); }));
  return r;
}

RationalMatrix square(int n) { return RationalMatrix(n, n); }

}  // namespace

const std::vector<DenominatorExpr>& denominator_registry() {
  static const std::vector<DenominatorExpr> registry = make_registry();
  return registry;
}

std::vector<std::string> degenerate_expressions(const Params& p, const std::optional<Rational>& rho, Needs needs) {
  std::vector<std::string> bad;
  if (p.N < 1) {
    bad.emplace_back("N >= 1");
    return bad;
  }
  const Rational rho_value = rho.value_or(Rational(0));
  for (const auto& e : denominator_registry()) {
    if (!intersects(e.needs, needs)) continue;
    if (e.uses_rho && !rho) continue;
    for (int n = 0; n <= p.N; ++n) {
      if (e.eval(p, rho_value, n).is_zero()) {
        bad.push_back(e.label + " @ n=" + std::to_string(n));
        break;
      }
    }
  }
  return bad;
}

ValidationResult validate_params(const Params& p, const std::optional<Rational>& rho) {
  ValidationResult r;
  r.offenders = degenerate_expressions(p, rho, Needs::kAll);
  r.ok = r.offenders.empty();
  return r;
}

void require_generic(const Params& p, const std::optional<Rational>& rho, Needs needs) {
  auto bad = degenerate_expressions(p, rho, needs);
  if (!bad.empty()) throw DegenerateParameters(std::move(bad));
}

RationalMatrix build_Z(const Params& p) {
  RationalMatrix Z = square(p.dim());
  for (int n = 0; n <= p.N; ++n) {
    Z(n, n) = Rational(n) - p.alpha;
    if (n < p.N) Z(n + 1, n) = 1;
  }
  return Z;
}

RationalMatrix build_V(const Params& p) {
  RationalMatrix V = square(p.dim());
  const Rational bz = p.beta + p.zeta;
  for (int n = 0; n <= p.N; ++n) {
    V(n, n) = (Rational(n - 1) - bz) * (bz - n);
    if (n > 0) V(n - 1, n) = Rational(n * (p.N + 1 - n)) * (Rational(n - 1 + p.N) - 2 * p.alpha - p.beta - 2 * p.zeta);
  }
  return V;
}

RationalMatrix build_X(const Params& p) {
  RationalMatrix X = square(p.dim());
  for (int n = 0; n <= p.N; ++n) {
    const Rational s = Rational(n) - p.alpha;
    X(n, n) = -(s * s);
    if (n < p.N) X(n + 1, n) = -(Rational(n) - p.beta);
  }
  return X;
}

Generators build_generators(const Params& p) { return Generators{build_Z(p), build_V(p), build_X(p)}; }

Transposes build_transposes(const Params& p) {
  const int d = p.dim();
  Transposes t{square(d), square(d), square(d)};
  const Rational bz = p.beta + p.zeta;
  for (int n = 0; n <= p.N; ++n) {
    const Rational s = Rational(n) - p.alpha;
    t.Zt(n, n) = s;
    t.Xt(n, n) = -(s * s);
    t.Vt(n, n) = (Rational(n - 1) - bz) * (bz - n);
    if (n > 0) {
      t.Zt(n - 1, n) = 1;
      t.Xt(n - 1, n) = -(Rational(n - 1) - p.beta);
    }
    if (n < p.N) {
      t.Vt(n + 1, n) = Rational((n + 1) * (p.N - n)) * (Rational(n + p.N) - 2 * p.alpha - p.beta - 2 * p.zeta);
    }
  }
  return t;
}

CentralParams central_params(const Params& p) {
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const Rational N(p.N);
  CentralParams c;
  c.xi = (b + 1) * (b + 2 * z - N) * (N - 2 * a) + 2 * a * z * (a + 1);
  c.eta = (N - z) * (N - 2 * a - b - z) + (b + z) * (b + 1) + 2 * a * a;
  return c;
}

RationalMatrix casimir(const Generators& g, const Rational& zeta, const CentralParams& c) {
  const auto& [Z, V, X] = g;
  return Rational(2) * (Z * V * Z) + anticommutator(X, V) + (2 * zeta) * anticommutator(X, Z) +
         Rational(2) * (X * X) + (2 * zeta * zeta) * (Z * Z) + (2 * c.eta) * X + V + (2 * c.xi) * Z;
}

RationalMatrix casimir(const Params& p) { return casimir(build_generators(p), p.zeta, central_params(p)); }

VerificationReport check_defining_relations(const Generators& g, const Rational& zeta, const CentralParams& c) {
  const auto& [Z, V, X] = g;
  const auto I = RationalMatrix::identity(Z.rows());
  VerificationReport r;
  r.suite = "algebra";
  r.add_zero("relation.ZX", "[Z,X] = Z^2 + X", commutator(Z, X) - Z * Z - X);
  r.add_zero("relation.XV", "[X,V] = {V,Z} + 2 zeta X + 2 zeta^2 Z + xi",
             commutator(X, V) - anticommutator(V, Z) - (2 * zeta) * X - (2 * zeta * zeta) * Z - c.xi * I);
  r.add_zero("relation.VZ", "[V,Z] = V + 2X + 2 zeta Z + eta",
             commutator(V, Z) - V - Rational(2) * X - (2 * zeta) * Z - c.eta * I);
  return r;
}

VerificationReport check_defining_relations(const Params& p) {
  return check_defining_relations(build_generators(p), p.zeta, central_params(p));
}

VerificationReport check_subalgebras(const Params& p, const Rational& rho) {
  const auto g = build_generators(p);
  const auto& [Z, V, X] = g;
  const auto c = central_params(p);
  const auto I = RationalMatrix::identity(p.dim());
  const Rational& z = p.zeta;
  VerificationReport r;
  r.suite = "algebra";

  // shifted generators
  const RationalMatrix Zb = Z - (z / 2) * I;
  const RationalMatrix Xb = X + z * Z - (z * z / 4) * I;
  const RationalMatrix& Vb = V;
  const Rational xib = c.xi - c.eta * z;
  const Rational etab = c.eta + z * z / 2;
  r.add_zero("shifted.ZX", "[Zb,Xb] = Zb^2 + Xb", commutator(Zb, Xb) - Zb * Zb - Xb);
  r.add_zero("shifted.XV", "[Xb,Vb] = {Vb,Zb} + xib", commutator(Xb, Vb) - anticommutator(Vb, Zb) - xib * I);
  r.add_zero("shifted.VZ", "[Vb,Zb] = Vb + 2Xb + etab", commutator(Vb, Zb) - Vb - Rational(2) * Xb - etab * I);

  // Hahn algebra presentation in Vb, Zb only
  const RationalMatrix VZb = commutator(Vb, Zb);
  r.add_zero("hahn.first", "[[Vb,Zb],Vb] = 2{Vb,Zb} + 2 xib",
             commutator(VZb, Vb) - Rational(2) * anticommutator(Vb, Zb) - (2 * xib) * I);
  r.add_zero("hahn.second", "[Zb,[Vb,Zb]] = 2 Zb^2 - Vb - etab",
             commutator(Zb, VZb) - Rational(2) * (Zb * Zb) + Vb + etab * I);

  // Racah algebra generated by W = X + rho Z, V and the Casimir
  const RationalMatrix W = X + rho * Z;
  const RationalMatrix C = casimir(g, z, c);
  const Rational lin = c.eta + z * (z - rho);
  const RationalMatrix WV = commutator(W, V);
  r.add_zero("racah.first", "[V,[W,V]] = 2{W,V} + 2V^2 + 2(eta+zeta(zeta-rho))V + const",
             commutator(V, WV) - Rational(2) * anticommutator(W, V) - Rational(2) * (V * V) - (2 * lin) * V -
                 (2 * (rho * c.xi + z * (z * c.eta - c.xi - c.eta * rho))) * I);
  r.add_zero("racah.second", "[[W,V],W] = 2{W,V} + 2W^2 + 2(eta+zeta(zeta-rho))W + (1-rho^2)V - C + const",
             commutator(WV, W) - Rational(2) * anticommutator(W, V) - Rational(2) * (W * W) - (2 * lin) * W -
                 (1 - rho * rho) * V + C - (rho * (c.xi - rho * c.eta)) * I);

  // Borel subalgebra
  const RationalMatrix E = X + Z * Z;
  r.add_zero("borel", "[H,E] = E with E = X + Z^2, H = Z", commutator(Z, E) - E);
  return r;
}

RationalMatrix heun_operator(const Params& p, const Rational& h0, const Rational& h1, const Rational& h2,
                             const Rational& h3, const Rational& h4) {
  const auto Z = build_Z(p);
  const auto V = build_V(p);
  return h0 * RationalMatrix::identity(p.dim()) + h1 * Z + h2 * V + h3 * (Z * V) + h4 * (V * Z);
}

bool is_lower_bidiagonal(const RationalMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (r != c && r != c + 1 && !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

HeunResult heun_bidiagonal(const Params& p, const Rational& h0, const Rational& h1, const Rational& h4) {
  const auto Z = build_Z(p);
  const auto V = build_V(p);
  HeunResult out;
  out.H = h0 * RationalMatrix::identity(p.dim()) + h1 * Z - h4 * V + h4 * commutator(V, Z);
  out.bidiagonal = is_lower_bidiagonal(out.H);
  return out;
}

Rational characteristic_value(const RationalMatrix& m, const Rational& lambda) {
  // det(m - lambda I) by exact elimination
  RationalMatrix a = m - lambda * RationalMatrix::identity(m.rows());
  const int n = a.rows();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!a(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      for (int k = 0; k < n; ++k) std::swap(a(pivot, k), a(c, k));
      det = -det;
    }
    det *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      const Rational f = a(r, c) / a(c, c);
      for (int k = c; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return det;
}

}  // namespace metaracah
