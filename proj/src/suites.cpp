#include "metaracah/suites.hpp"

#include <array>
#include <string>

#include "metaracah/diffmodel.hpp"
#include "metaracah/eigenbases.hpp"
#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"
#include "metaracah/matrixreps.hpp"
#include "metaracah/racahpoly.hpp"
#include "metaracah/rationalfns.hpp"

namespace metaracah {

namespace {

VerificationReport algebra_suite(const Params& p, const Rational& rho) {
  VerificationReport r;
  const auto g = build_generators(p);
  r.append(check_defining_relations(p));

  const RationalMatrix C = casimir(p);
  r.add_zero("casimir.X", "[C, X] = 0", commutator(C, g.X));
  r.add_zero("casimir.V", "[C, V] = 0", commutator(C, g.V));
  r.add_zero("casimir.Z", "[C, Z] = 0", commutator(C, g.Z));
  r.add_equal("casimir.scalar", "C is a multiple of the identity on this irreducible module", C,
              C(0, 0) * RationalMatrix::identity(p.dim()));

  const auto t = build_transposes(p);
  r.add_equal("transpose.Z", "explicit Zt action equals the transpose of Z", t.Zt, g.Z.transpose());
  r.add_equal("transpose.V", "explicit Vt action equals the transpose of V", t.Vt, g.V.transpose());
  r.add_equal("transpose.X", "explicit Xt action equals the transpose of X", t.Xt, g.X.transpose());

  r.append(check_subalgebras(p, rho));

  bool heun_ok = true;
  std::string heun_detail;
  for (int i = 0; i < 24; ++i) {
    const Rational h0(i - 11, 3);
    const Rational h1(2 * i + 1, 5);
    const Rational h4(i % 7 - 3, 7 + i);
    if (!heun_bidiagonal(p, h0, h1, h4).bidiagonal) {
      heun_ok = false;
      heun_detail = "h = (" + h0.str() + ", " + h1.str() + ", " + h4.str() + ")";
    }
  }
  r.add("heun.bidiagonal", "h0 I + h1 Z - h4 V + h4 [V,Z] acts bidiagonally", heun_ok, heun_detail);
  r.add("heun.negativeControl", "h0 I + h1 Z + h2 V alone is not bidiagonal",
        !is_lower_bidiagonal(heun_operator(p, Rational(1, 2), Rational(1, 3), Rational(1, 5), Rational(0), Rational(0))),
        "pattern unexpectedly bidiagonal");

  const RationalMatrix W = g.X + rho * g.Z;
  bool eig_ok = true;
  std::string eig_detail;
  for (int n = 0; n <= p.N; ++n) {
    const Rational lambda = (Rational(n) - p.alpha - rho) * (p.alpha - n);
    if (!characteristic_value(W, lambda).is_zero()) {
      eig_ok = false;
      eig_detail = "n=" + std::to_string(n);
    }
  }
  r.add("spectrum.W", "det(X + rho Z - nu_n) = 0 for every n", eig_ok, eig_detail);
  return r;
}

VerificationReport racah_suite(const Params& p, const Rational& rho) {
  VerificationReport r = check_racah(p, rho);
  // balanced 4F3 transformation fixtures
  const struct {
    int n;
    Rational a, b, c, d, e;
  } fixtures[] = {{0, Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(2, 3), Rational(3, 4)},
                  {1, Rational(1, 3), Rational(1, 5), Rational(1, 7), Rational(2, 3), Rational(3, 4)},
                  {3, Rational(5, 2), Rational(-1, 2), Rational(7, 3), Rational(9, 4), Rational(11, 5)}};
  for (const auto& f : fixtures) {
    const Rational last = Rational(1 - f.n) + f.a + f.b + f.c - f.d - f.e;
    r.add("whipple.n" + std::to_string(f.n), "Whipple transformation of a terminating balanced 4F3",
          whipple_check(f.n, f.a, f.b, f.c, f.d, f.e, last), "sides differ");
  }
  return r;
}

VerificationReport rational_suite(const Params& p) {
  VerificationReport r = check_rational_identification(p);
  r.append(biorthogonality(p));
  r.append(check_rational_relations(p));
  const std::vector<Rational> ts = {Rational(1000), Rational(10000), Rational(100000)};
  r.append(hahn_limit_check(1, 1, Rational(1, 3), Rational(1, 5), p.N, ts));
  return r;
}

VerificationReport model_suite(const Params& p, const Rational& rho) {
  VerificationReport r = check_model(p, rho);
  r.append(model_orthogonality(p, rho));
  r.append(integral_representations(p, rho));
  r.append(model_transposes(p));
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"algebra", "bases", "matrixreps", "racah", "rational", "model"};
  return names;
}

VerificationReport run_suite(const std::string& name, const Params& p, const Rational& rho) {
  require_generic(p, rho, Needs::kAll);
  VerificationReport inner;
  if (name == "algebra") {
    inner = algebra_suite(p, rho);
  } else if (name == "bases") {
    inner = check_eigenbases(p, rho);
    inner.append(check_orthogonality(p, rho));
  } else if (name == "matrixreps") {
    inner = check_coefficients(p, rho);
    inner.append(verify_leonard_trio(p));
  } else if (name == "racah") {
    inner = racah_suite(p, rho);
  } else if (name == "rational") {
    inner = rational_suite(p);
  } else if (name == "model") {
    inner = model_suite(p, rho);
  } else if (name == "all") {
    VerificationReport all;
    all.suite = "all";
    for (const auto& n : suite_names()) all.append(run_suite(n, p, rho));
    return all;
  } else {
    throw PreconditionViolated("unknown suite: " + name);
  }
  VerificationReport out;
  out.suite = name;
  out.append(inner, name + ".");
  return out;
}

Rational ParamSampler::next_rational() {
  static constexpr std::array<long, 8> kPrimes = {3, 5, 7, 11, 13, 17, 19, 23};
  const long q = kPrimes[below(kPrimes.size())];
  long k = static_cast<long>(below(80)) - 40;  // [-40, 39]
  if (k >= 0) ++k;                             // skip zero: [-40, -1] u [1, 40]
  return Rational(k, q);
}

ParamSampler::Draw ParamSampler::next(int N, Needs needs, int max_attempts) {
  Draw d;
  d.params.N = N;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    d.params.alpha = next_rational();
    d.params.beta = next_rational();
    d.params.zeta = next_rational();
    d.rho = next_rational();
    if (degenerate_expressions(d.params, d.rho, needs).empty()) {
      d.resamples = attempt;
      return d;
    }
  }
  d.resamples = max_attempts;
  d.degenerate = true;
  return d;
}

}  // namespace metaracah
