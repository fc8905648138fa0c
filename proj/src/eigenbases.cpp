#include "metaracah/eigenbases.hpp"

#include <functional>
#include <set>

#include "metaracah/errors.hpp"
#include "metaracah/hyper.hpp"

namespace metaracah {

namespace {

constexpr std::array<BasisLabel, 8> kLabels = {BasisLabel::kD, BasisLabel::kDStar, BasisLabel::kE, BasisLabel::kEStar,
                                               BasisLabel::kF, BasisLabel::kFStar, BasisLabel::kZ, BasisLabel::kZStar};

using Entry = std::function<Rational(int l, int n)>;

RationalMatrix tabulate(int dim, const Entry& entry) {
  RationalMatrix m(dim, dim);
  for (int n = 0; n < dim; ++n) {
    for (int l = 0; l < dim; ++l) m(l, n) = entry(l, n);
  }
  return m;
}

// num / den, skipping the denominator when the numerator already vanishes
Rational quotient(const Rational& num, const std::function<Rational()>& den) {
  if (num.is_zero()) return num;
  return num / den();
}

RationalMatrix closed_form(const Params& p, const Rational& rho, BasisLabel label) {
  const int N = p.N;
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational& z = p.zeta;
  const Rational r = N - 2 * a - b - 2 * z;  // recurring combination
  switch (label) {
    case BasisLabel::kD:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational shift = Rational(n - N + 1) - a + b;
        const Rational num = multi_pochhammer({Rational(n - N), a - N}, N - l);
        return quotient(num, [&] {
          return multi_pochhammer({Rational(n - N), a - N}, N - n) * pochhammer(shift, N - l) /
                 pochhammer(shift, N - n);
        });
      });
    case BasisLabel::kDStar:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational num = sign_power(l) * multi_pochhammer({Rational(-n), -a}, l);
        return quotient(num, [&] {
          return factorial(n) * pochhammer(-a, n + 1) * pochhammer(a - b - n, l) / pochhammer(a - b - n, n);
        });
      });
    case BasisLabel::kE:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational upper = Rational(n - 1) - 2 * b - 2 * z;
        const Rational num = sign_power(l) * multi_pochhammer({Rational(-n), upper}, l) *
                             multi_pochhammer({Rational(-N), r}, n);
        return quotient(num, [&] {
          return pochhammer(upper, n) * factorial(l) * multi_pochhammer({Rational(-N), r}, l);
        });
      });
    case BasisLabel::kEStar:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational shift = 2 * b + 2 * z + (1 - N - n);
        const Rational num = multi_pochhammer({Rational(-N), r + n}, N - n) *
                             multi_pochhammer({Rational(n - N), shift}, N - l);
        return quotient(num, [&] {
          return pochhammer(shift, N - n) * factorial(N - l) *
                 multi_pochhammer({Rational(-N), 2 * a + b + 2 * z + (1 - 2 * N)}, N - l);
        });
      });
    case BasisLabel::kF:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational lower = 2 * a + rho - (N + n);
        const Rational num = multi_pochhammer({Rational(n - N), lower}, N - l) * pochhammer(b + rho + (1 - N), N - n);
        return quotient(num, [&] {
          return multi_pochhammer({Rational(n - N), lower}, N - n) * pochhammer(b + rho + (1 - N), N - l);
        });
      });
    case BasisLabel::kFStar:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational shift = Rational(n) - 2 * a - rho;
        const Rational num = sign_power(l) * multi_pochhammer({Rational(-n), shift}, l) * pochhammer(-b - rho, n);
        return quotient(num, [&] { return factorial(n) * pochhammer(shift, n) * pochhammer(-b - rho, l); });
      });
    case BasisLabel::kZ:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational num = pochhammer(Rational(n - N), N - l);
        return quotient(num, [&] { return pochhammer(Rational(n - N), N - n); });
      });
    case BasisLabel::kZStar:
      return tabulate(p.dim(), [&](int l, int n) {
        const Rational num = sign_power(l + n) * pochhammer(Rational(-n), l);
        return quotient(num, [&] { return pochhammer(Rational(-n), n); });
      });
  }
  throw PreconditionViolated("unknown basis label");
}

}  // namespace

std::string to_string(BasisLabel label) {
  switch (label) {
    case BasisLabel::kD: return "d";
    case BasisLabel::kDStar: return "dStar";
    case BasisLabel::kE: return "e";
    case BasisLabel::kEStar: return "eStar";
    case BasisLabel::kF: return "f";
    case BasisLabel::kFStar: return "fStar";
    case BasisLabel::kZ: return "z";
    case BasisLabel::kZStar: return "zStar";
  }
  return "?";
}

std::optional<BasisLabel> parse_basis_label(std::string_view text) {
  for (auto label : kLabels) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

const std::array<BasisLabel, 8>& all_basis_labels() { return kLabels; }

bool is_dual(BasisLabel label) {
  return label == BasisLabel::kDStar || label == BasisLabel::kEStar || label == BasisLabel::kFStar ||
         label == BasisLabel::kZStar;
}

Needs needs_for(BasisLabel label) {
  switch (label) {
    case BasisLabel::kD:
    case BasisLabel::kDStar: return Needs::kBasisD;
    case BasisLabel::kE:
    case BasisLabel::kEStar: return Needs::kBasisE;
    case BasisLabel::kF:
    case BasisLabel::kFStar: return Needs::kBasisF;
    case BasisLabel::kZ:
    case BasisLabel::kZStar: return Needs::kStandard;
  }
  return Needs::kAll;
}

RationalVector basis_eigenvalues(const Params& p, const Rational& rho, BasisLabel label) {
  RationalVector ev;
  ev.reserve(p.dim());
  const Rational bz = p.beta + p.zeta;
  for (int n = 0; n <= p.N; ++n) {
    switch (label) {
      case BasisLabel::kD:
      case BasisLabel::kDStar: ev.push_back(p.alpha - n); break;
      case BasisLabel::kE:
      case BasisLabel::kEStar: ev.push_back((Rational(n - 1) - bz) * (bz - n)); break;
      case BasisLabel::kF:
      case BasisLabel::kFStar: ev.push_back((Rational(n) - p.alpha - rho) * (p.alpha - n)); break;
      case BasisLabel::kZ:
      case BasisLabel::kZStar: ev.push_back(Rational(n) - p.alpha); break;
    }
  }
  return ev;
}

BasisFamily build_basis(const Params& p, const Rational& rho, BasisLabel label) {
  const bool uses_rho = label == BasisLabel::kF || label == BasisLabel::kFStar;
  require_generic(p, uses_rho ? std::optional<Rational>(rho) : std::nullopt, needs_for(label));
  return BasisFamily{label, closed_form(p, rho, label), basis_eigenvalues(p, rho, label)};
}

Bases build_all_bases(const Params& p, const Rational& rho) {
  return Bases{build_basis(p, rho, BasisLabel::kD), build_basis(p, rho, BasisLabel::kDStar),
               build_basis(p, rho, BasisLabel::kE), build_basis(p, rho, BasisLabel::kEStar),
               build_basis(p, rho, BasisLabel::kF), build_basis(p, rho, BasisLabel::kFStar),
               build_basis(p, rho, BasisLabel::kZ), build_basis(p, rho, BasisLabel::kZStar)};
}

RationalVector oracle_eigenvector(const RationalMatrix& a, const RationalMatrix& b, const Rational& lambda, int index,
                                  const Rational& target, const std::string& what) {
  const auto kernel = nullspace(a - lambda * b);
  if (kernel.size() != 1) throw NondegenerateSpectrumViolated(what, static_cast<int>(kernel.size()));
  RationalVector v = kernel.front();
  if (!v[index].is_zero()) {
    const Rational scale = target / v[index];
    for (auto& x : v) x *= scale;
  }
  return v;
}

BasisFamily oracle_basis(const Params& p, const Rational& rho, BasisLabel label) {
  const BasisFamily reference = build_basis(p, rho, label);
  const auto g = build_generators(p);
  const auto t = build_transposes(p);
  const auto I = RationalMatrix::identity(p.dim());
  RationalMatrix a;
  RationalMatrix b = I;
  switch (label) {
    case BasisLabel::kD: a = g.X; b = g.Z; break;
    case BasisLabel::kDStar: a = t.Xt; b = t.Zt; break;
    case BasisLabel::kE: a = g.V; break;
    case BasisLabel::kEStar: a = t.Vt; break;
    case BasisLabel::kF: a = g.X + rho * g.Z; break;
    case BasisLabel::kFStar: a = t.Xt + rho * t.Zt; break;
    case BasisLabel::kZ: a = g.Z; break;
    case BasisLabel::kZStar: a = t.Zt; break;
  }
  BasisFamily out{label, RationalMatrix(p.dim(), p.dim()), reference.eigenvalues};
  for (int n = 0; n <= p.N; ++n) {
    const auto v = oracle_eigenvector(a, b, out.eigenvalues[n], n, reference.vectors(n, n),
                                      to_string(label) + " eigenvalue index " + std::to_string(n));
    out.vectors.set_column(n, v);
  }
  return out;
}

RationalVector z_action_on_d(const Params& p, int n) {
  if (n < 0 || n > p.N) throw PreconditionViolated("z_action_on_d: index out of range");
  require_generic(p, std::nullopt, Needs::kBasisD);
  const int N = p.N;
  const Rational& a = p.alpha;
  const Rational& b = p.beta;
  const Rational shift = Rational(n - N + 1) - a + b;
  const Rational prefactor =
      (a - b - 1) * pochhammer(shift, N - n) / multi_pochhammer({Rational(n - N), a - N}, N - n);
  RationalVector out(p.dim());
  for (int l = 0; l <= N; ++l) {
    const Rational num = pochhammer(Rational(n - N), N - l);
    if (num.is_zero()) continue;
    out[l] = prefactor * num * pochhammer(a - N, N - l + 1) / pochhammer(shift, N - l + 1);
  }
  return out;
}

VerificationReport check_eigenbases(const Params& p, const Rational& rho) {
  VerificationReport r;
  r.suite = "bases";
  const auto g = build_generators(p);
  const auto t = build_transposes(p);
  const Bases bs = build_all_bases(p, rho);
  const RationalMatrix W = g.X + rho * g.Z;
  const RationalMatrix Wt = t.Xt + rho * t.Zt;
  auto diag = [](const BasisFamily& f) { return RationalMatrix::diagonal(f.eigenvalues); };

  r.add_zero("eigen.d", "X d_n = lambda_n Z d_n", g.X * bs.d.vectors - g.Z * bs.d.vectors * diag(bs.d));
  r.add_zero("eigen.dStar", "Xt d*_n = lambda_n Zt d*_n",
             t.Xt * bs.d_star.vectors - t.Zt * bs.d_star.vectors * diag(bs.d_star));
  r.add_zero("eigen.e", "V e_n = mu_n e_n", g.V * bs.e.vectors - bs.e.vectors * diag(bs.e));
  r.add_zero("eigen.eStar", "Vt e*_n = mu_n e*_n", t.Vt * bs.e_star.vectors - bs.e_star.vectors * diag(bs.e_star));
  r.add_zero("eigen.f", "(X + rho Z) f_n = nu_n f_n", W * bs.f.vectors - bs.f.vectors * diag(bs.f));
  r.add_zero("eigen.fStar", "(Xt + rho Zt) f*_n = nu_n f*_n",
             Wt * bs.f_star.vectors - bs.f_star.vectors * diag(bs.f_star));
  r.add_zero("eigen.z", "Z z_n = (n - alpha) z_n", g.Z * bs.z.vectors - bs.z.vectors * diag(bs.z));
  r.add_zero("eigen.zStar", "Zt z*_n = (n - alpha) z*_n",
             t.Zt * bs.z_star.vectors - bs.z_star.vectors * diag(bs.z_star));

  for (auto label : all_basis_labels()) {
    const std::string name = to_string(label);
    const auto& family = build_basis(p, rho, label);
    const std::set<Rational, std::less<>> distinct(family.eigenvalues.begin(), family.eigenvalues.end());
    r.add("distinct." + name, "eigenvalues of " + name + " pairwise distinct",
          distinct.size() == family.eigenvalues.size(), "repeated eigenvalue");
    try {
      r.add_equal("oracle." + name, "closed form of " + name + " equals nullspace solution",
                  family.vectors, oracle_basis(p, rho, label).vectors);
    } catch (const NondegenerateSpectrumViolated& e) {
      r.add("oracle." + name, "closed form of " + name + " equals nullspace solution", false, e.what());
    }
  }

  RationalMatrix zd(p.dim(), p.dim());
  for (int n = 0; n <= p.N; ++n) zd.set_column(n, z_action_on_d(p, n));
  r.add_equal("zAction.d", "closed form of Z d_n", zd, g.Z * bs.d.vectors);
  return r;
}

VerificationReport check_orthogonality(const Params& p, const Rational& rho) {
  VerificationReport r;
  r.suite = "bases";
  const auto Z = build_Z(p);
  const Bases bs = build_all_bases(p, rho);
  const auto I = RationalMatrix::identity(p.dim());
  r.add_equal("orth.e", "<e*_m|e_n> = delta", bs.e_star.vectors.transpose() * bs.e.vectors, I);
  r.add_equal("orth.f", "<f*_m|f_n> = delta", bs.f_star.vectors.transpose() * bs.f.vectors, I);
  r.add_equal("orth.z", "<z*_m|z_n> = delta", bs.z_star.vectors.transpose() * bs.z.vectors, I);
  r.add_equal("orth.d", "<d*_m|Z|d_n> = delta", bs.d_star.vectors.transpose() * Z * bs.d.vectors, I);
  r.add_equal("complete.e", "sum_n |e_n><e*_n| = I", bs.e.vectors * bs.e_star.vectors.transpose(), I);
  r.add_equal("complete.d", "sum_n Z|d_n><d*_n| = I", Z * bs.d.vectors * bs.d_star.vectors.transpose(), I);
  return r;
}

}  // namespace metaracah
