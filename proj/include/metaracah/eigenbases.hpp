#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "metaracah/algebra.hpp"

namespace metaracah {

enum class BasisLabel { kD, kDStar, kE, kEStar, kF, kFStar, kZ, kZStar };

/// "d", "dStar", "e", ... as used on the command line and in reports.
std::string to_string(BasisLabel label);
std::optional<BasisLabel> parse_basis_label(std::string_view text);
const std::array<BasisLabel, 8>& all_basis_labels();
bool is_dual(BasisLabel label);

/// Column n is the standard-basis expansion of the n-th basis vector.
struct BasisFamily {
  BasisLabel label = BasisLabel::kE;
  RationalMatrix vectors;
  RationalVector eigenvalues;
};

/// Genericity requirements for building a family.
Needs needs_for(BasisLabel label);

/// lambda_n = alpha - n (d, d*), mu_n (e, e*), nu_n = (n-alpha-rho)(alpha-n)
/// (f, f*), n - alpha (z, z*).
RationalVector basis_eigenvalues(const Params& p, const Rational& rho, BasisLabel label);

/// Closed-form Pochhammer expansions. `rho` is only read for f and f*.
BasisFamily build_basis(const Params& p, const Rational& rho, BasisLabel label);

/// All eight families at once.
struct Bases {
  BasisFamily d, d_star, e, e_star, f, f_star, z, z_star;
};
Bases build_all_bases(const Params& p, const Rational& rho);

/// Single generator of the nullspace of (a - lambda b), scaled so that
/// component `index` equals `target`. Throws NondegenerateSpectrumViolated
/// unless the nullspace is one-dimensional.
RationalVector oracle_eigenvector(const RationalMatrix& a, const RationalMatrix& b, const Rational& lambda, int index,
                                  const Rational& target, const std::string& what);

/// Independent construction: one exact nullspace solve per eigenvalue.
BasisFamily oracle_basis(const Params& p, const Rational& rho, BasisLabel label);

/// Expansion of Z|d_n> from its closed form.
RationalVector z_action_on_d(const Params& p, int n);

/// Eigen-equation residuals, closed form vs oracle, eigenvalue distinctness,
/// the Z|d_n> formula.
VerificationReport check_eigenbases(const Params& p, const Rational& rho);

/// Four Gram relations and the two resolutions of the identity.
VerificationReport check_orthogonality(const Params& p, const Rational& rho);

}  // namespace metaracah
