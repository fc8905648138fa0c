#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metaracah/matrix.hpp"
#include "metaracah/rational.hpp"
#include "metaracah/report.hpp"

namespace metaracah {

/// Representation data: dimension N+1 and the parameters alpha, beta, zeta.
struct Params {
  int N = 1;
  Rational alpha;
  Rational beta;
  Rational zeta;

  int dim() const { return N + 1; }
  friend bool operator==(const Params&, const Params&) = default;
};

/// Central elements xi and eta realized by the bidiagonal representation.
struct CentralParams {
  Rational xi;
  Rational eta;
};

/// The three generators in the standard basis.
struct Generators {
  RationalMatrix Z;
  RationalMatrix V;
  RationalMatrix X;
};

// ---------------------------------------------------------------------------
// Genericity

/// Which downstream computation a denominator expression protects.
enum class Needs : unsigned {
  kStandard = 1U << 0,    // Z invertibility, contiguity, difference equation
  kBasisD = 1U << 1,      // d, d*, Z d_n
  kBasisE = 1U << 2,      // e, e*
  kBasisF = 1U << 3,      // f, f* (rho)
  kCoeffsE = 1U << 4,     // Z, X in the e basis; GEVP recurrence
  kCoeffsF = 1U << 5,     // V in the f basis (rho)
  kRacah = 1U << 6,       // S, S~, weights and norms (rho)
  kRational = 1U << 7,    // U, U~, calU, calU~, weights and norms, dual Hahn
  kAll = 0xFFU,
};

constexpr Needs operator|(Needs a, Needs b) {
  return static_cast<Needs>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool intersects(Needs a, Needs b) { return (static_cast<unsigned>(a) & static_cast<unsigned>(b)) != 0U; }

/// One family of denominator expressions, evaluated for index n = 0..N.
struct DenominatorExpr {
  std::string label;
  Needs needs;
  bool uses_rho;
  std::function<Rational(const Params&, const Rational& rho, int n)> eval;
};

/// The data-driven registry of every denominator that the closed forms use.
const std::vector<DenominatorExpr>& denominator_registry();

/// Empty when all registered expressions (restricted to `needs`) are nonzero
/// for 0 <= n <= N; otherwise the offending "label @ n=k" strings. Entries
/// involving rho are skipped when `rho` is not given.
std::vector<std::string> degenerate_expressions(const Params& p, const std::optional<Rational>& rho,
                                                Needs needs = Needs::kAll);

/// Returns true when the parameters are generic; the offenders otherwise.
struct ValidationResult {
  bool ok = true;
  std::vector<std::string> offenders;
  explicit operator bool() const { return ok; }
};
ValidationResult validate_params(const Params& p, const std::optional<Rational>& rho = std::nullopt);

/// Throws DegenerateParameters if any expression in `needs` vanishes.
void require_generic(const Params& p, const std::optional<Rational>& rho, Needs needs);

// ---------------------------------------------------------------------------
// Standard-basis matrices

RationalMatrix build_Z(const Params& p);
RationalMatrix build_V(const Params& p);
RationalMatrix build_X(const Params& p);
Generators build_generators(const Params& p);

struct Transposes {
  RationalMatrix Zt;
  RationalMatrix Vt;
  RationalMatrix Xt;
};

/// Transposed generators built from their own explicit standard-basis
/// actions (Zt|n> = (n-alpha)|n> + |n-1>, etc.), not by transposition.
Transposes build_transposes(const Params& p);

/// Closed forms of xi and eta for which the bidiagonal matrices satisfy the
/// defining relations.
CentralParams central_params(const Params& p);

/// C = 2ZVZ + {X,V} + 2 zeta {X,Z} + 2X^2 + 2 zeta^2 Z^2 + 2 eta X + V + 2 xi Z.
RationalMatrix casimir(const Params& p);
RationalMatrix casimir(const Generators& g, const Rational& zeta, const CentralParams& c);

/// [Z,X] = Z^2 + X;  [X,V] = {V,Z} + 2 zeta X + 2 zeta^2 Z + xi;
/// [V,Z] = V + 2X + 2 zeta Z + eta.
VerificationReport check_defining_relations(const Params& p);
VerificationReport check_defining_relations(const Generators& g, const Rational& zeta, const CentralParams& c);

/// Shifted presentation, Hahn-algebra relations, Racah relations for
/// W = X + rho Z with the Casimir, and the Borel relation [H,E] = E.
VerificationReport check_subalgebras(const Params& p, const Rational& rho);

struct HeunResult {
  RationalMatrix H;
  bool bidiagonal = false;  // nonzero pattern confined to diagonal + first subdiagonal
};

/// H = h0 I + h1 Z - h4 V + h4 [V, Z].
HeunResult heun_bidiagonal(const Params& p, const Rational& h0, const Rational& h1, const Rational& h4);

/// General algebraic Heun operator h0 I + h1 Z + h2 V + h3 ZV + h4 VZ.
RationalMatrix heun_operator(const Params& p, const Rational& h0, const Rational& h1, const Rational& h2,
                             const Rational& h3, const Rational& h4);

/// True iff entries outside the diagonal and first subdiagonal are zero.
bool is_lower_bidiagonal(const RationalMatrix& m);

/// Characteristic polynomial det(m - lambda I) evaluated exactly at lambda.
Rational characteristic_value(const RationalMatrix& m, const Rational& lambda);

}  // namespace metaracah
