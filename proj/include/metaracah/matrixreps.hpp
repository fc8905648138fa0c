#pragma once

#include <optional>
#include <string>

#include "metaracah/algebra.hpp"

namespace metaracah {

/// Matrix elements of an operator in a basis b, column-action:
///   sup[n]  = O_{n+1,n}  (n = 0..N-1)
///   diag[n] = O_{n,n}    (n = 0..N)
///   sub[n]  = O_{n,n+1}  (n = 0..N-1), i.e. the coefficient on b_{n} in O b_{n+1}
/// Missing bands are all zero.
struct TridiagonalCoeffs {
  RationalVector sup;
  RationalVector diag;
  RationalVector sub;

  RationalMatrix assemble() const;
  static TridiagonalCoeffs from_matrix(const RationalMatrix& m);
};

/// Z and X in the e basis.
TridiagonalCoeffs coeffs_Z_on_e(const Params& p);
TridiagonalCoeffs coeffs_X_on_e(const Params& p);

/// V in the f basis.
TridiagonalCoeffs coeffs_V_on_f(const Params& p, const Rational& rho);

/// Z, X, VZ expanded in the Z|d_n> basis (pairing with d*), and the
/// transposed operators in the d* basis (pairing with Z|d_n>).
struct DCoeffs {
  TridiagonalCoeffs Z;
  TridiagonalCoeffs X;
  TridiagonalCoeffs VZ;
};
DCoeffs coeffs_on_d(const Params& p);
DCoeffs coeffs_on_dstar(const Params& p);

/// V, X and X Z^-1 in the z basis.
struct ZCoeffs {
  TridiagonalCoeffs V;
  TridiagonalCoeffs X;
  TridiagonalCoeffs Vtilde;
};
ZCoeffs coeffs_on_z(const Params& p);

enum class Pattern {
  kDiagonal,
  kLowerBidiagonal,
  kUpperBidiagonal,
  kTridiagonal,
  kIrreducibleTridiagonal,
  kIrreducibleLowerBidiagonal,
};

std::string to_string(Pattern kind);

/// Empty when `m` has the pattern; otherwise the offending entry.
std::optional<std::string> pattern_violation(const RationalMatrix& m, Pattern kind);

/// dual^T * op * basis: the matrix of `op` in `basis`, read off with the
/// biorthogonal family `dual`.
RationalMatrix conjugate(const RationalMatrix& dual, const RationalMatrix& op, const RationalMatrix& basis);

/// Every closed-form coefficient against its conjugation oracle, plus the
/// transposition duality in the e, f, z bases.
VerificationReport check_coefficients(const Params& p, const Rational& rho);

/// The three clauses of a lower reduced Leonard trio (V, X Z^-1, Z).
VerificationReport verify_leonard_trio(const Params& p);

}  // namespace metaracah
