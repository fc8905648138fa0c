#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "metaracah/rational.hpp"

namespace metaracah {

using RationalVector = std::vector<Rational>;

struct EntryIndex {
  int row;
  int col;
};

/// Dense matrix of exact rationals, row-major storage.
///
/// Operators on the representation space are stored column-action: column n
/// holds the standard-basis expansion of O|n>, so entry (l, n) is <l|O|n>.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }
  static RationalMatrix identity(int n);
  static RationalMatrix diagonal(std::span<const Rational> values);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  RationalVector column(int c) const;
  void set_column(int c, std::span<const Rational> values);

  RationalMatrix transpose() const;

  /// Inverse by exact Gauss-Jordan elimination. Throws DegenerateParameters
  /// if the matrix is singular.
  RationalMatrix inverse() const;

  bool is_zero() const;
  /// First nonzero entry in row-major order.
  std::optional<EntryIndex> first_nonzero() const;

  RationalMatrix& operator+=(const RationalMatrix& o);
  RationalMatrix& operator-=(const RationalMatrix& o);
  RationalMatrix& operator*=(const Rational& s);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
  friend RationalMatrix operator*(RationalMatrix a, const Rational& s) { return a *= s; }
  friend RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix anticommutator(const RationalMatrix& a, const RationalMatrix& b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Basis of the right nullspace of `a`, computed by fraction-free (Bareiss)
/// elimination after clearing row denominators. Each returned vector has a
/// single free coordinate set to one.
std::vector<RationalVector> nullspace(const RationalMatrix& a);

/// Solves a·x = b exactly for square nonsingular `a`.
RationalVector solve(const RationalMatrix& a, std::span<const Rational> b);

/// Location of the first entry where a and b differ, as "(r,c): lhs vs rhs".
std::string describe_first_difference(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace metaracah
