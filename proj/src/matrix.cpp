#include "metaracah/matrix.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

#include "metaracah/errors.hpp"

namespace metaracah {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> values) {
  const int n = static_cast<int>(values.size());
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = values[static_cast<std::size_t>(i)];
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
  if (columns.empty()) return {};
  const int rows = static_cast<int>(columns.front().size());
  RationalMatrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) m.set_column(c, columns[static_cast<std::size_t>(c)]);
  return m;
}

RationalVector RationalMatrix::column(int c) const {
  RationalVector v(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) v[static_cast<std::size_t>(r)] = (*this)(r, c);
  return v;
}

void RationalMatrix::set_column(int c, std::span<const Rational> values) {
  if (static_cast<int>(values.size()) != rows_) throw std::invalid_argument("column length mismatch");
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = values[static_cast<std::size_t>(r)];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_zero() const { return !first_nonzero().has_value(); }

std::optional<EntryIndex> RationalMatrix::first_nonzero() const {
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (!(*this)(r, c).is_zero()) return EntryIndex{r, c};
    }
  }
  return std::nullopt;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  RationalMatrix out(a.rows_, b.cols_);
  mpq_class acc;
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < b.cols_; ++j) {
      acc = 0;
      for (int k = 0; k < a.cols_; ++k) {
        const auto& x = a(i, k).raw();
        if (sgn(x) == 0) continue;
        acc += x * b(k, j).raw();
      }
      out(i, j) = Rational(acc);
    }
  }
  return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v) {
  if (static_cast<int>(v.size()) != a.cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  RationalVector out(static_cast<std::size_t>(a.rows_));
  for (int i = 0; i < a.rows_; ++i) {
    Rational acc;
    for (int k = 0; k < a.cols_; ++k) acc += a(i, k) * v[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = std::move(acc);
  }
  return out;
}

RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

RationalMatrix anticommutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b + b * a; }

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
  mpq_class acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rational(acc);
}

RationalMatrix RationalMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const int n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!work(r, c).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw DegenerateParameters({"singular matrix in inverse (column " + std::to_string(c) + ")"});
    if (pivot != c) {
      for (int k = 0; k < n; ++k) {
        std::swap(work(pivot, k), work(c, k));
        std::swap(inv(pivot, k), inv(c, k));
      }
    }
    const Rational scale = work(c, c);
    for (int k = 0; k < n; ++k) {
      work(c, k) /= scale;
      inv(c, k) /= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || work(r, c).is_zero()) continue;
      const Rational f = work(r, c);
      for (int k = 0; k < n; ++k) {
        work(r, k) -= f * work(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

namespace {

// Row echelon form of an integer matrix by Bareiss fraction-free elimination.
// Returns pivot column per echelon row.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& m, int cols) {
  const int rows = static_cast<int>(m.size());
  std::vector<int> pivots;
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(m[static_cast<std::size_t>(p)], m[static_cast<std::size_t>(r)]);
    const auto& piv_row = m[static_cast<std::size_t>(r)];
    const mpz_class& piv = piv_row[static_cast<std::size_t>(c)];
    for (int i = r + 1; i < rows; ++i) {
      auto& row = m[static_cast<std::size_t>(i)];
      const mpz_class lead = row[static_cast<std::size_t>(c)];
      for (int j = c; j < cols; ++j) {
        mpz_class v = piv * row[static_cast<std::size_t>(j)] - lead * piv_row[static_cast<std::size_t>(j)];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        row[static_cast<std::size_t>(j)] = std::move(v);
      }
      for (int j = 0; j < c; ++j) row[static_cast<std::size_t>(j)] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& a) {
  const int rows = a.rows();
  const int cols = a.cols();
  std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(rows),
                                        std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).raw().get_den_mpz_t());
    }
    for (int j = 0; j < cols; ++j) {
      const auto& q = a(i, j).raw();
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = q.get_num() * (lcm / q.get_den());
    }
  }

  const std::vector<int> pivots = bareiss_echelon(m, cols);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v(static_cast<std::size_t>(cols));
    v[static_cast<std::size_t>(free)] = 1;
    for (int r = static_cast<int>(pivots.size()) - 1; r >= 0; --r) {
      const int pc = pivots[static_cast<std::size_t>(r)];
      const auto& row = m[static_cast<std::size_t>(r)];
      mpq_class acc;
      for (int j = pc + 1; j < cols; ++j) {
        if (row[static_cast<std::size_t>(j)] == 0) continue;
        acc += mpq_class(row[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)].raw();
      }
      v[static_cast<std::size_t>(pc)] = Rational(mpq_class(-acc / mpq_class(row[static_cast<std::size_t>(pc)])));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector solve(const RationalMatrix& a, std::span<const Rational> b) {
  const RationalVector bv(b.begin(), b.end());
  return a.inverse() * bv;
}

std::string describe_first_difference(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape mismatch";
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      if (a(r, c) != b(r, c)) {
        return "(" + std::to_string(r) + "," + std::to_string(c) + "): " + a(r, c).str() + " vs " + b(r, c).str();
      }
    }
  }
  return {};
}

}  // namespace metaracah
