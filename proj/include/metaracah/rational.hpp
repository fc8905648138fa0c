#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace metaracah {

/// Exact arbitrary-precision rational in canonical form (positive
/// denominator, coprime numerator/denominator). Thin value wrapper over
/// GMP's mpq_class; division by zero raises DegenerateParameters instead
/// of trapping.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p", "-p", "p/q" (whitespace not allowed). Throws
  /// std::invalid_argument on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const noexcept { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const noexcept { return sgn(q_) == 0; }
  bool is_integer() const noexcept { return q_.get_den() == 1; }
  int sign() const noexcept { return sgn(q_); }

  /// Integer value if this is an integer that fits in a long.
  bool fits_long() const noexcept { return is_integer() && q_.get_num().fits_slong_p(); }
  long to_long() const { return q_.get_num().get_si(); }

  /// Canonical "p/q" form, or "p" for integers.
  std::string str() const;

  /// Fixed-point decimal with `digits` fractional digits, rounded half away
  /// from zero.
  std::string to_decimal(int digits) const;

  double to_double() const { return q_.get_d(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rational abs(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// n! as a rational.
Rational factorial(int n);

/// (-1)^k.
inline Rational sign_power(long k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace metaracah
