#include "metaracah/rational.hpp"

#include <stdexcept>

#include "metaracah/errors.hpp"

namespace metaracah {

DegenerateParameters::DegenerateParameters(std::vector<std::string> offenders)
    : std::runtime_error([&] {
        std::string msg = "degenerate parameters:";
        for (const auto& o : offenders) msg += " " + o + ";";
        return msg;
      }()),
      offenders_(std::move(offenders)) {}

Rational::Rational(long long v) : q_(mpz_class(std::to_string(v), 10)) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw DegenerateParameters({"zero denominator in literal"});
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
  if (num[0] == '+') num.remove_prefix(1);
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  mpq_class q(n, d);
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) digits = 0;
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class num = q_.get_num();
  const bool negative = num < 0;
  if (negative) num = -num;
  // round(|q| * 10^digits) half away from zero
  mpz_class scaled = num * scale * 2 + q_.get_den();
  mpz_class twice_den = q_.get_den() * 2;
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), scaled.get_mpz_t(), twice_den.get_mpz_t());

  std::string digits_str = rounded.get_str(10);
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, static_cast<std::size_t>(digits + 1) - digits_str.size(), '0');
  }
  std::string out;
  if (negative && rounded != 0) out.push_back('-');
  const std::size_t int_len = digits_str.size() - static_cast<std::size_t>(digits);
  out.append(digits_str, 0, int_len);
  if (digits > 0) {
    out.push_back('.');
    out.append(digits_str, int_len, std::string::npos);
  }
  return out;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DegenerateParameters({"division by zero"});
  q_ /= o.q_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
  return Rational(mpq_class(f));
}

}  // namespace metaracah
