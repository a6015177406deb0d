#ifndef FORMAL_RINGS_RATIONAL_HPP
#define FORMAL_RINGS_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "formal_rings/errors.hpp"

namespace formal_rings {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d) {
    if (d == 0) throw DivisionByZero();
    value_ = mpq_class(n, d);
    value_.canonicalize();
  }
  explicit Rational(const mpz_class& n) : value_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DivisionByZero();
    value_ = mpq_class(n, d);
    value_.canonicalize();
  }
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  /// Parses "[+-]digits[/digits]". The denominator must be positive.
  static Rational parse(std::string_view text) {
    std::string s(text);
    std::size_t i = 0;
    std::string num;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
      if (s[i] == '-') num.push_back('-');
      ++i;
    }
    const std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num.push_back(s[i++]);
    if (i == num_start) throw ParseError("expected digits in rational '" + s + "'");
    std::string den = "1";
    if (i < s.size() && s[i] == '/') {
      ++i;
      const std::size_t den_start = i;
      den.clear();
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) den.push_back(s[i++]);
      if (i == den_start) throw ParseError("expected denominator in rational '" + s + "'");
    }
    if (i != s.size()) throw ParseError("trailing characters in rational '" + s + "'");
    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw ParseError("zero denominator in rational '" + s + "'");
    return Rational(n, d);
  }

  const mpq_class& gmp() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  std::string to_string() const { return value_.get_str(10); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational out(1);
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

inline Rational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

}  // namespace formal_rings

#endif  // FORMAL_RINGS_RATIONAL_HPP
