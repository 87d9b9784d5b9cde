#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gduel {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision fraction, always stored in lowest terms with a
// positive denominator. Every operation is exact; nothing here ever
// rounds. This is the only number type decision logic is allowed to use.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("rational with zero denominator");
    normalize();
  }

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const { return Rational(-num_, den_, NoNormalize{}); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  // Denominators are positive, so cross-multiplication preserves order.
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational abs() const { return num_ < 0 ? -*this : *this; }

  // Largest integer <= *this (floor division toward minus infinity).
  BigInt floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
  }

  static Rational pow(const Rational& base, long long e) {
    if (e < 0) {
      if (base.is_zero()) throw std::domain_error("zero to a negative power");
      return pow(Rational(base.den_, base.num_, NoNormalizeSigned{}), -e);
    }
    Rational r(1);
    Rational b = base;
    unsigned long long k = static_cast<unsigned long long>(e);
    while (k > 0) {
      if (k & 1) r *= b;
      b *= b;
      k >>= 1;
    }
    return r;
  }

  // "num" when the value is an integer, otherwise "num/den".
  std::string to_string() const {
    std::string s = num_.str();
    if (den_ != 1) {
      s += '/';
      s += den_.str();
    }
    return s;
  }

  // Accepts "a/b", integers, finite decimals ("0.902" -> 451/500) and
  // power shorthand in either position ("1/2^40", "10^6"). Decimals are
  // converted exactly; no floating point is involved. Throws
  // std::invalid_argument with the offending token on bad input.
  static Rational parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  struct NoNormalize {};
  struct NoNormalizeSigned {};
  Rational(BigInt n, BigInt d, NoNormalize) : num_(std::move(n)), den_(std::move(d)) {}
  Rational(BigInt n, BigInt d, NoNormalizeSigned)
      : num_(std::move(n)), den_(std::move(d)) {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
  }

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_.is_zero()) den_ = 1;
  }

  BigInt num_;
  BigInt den_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

namespace detail {

inline BigInt parse_uint(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational: '" + std::string(whole) + "'");
  for (char c : text)
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad rational token: '" + std::string(whole) + "'");
  return BigInt(std::string(text));
}

// DIGITS or DIGITS^DIGITS or DIGITS.DIGITS; returns an exact rational.
inline Rational parse_term(std::string_view text, std::string_view whole) {
  if (auto caret = text.find('^'); caret != std::string_view::npos) {
    BigInt base = parse_uint(text.substr(0, caret), whole);
    BigInt exp = parse_uint(text.substr(caret + 1), whole);
    if (exp > 1000000) throw std::invalid_argument("exponent too large: '" + std::string(whole) + "'");
    return Rational(boost::multiprecision::pow(base, exp.convert_to<unsigned>()));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view ip = text.substr(0, dot);
    std::string_view fp = text.substr(dot + 1);
    if (fp.empty() || fp.find('.') != std::string_view::npos)
      throw std::invalid_argument("bad decimal literal: '" + std::string(whole) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
    BigInt numer = (ip.empty() ? BigInt(0) : parse_uint(ip, whole)) * scale + parse_uint(fp, whole);
    return Rational(numer, scale);
  }
  return Rational(parse_uint(text, whole));
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  std::string_view whole = text;
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view ntext = text.substr(0, slash);
    std::string_view dtext = text.substr(slash + 1);
    if (ntext.find('.') != std::string_view::npos || dtext.find('.') != std::string_view::npos)
      throw std::invalid_argument("decimals may not appear in fractions: '" + std::string(whole) + "'");
    Rational n = detail::parse_term(ntext, whole);
    Rational d = detail::parse_term(dtext, whole);
    if (d.is_zero()) throw std::invalid_argument("zero denominator: '" + std::string(whole) + "'");
    value = n / d;
  } else {
    value = detail::parse_term(text, whole);
  }
  return negative ? -value : value;
}

}  // namespace gduel
