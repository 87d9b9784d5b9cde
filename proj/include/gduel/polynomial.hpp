#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gduel/rational.hpp"
#include "gduel/sign.hpp"

namespace gduel {

// Dense univariate polynomial with coefficients stored in ascending
// degree order. The zero polynomial has an empty coefficient vector;
// otherwise the last coefficient is nonzero.
template <typename C>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(std::size_t degree, C coeff) {
    std::vector<C> c(degree + 1, C(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](std::size_t i) const { return c_[i]; }
  C coeff_or_zero(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
  const C& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  C eval(const C& x) const {
    C acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<C> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * C(static_cast<long long>(i));
    return Polynomial(std::move(d));
  }

  Polynomial operator-() const {
    std::vector<C> r(c_);
    for (auto& v : r) v = -v;
    return Polynomial(std::move(r));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<C> r(std::max(a.c_.size(), b.c_.size()), C(0));
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = a.coeff_or_zero(i) + b.coeff_or_zero(i);
    return Polynomial(std::move(r));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + (-b);
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const C& s) {
    std::vector<C> r(a.c_);
    for (auto& v : r) v = v * s;
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  // P(x^k)
  Polynomial substitute_power(std::size_t k) const {
    if (k == 0) throw std::invalid_argument("substitute_power requires k >= 1");
    if (is_zero()) return Polynomial();
    std::vector<C> r((c_.size() - 1) * k + 1, C(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == C(0)) c_.pop_back();
  }
  std::vector<C> c_;
};

using IntPoly = Polynomial<BigInt>;
using RatPoly = Polynomial<Rational>;

// P(x + a), computed by repeated synthetic division; O(n^2) exact steps.
template <typename C>
Polynomial<C> taylor_shift(const Polynomial<C>& p, const C& a) {
  if (p.is_zero()) return p;
  std::vector<C> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += a * c[j + 1];
  return Polynomial<C>(std::move(c));
}

template <typename C>
struct DivModResult {
  Polynomial<C> quotient;
  Polynomial<C> remainder;
};

// Long division over a field coefficient type.
inline DivModResult<Rational> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {RatPoly(), a};
  std::vector<Rational> quot(a.degree() - db + 1, Rational(0));
  for (int i = a.degree(); i >= db; --i) {
    Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    if (f.is_zero()) continue;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

// Exact quotient, or nullopt when the divisor does not divide the
// dividend (nonzero remainder is a result, not an error).
inline std::optional<RatPoly> exact_divide(const RatPoly& dividend, const RatPoly& divisor) {
  auto [q, r] = divmod(dividend, divisor);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (const auto& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

// Clears denominators and removes the integer content; the result is a
// primitive integer polynomial with the same roots (sign of the leading
// coefficient is preserved).
inline IntPoly to_integer_primitive(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  BigInt l = 1;
  for (const auto& c : p.coeffs()) l = boost::multiprecision::lcm(l, c.den());
  std::vector<BigInt> ic;
  ic.reserve(p.coeffs().size());
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    ic.push_back(c.num() * (l / c.den()));
    g = boost::multiprecision::gcd(g, ic.back());
  }
  if (g > 1)
    for (auto& v : ic) v /= g;
  return IntPoly(std::move(ic));
}

inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline IntPoly primitive_part(const IntPoly& p) {
  BigInt g = content(p);
  if (g <= 1) return p;
  std::vector<BigInt> c = p.coeffs();
  for (auto& v : c) v /= g;
  return IntPoly(std::move(c));
}

// Exact sign of p(q) without forming the rational value: the polynomial
// is evaluated against the numerator with powers of the denominator
// folded in, so only integer arithmetic runs.
inline int sign_at(const IntPoly& p, const Rational& q) {
  if (p.is_zero()) return 0;
  const auto& c = p.coeffs();
  BigInt acc = c.back();
  BigInt dpow = 1;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dpow *= q.den();
    acc = acc * q.num() + c[i] * dpow;
  }
  return acc.sign();
}

// lc(b)^(deg a - deg b + 1) * a mod b, all over the integers.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const int shift = a.degree() - db;
    const BigInt la = a.leading();
    std::vector<BigInt> r(a.coeffs());
    for (auto& v : r) v *= b.leading();
    for (int j = 0; j <= db; ++j)
      r[static_cast<std::size_t>(shift + j)] -= la * b[static_cast<std::size_t>(j)];
    a = IntPoly(std::move(r));
    if (a.degree() >= db + shift) throw std::logic_error("pseudo-division failed to reduce degree");
  }
  return a;
}

// Primitive polynomial gcd (primitive pseudo-remainder sequence).
// Result is primitive with positive leading coefficient.
inline IntPoly integer_gcd(IntPoly a, IntPoly b) {
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b.is_zero() || b.leading() > 0 ? b : -b;
  if (b.is_zero()) return a.leading() > 0 ? a : -a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_part(pseudo_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a.leading() > 0 ? a : -a;
}

// P with all repeated factors collapsed to multiplicity one; roots and
// their signs around simple crossings are preserved.
inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.is_zero() || p.degree() == 0) return primitive_part(p);
  IntPoly g = integer_gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_part(p);
  auto q = exact_divide(to_rational(p), to_rational(g));
  if (!q) throw std::logic_error("gcd does not divide its polynomial");
  return to_integer_primitive(*q);
}

// Removes the factor (den*x - num) for a known rational root r = num/den.
inline IntPoly deflate_root(const IntPoly& p, const Rational& r) {
  RatPoly divisor(std::vector<Rational>{-r, Rational(1)});
  auto q = exact_divide(to_rational(p), divisor);
  if (!q) throw std::logic_error("deflate_root called with a non-root");
  return to_integer_primitive(*q);
}

// Polynomial whose coefficients are all -1 or +1, ascending order, never
// empty. These are the decision polynomials of the duel: the sign of the
// value at q picks the next shooter, so evaluation must be exact.
class SignPolynomial {
 public:
  explicit SignPolynomial(std::vector<Sign> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("sign polynomial may not be empty");
  }

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Sign>& coeffs() const { return c_; }
  Sign operator[](std::size_t i) const { return c_[i]; }

  IntPoly to_polynomial() const {
    std::vector<BigInt> c;
    c.reserve(c_.size());
    for (Sign s : c_) c.emplace_back(to_int(s));
    return IntPoly(std::move(c));
  }

  // Exact sign of the value at q: -1, 0 or +1.
  int eval_sign(const Rational& q) const {
    BigInt acc = to_int(c_.back());
    BigInt dpow = 1;
    for (std::size_t i = c_.size() - 1; i-- > 0;) {
      dpow *= q.den();
      acc = acc * q.num() + to_int(c_[i]) * dpow;
    }
    return acc.sign();
  }

  friend bool operator==(const SignPolynomial& a, const SignPolynomial& b) {
    return a.c_ == b.c_;
  }

 private:
  std::vector<Sign> c_;
};

inline std::optional<RatPoly> exact_divide(const SignPolynomial& dividend,
                                           const RatPoly& divisor) {
  return exact_divide(to_rational(dividend.to_polynomial()), divisor);
}

// Streaming evaluator for sum c_j q^j at a fixed q. Appending the next
// coefficient costs one multiply-add over the cached power of q, so a
// degree-(n+1) extension of an already evaluated polynomial is O(1)
// exact operations. State is kept scaled by powers of q's denominator;
// the sign of the scaled integer is the sign of the sum.
class IncrementalEvaluator {
 public:
  explicit IncrementalEvaluator(Rational q)
      : q_(std::move(q)), scaled_(0), num_pow_(1), den_pow_(1), count_(0) {}

  // Appends coefficient c for the q^count term.
  void push(int coeff) {
    if (count_ == 0) {
      scaled_ = coeff;
    } else {
      scaled_ = scaled_ * q_.den() + coeff * num_pow_;
      den_pow_ *= q_.den();
    }
    num_pow_ *= q_.num();
    ++count_;
  }
  void push(Sign s) { push(to_int(s)); }

  int sign() const { return scaled_.sign(); }
  Rational value() const { return Rational(scaled_, den_pow_); }
  std::size_t size() const { return count_; }
  const Rational& q() const { return q_; }

 private:
  Rational q_;
  BigInt scaled_;    // sum of c_j num^j den^(count-1-j)
  BigInt num_pow_;   // num^count
  BigInt den_pow_;   // den^(count-1)
  std::size_t count_;
};

}  // namespace gduel
