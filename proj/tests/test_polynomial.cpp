#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "gduel/duel.hpp"
#include "gduel/polynomial.hpp"
#include "gduel/rng.hpp"
#include "gduel/thue_morse.hpp"
#include "oracles.hpp"

using namespace gduel;

namespace {

SignPolynomial sign_poly(std::initializer_list<int> coeffs) {
  std::vector<Sign> s;
  for (int c : coeffs) s.push_back(sign_from_int(c));
  return SignPolynomial(std::move(s));
}

std::vector<int> int_coeffs(const SignPolynomial& p) {
  std::vector<int> out;
  for (Sign s : p.coeffs()) out.push_back(to_int(s));
  return out;
}

// Stabilized f_n: coefficients t_n * t_j.
SignPolynomial tm_f(std::size_t n) {
  std::vector<Sign> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j)
    c[j] = tm_term(n) == tm_term(j) ? Sign::plus : Sign::minus;
  return SignPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("eval_sign on the golden-ratio polynomial") {
  const SignPolynomial f2 = sign_poly({-1, 1, 1});  // q^2 + q - 1
  CHECK(f2.eval_sign(Rational(BigInt(2), BigInt(3))) == 1);   // 1/9 > 0
  CHECK(f2.eval_sign(Rational(BigInt(1), BigInt(2))) == -1);  // -1/4
  CHECK(f2.eval_sign(Rational(BigInt(0), BigInt(1))) == -1);
}

TEST_CASE("eval_sign of f_5 at 9/10 matches term-by-term exact summation") {
  const SignPolynomial f5 = tm_f(5);
  const Rational q(BigInt(9), BigInt(10));
  CHECK(f5.eval_sign(q) == oracle::horner_sign(int_coeffs(f5), q));
}

TEST_CASE("eval_sign agrees with a naive Horner oracle at random degrees up to 256") {
  XorShift64Star rng(0x5151ULL);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t deg = rng.next() % 257;
    std::vector<Sign> coeffs(deg + 1);
    for (auto& c : coeffs) c = (rng.next() & 1) ? Sign::plus : Sign::minus;
    const SignPolynomial poly(coeffs);
    const Rational q = oracle::random_unit_rational(rng, 40);
    CHECK(poly.eval_sign(q) == oracle::horner_sign(int_coeffs(poly), q));
  }
}

TEST_CASE("incremental evaluator tracks every prefix") {
  XorShift64Star rng(0xabcdULL);
  const Rational q = oracle::random_unit_rational(rng, 30);
  IncrementalEvaluator eval(q);
  std::vector<int> coeffs;
  for (int i = 0; i <= 100; ++i) {
    coeffs.push_back((rng.next() & 1) ? 1 : -1);
    eval.push(coeffs.back());
    REQUIRE(eval.size() == coeffs.size());
    CHECK(eval.sign() == oracle::horner_sign(coeffs, q));
  }
  CHECK(eval.value() == oracle::horner_value(coeffs, q));
}

TEST_CASE("polynomial eval, derivative and shift are consistent") {
  // p = 3x^3 - x + 2
  const RatPoly p(std::vector<Rational>{2, -1, 0, 3});
  CHECK(p.eval(Rational(2)) == Rational(24));
  CHECK(p.derivative().eval(Rational(2)) == Rational(35));
  const RatPoly shifted = taylor_shift(p, Rational(5));
  XorShift64Star rng(9);
  for (int i = 0; i < 20; ++i) {
    const Rational x = oracle::random_unit_rational(rng);
    CHECK(shifted.eval(x) == p.eval(x + Rational(5)));
  }
  CHECK(p.substitute_power(2).eval(Rational(3)) == p.eval(Rational(9)));
}

TEST_CASE("exact division certifies the odd-index factorization at m = 1") {
  // f_3 has coefficients a_3 * (a_0..a_3) = (1, -1, -1, 1).
  const SignPolynomial f3 = tm_f(3);
  CHECK(int_coeffs(f3) == std::vector<int>{1, -1, -1, 1});
  const RatPoly q_minus_1(std::vector<Rational>{-1, 1});
  const auto quotient = exact_divide(f3, q_minus_1);
  REQUIRE(quotient.has_value());
  // f_1(q^2) with f_1 = q - 1.
  const RatPoly f1_sq = RatPoly(std::vector<Rational>{-1, 1}).substitute_power(2);
  CHECK(*quotient == f1_sq);
}

TEST_CASE("non-divisibility is a result, not a crash") {
  const SignPolynomial f2 = sign_poly({-1, 1, 1});
  const RatPoly q_minus_1(std::vector<Rational>{-1, 1});
  CHECK_FALSE(exact_divide(f2, q_minus_1).has_value());
}

TEST_CASE("f_15 / (q-1) equals f_7(q^2), checked against symbolic multiplication") {
  const SignPolynomial f15 = tm_f(15);
  const auto quotient = exact_divide(f15, RatPoly(std::vector<Rational>{-1, 1}));
  REQUIRE(quotient.has_value());
  const IntPoly f7_sq = tm_f(7).to_polynomial().substitute_power(2);
  CHECK(to_integer_primitive(*quotient) == f7_sq);
  // Independent route: expand (q - 1) * f_7(q^2) coefficient by coefficient.
  const auto product =
      oracle::naive_multiply(std::vector<BigInt>{-1, 1}, f7_sq.coeffs());
  CHECK(IntPoly(product) == f15.to_polynomial());
}

TEST_CASE("integer gcd and square-free part collapse repeated factors") {
  const IntPoly double_root(std::vector<BigInt>{1, -4, 4});  // (2x-1)^2
  const IntPoly other(std::vector<BigInt>{1, 3});            // 3x+1
  const IntPoly p = double_root * other;
  const IntPoly g = integer_gcd(p, p.derivative());
  CHECK(g == IntPoly(std::vector<BigInt>{-1, 2}));  // 2x-1 up to sign
  const IntPoly sf = squarefree_part(p);
  CHECK(sf.degree() == 2);
  CHECK(integer_gcd(sf, sf.derivative()).degree() == 0);
  // Same roots: sf vanishes exactly where p does.
  CHECK(sign_at(sf, Rational(BigInt(1), BigInt(2))) == 0);
  CHECK(sign_at(sf, Rational(BigInt(-1), BigInt(3))) == 0);
}

TEST_CASE("deflate_root removes exactly one linear factor") {
  const IntPoly p(std::vector<BigInt>{-1, 0, 0, 1});  // x^3 - 1
  const IntPoly q = deflate_root(p, Rational(1));
  CHECK(q == IntPoly(std::vector<BigInt>{1, 1, 1}));
  CHECK_THROWS_AS(deflate_root(p, Rational(2)), std::logic_error);
}

TEST_CASE("sign polynomials are never empty") {
  CHECK_THROWS_AS(SignPolynomial(std::vector<Sign>{}), std::invalid_argument);
}
