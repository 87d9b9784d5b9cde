#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "gduel/duel.hpp"
#include "gduel/format.hpp"
#include "gduel/polynomial.hpp"
#include "gduel/thue_morse.hpp"
#include "oracles.hpp"

using namespace gduel;

TEST_CASE("first terms and the q = 0.9 mismatch position") {
  CHECK(tm_term(0) == Sign::minus);
  CHECK(tm_term(3) == Sign::minus);   // 11b has even parity
  CHECK(tm_term(20) == Sign::minus);  // 10100b, shooter A
  CHECK(render_signs(TMSequence(8).terms(), Alphabet::zero_one) == "01101001");
  CHECK(render_signs(TMSequence(8).terms(), Alphabet::ab) == "ABBABAAB");
}

TEST_CASE("bit parity agrees with the defining recurrences") {
  const auto table = oracle::tm_by_recurrence(1 << 16);
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (tm_term(i) != table[i]) {
      FAIL("mismatch at index " << i);
    }
  }
  for (std::uint64_t i = 0; i < (1u << 16); ++i) {
    REQUIRE(tm_term(2 * i) == tm_term(i));
    REQUIRE(tm_term(2 * i + 1) == -tm_term(2 * i));
  }
}

TEST_CASE("block view reproduces Thue-Morse on the pair alphabet") {
  const auto blocks8 = block_view(TMSequence(8));
  REQUIRE(blocks8.size() == 4);
  CHECK(blocks8 == std::vector<Sign>{Sign::minus, Sign::plus, Sign::plus, Sign::minus});

  CHECK(block_view(TMSequence(2)) == std::vector<Sign>{Sign::minus});

  const auto blocks = block_view(TMSequence(1 << 16));
  for (std::size_t i = 0; i < blocks.size(); ++i) REQUIRE(blocks[i] == tm_term(i));

  CHECK_THROWS_AS(block_view(TMSequence(7)), std::invalid_argument);
}

TEST_CASE("odd prefixes are balanced") {
  CHECK(balanced_prefix_sum(1) == 0);
  CHECK(balanced_prefix_sum(4) == 1);  // -1+1+1-1+1
  long long running = 0;
  for (std::uint64_t i = 0; i <= 20001; ++i) {
    running += to_int(tm_term(i));
    if (i % 2 == 1) REQUIRE(running == 0);
  }
  CHECK(balanced_prefix_sum(19999) == 0);
}

TEST_CASE("agreement length against the duel") {
  const auto q910 = FiringSequence::generate(
      DuelParams::from_q(Rational::parse("9/10")), 21);
  CHECK(render_signs(q910.signs(), Alphabet::ab) == "ABBABAABBAABABBABAABB");
  CHECK(agreement_length(q910) == 20);

  const auto q902 = FiringSequence::generate(
      DuelParams::from_q(Rational::parse("451/500")), 21);
  CHECK(agreement_length(q902) == 21);  // censored: no mismatch in window

  const auto q23 = FiringSequence::generate(
      DuelParams::from_q(Rational::parse("2/3")), 11);
  CHECK(agreement_length(q23) == 6);
  CHECK(q23.sign_at(6) == Sign::plus);
  CHECK(tm_term(6) == Sign::minus);
}

TEST_CASE("the duel converges to Thue-Morse as q grows toward 1") {
  for (std::size_t len : {8u, 16u, 32u, 64u}) {
    bool reached = false;
    for (int j = 1; j <= 40 && !reached; ++j) {
      const Rational q =
          Rational(1) - Rational::pow(Rational(BigInt(1), BigInt(2)), j);
      const auto seq = FiringSequence::generate(DuelParams::from_q(q), len);
      reached = agreement_length(seq) >= len;
    }
    CAPTURE(len);
    CHECK(reached);
  }
}

TEST_CASE("odd-index factorization f_(2m+1)(q) = (q-1) f_m(q^2) for m <= 32") {
  const RatPoly q_minus_1(std::vector<Rational>{-1, 1});
  for (std::size_t m = 1; m <= 32; ++m) {
    std::vector<Sign> low(m + 1), high(2 * m + 2);
    for (std::size_t j = 0; j <= m; ++j)
      low[j] = tm_term(m) == tm_term(j) ? Sign::plus : Sign::minus;
    for (std::size_t j = 0; j <= 2 * m + 1; ++j)
      high[j] = tm_term(2 * m + 1) == tm_term(j) ? Sign::plus : Sign::minus;
    const auto quotient = exact_divide(SignPolynomial(high), q_minus_1);
    REQUIRE(quotient.has_value());
    CHECK(to_integer_primitive(*quotient) ==
          SignPolynomial(low).to_polynomial().substitute_power(2));
  }
}

TEST_CASE("generating-function magnitude agrees with direct partial sums") {
  const Rational half(BigInt(1), BigInt(2));
  const auto result = tm_generating_magnitude(half, Rational::parse("1/2^40"));
  // Oracle: plain rational accumulation at the reported N and at N + 64;
  // both must sit within the tail of each other and of the result.
  auto direct = [&](std::uint64_t n) {
    Rational sum(0);
    Rational pw(1);
    for (std::uint64_t i = 0; i < n; ++i) {
      sum += Rational(to_int(tm_term(i))) * pw;
      pw *= half;
    }
    return sum.abs();
  };
  const Rational two_tails = Rational::parse("2/2^40");
  CHECK((result.magnitude - direct(result.terms)).abs() == Rational(0));
  CHECK((result.magnitude - direct(result.terms + 64)).abs() <= two_tails);
}

TEST_CASE("magnitude near zero is dominated by t_0") {
  const auto result =
      tm_generating_magnitude(Rational::parse("1/1000"), Rational::parse("1/10^9"));
  CHECK((result.magnitude - Rational(1)).abs() <= Rational::parse("2/1000"));
}

TEST_CASE("magnitude decays toward q = 1") {
  const Rational tail = Rational::parse("1/10^9");
  const auto near = tm_generating_magnitude(Rational::parse("63/64"), tail);
  const auto far = tm_generating_magnitude(Rational::parse("3/4"), tail);
  CHECK(near.magnitude < far.magnitude);
}

TEST_CASE("magnitude rejects out-of-range arguments") {
  CHECK_THROWS_AS(tm_generating_magnitude(Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(tm_generating_magnitude(Rational::parse("1/2"), Rational(0)),
                  std::domain_error);
}
