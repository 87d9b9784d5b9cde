#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gduel/polynomial.hpp"
#include "gduel/rational.hpp"
#include "gduel/sign.hpp"

namespace gduel {

// Per-shot hit probability p and miss probability q = 1 - p, both exact,
// with 0 < p < 1. p and q always share a denominator in lowest terms.
class DuelParams {
 public:
  static DuelParams from_p(Rational p) {
    if (!(Rational(0) < p) || !(p < Rational(1)))
      throw std::domain_error("hit probability must satisfy 0 < p < 1");
    Rational q = Rational(1) - p;
    return DuelParams(std::move(p), std::move(q));
  }
  static DuelParams from_q(Rational q) {
    if (!(Rational(0) < q) || !(q < Rational(1)))
      throw std::domain_error("miss probability must satisfy 0 < q < 1");
    Rational p = Rational(1) - q;
    return DuelParams(std::move(p), std::move(q));
  }

  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

 private:
  DuelParams(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}
  Rational p_;
  Rational q_;
};

// Greedy firing sequence: Alice shoots round 0; afterwards the turn
// switches exactly when the current shooter's cumulative win probability
// meets or exceeds the opponent's. Equivalently, a_{n+1} = -a_n iff
// f_n(q) = a_n * sum_j a_j q^j is >= 0, decided by exact sign tests.
//
// The value is immutable; extended() returns a longer copy. Internally
// the running sum and the win probabilities are kept scaled by powers of
// q's denominator so each extension costs O(1) big-integer operations.
class FiringSequence {
 public:
  static FiringSequence start(const DuelParams& params) { return FiringSequence(params); }

  static FiringSequence generate(const DuelParams& params, std::size_t rounds) {
    if (rounds == 0) throw std::domain_error("a duel needs at least one round");
    FiringSequence seq(params);
    while (seq.length() < rounds) seq.grow();
    return seq;
  }

  FiringSequence extended() const {
    FiringSequence next(*this);
    next.grow();
    return next;
  }

  std::size_t length() const { return signs_.size(); }
  const DuelParams& params() const { return params_; }
  const std::vector<Sign>& signs() const { return signs_; }
  Sign sign_at(std::size_t i) const { return signs_.at(i); }
  // Cumulative win probabilities by the end of round i.
  const Rational& alice_win_prob(std::size_t i) const { return pa_.at(i); }
  const Rational& bob_win_prob(std::size_t i) const { return pb_.at(i); }

  // f_n with coefficients a_n*a_0 ... a_n*a_n; satisfies
  // f_n(q) = a_n * (P(B_n) - P(A_n)) / p exactly.
  SignPolynomial f_polynomial(std::size_t n) const {
    if (n >= signs_.size()) throw std::out_of_range("f_polynomial index past the sequence");
    std::vector<Sign> coeffs(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
      coeffs[j] = signs_[n] == signs_[j] ? Sign::plus : Sign::minus;
    return SignPolynomial(std::move(coeffs));
  }

 private:
  explicit FiringSequence(const DuelParams& params)
      : params_(params),
        signs_{Sign::minus},
        d_scaled_(-1),
        num_pow_(params.q().num()),
        den_pow_(params.q().den()),
        pa_scaled_(params.q().den() - params.q().num()),
        pb_scaled_(0) {
    pa_.emplace_back(params_.p());
    pb_.emplace_back(0);
  }

  void grow() {
    const BigInt& num = params_.q().num();
    const BigInt& den = params_.q().den();
    const Sign last = signs_.back();
    // sign(f_n(q)) = a_n * sign(sum a_j q^j); the sum is cached scaled.
    const int f_sign = to_int(last) * d_scaled_.sign();
    const Sign next = f_sign >= 0 ? -last : last;
    signs_.push_back(next);

    d_scaled_ = d_scaled_ * den + to_int(next) * num_pow_;
    const BigInt hit = (den - num) * num_pow_;  // p * q^(n+1), scaled by den^(n+2)
    pa_scaled_ *= den;
    pb_scaled_ *= den;
    (next == Sign::minus ? pa_scaled_ : pb_scaled_) += hit;
    num_pow_ *= num;
    den_pow_ *= den;
    pa_.emplace_back(pa_scaled_, den_pow_);
    pb_.emplace_back(pb_scaled_, den_pow_);
  }

  DuelParams params_;
  std::vector<Sign> signs_;
  std::vector<Rational> pa_;
  std::vector<Rational> pb_;
  BigInt d_scaled_;   // sum a_j num^j den^(n-j)
  BigInt num_pow_;    // num^(n+1)
  BigInt den_pow_;    // den^(n+1)
  BigInt pa_scaled_;  // P(A_n) * den^(n+1)
  BigInt pb_scaled_;  // P(B_n) * den^(n+1)
};

struct TableRow {
  std::size_t round;
  Rational alice_prob;
  Rational bob_prob;
  Sign shooter;
};

inline std::vector<TableRow> probability_table(const DuelParams& params,
                                               std::size_t rounds) {
  FiringSequence seq = FiringSequence::generate(params, rounds);
  std::vector<TableRow> rows;
  rows.reserve(rounds);
  for (std::size_t i = 0; i < rounds; ++i)
    rows.push_back({i, seq.alice_win_prob(i), seq.bob_win_prob(i), seq.sign_at(i)});
  return rows;
}

}  // namespace gduel
