#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gduel/duel.hpp"
#include "gduel/rational.hpp"
#include "gduel/sign.hpp"

namespace gduel {

// Digit string in a (possibly fractional) base beta > 1, split around
// the radix point. Digits live in {0, ..., floor(beta)}; partial sums
// are exact rationals and nondecreasing in the number of digits taken.
class BetaExpansion {
 public:
  BetaExpansion(Rational base, std::vector<std::int64_t> integer_digits,
                std::vector<std::int64_t> fractional_digits)
      : base_(std::move(base)),
        int_digits_(std::move(integer_digits)),
        frac_digits_(std::move(fractional_digits)) {
    if (!(base_ > Rational(1))) throw std::domain_error("expansion base must exceed 1");
    const BigInt fb = base_.floor();
    if (fb > BigInt(std::int64_t{1} << 62))
      throw std::domain_error("expansion base too large");
    max_digit_ = fb.convert_to<std::int64_t>();
    for (auto d : int_digits_) check_digit(d);
    for (auto d : frac_digits_) check_digit(d);
  }

  const Rational& base() const { return base_; }
  std::int64_t max_digit() const { return max_digit_; }
  const std::vector<std::int64_t>& integer_digits() const { return int_digits_; }
  const std::vector<std::int64_t>& fractional_digits() const { return frac_digits_; }
  std::size_t digit_count() const { return int_digits_.size() + frac_digits_.size(); }

  // Position (exponent of beta) of the i-th digit, counted from the most
  // significant provided digit.
  long long position_of(std::size_t i) const {
    const long long top = static_cast<long long>(int_digits_.size()) - 1;
    return top - static_cast<long long>(i);
  }

  // Exact value of the first `prefix_len` digits.
  Rational partial_sum(std::size_t prefix_len) const {
    Rational sum(0);
    Rational pw = Rational::pow(base_, position_of(0));
    const Rational inv = Rational(1) / base_;
    for (std::size_t i = 0; i < prefix_len && i < digit_count(); ++i) {
      sum += Rational(digit(i)) * pw;
      pw *= inv;
    }
    return sum;
  }

  Rational value() const { return partial_sum(digit_count()); }

  std::int64_t digit(std::size_t i) const {
    return i < int_digits_.size() ? int_digits_[i]
                                  : frac_digits_[i - int_digits_.size()];
  }

  // 0 <-> 1 complement, defined for expansions over {0, 1}.
  BetaExpansion complemented() const {
    if (max_digit_ != 1)
      throw std::domain_error("complement is defined for digit set {0, 1}");
    auto flip = [](std::vector<std::int64_t> v) {
      for (auto& d : v) d = 1 - d;
      return v;
    };
    return BetaExpansion(base_, flip(int_digits_), flip(frac_digits_));
  }

  std::string digit_string() const {
    std::string out;
    if (int_digits_.empty())
      out += '0';
    else
      for (auto d : int_digits_) append_digit(out, d);
    if (!frac_digits_.empty()) {
      out += '.';
      for (auto d : frac_digits_) append_digit(out, d);
    }
    return out;
  }

  friend bool operator==(const BetaExpansion& a, const BetaExpansion& b) {
    return a.base_ == b.base_ && a.int_digits_ == b.int_digits_ &&
           a.frac_digits_ == b.frac_digits_;
  }

 private:
  void check_digit(std::int64_t d) const {
    if (d < 0 || d > max_digit_)
      throw std::domain_error("digit outside {0..floor(base)}");
  }
  static void append_digit(std::string& out, std::int64_t d) {
    if (d <= 9) {
      out += static_cast<char>('0' + d);
    } else {
      out += '[';
      out += std::to_string(d);
      out += ']';
    }
  }

  Rational base_;
  std::vector<std::int64_t> int_digits_;
  std::vector<std::int64_t> frac_digits_;
  std::int64_t max_digit_ = 0;
};

struct GreedyResult {
  BetaExpansion expansion;
  Rational remainder;  // x minus the value of the emitted digits, exact
};

// Renyi greedy construction: at each position take the largest digit
// that keeps the partial sum at or below x. Digits are emitted at
// positions start_pos, start_pos-1, ...; the default start_pos = -1
// produces a purely fractional expansion.
inline GreedyResult greedy_expansion(const Rational& x, const Rational& beta,
                                     std::size_t digit_count, long long start_pos = -1) {
  if (x.sign() < 0) throw std::domain_error("greedy expansion needs x >= 0");
  if (!(beta > Rational(1))) throw std::domain_error("expansion base must exceed 1");
  const BigInt fb_big = beta.floor();
  const Rational fb(fb_big);
  // Everything from start_pos down can reach at most
  // floor(beta) * beta^(start_pos+1) / (beta - 1).
  const Rational reach = fb * Rational::pow(beta, start_pos + 1) / (beta - Rational(1));
  if (x > reach)
    throw std::domain_error("x is not representable from the requested starting position");
  if (start_pos >= 0 && digit_count < static_cast<std::size_t>(start_pos) + 1)
    throw std::invalid_argument("digit budget does not cover the integer positions");

  std::vector<std::int64_t> int_digits;
  std::vector<std::int64_t> frac_digits;
  Rational sum(0);
  Rational pw = Rational::pow(beta, start_pos);
  const Rational inv = Rational(1) / beta;
  for (std::size_t k = 0; k < digit_count; ++k) {
    const long long pos = start_pos - static_cast<long long>(k);
    BigInt d = ((x - sum) / pw).floor();
    if (d > fb_big) d = fb_big;
    if (d < 0) d = 0;
    const std::int64_t dv = d.convert_to<std::int64_t>();
    if (dv != 0) sum += Rational(d) * pw;
    (pos >= 0 ? int_digits : frac_digits).push_back(dv);
    pw *= inv;
  }
  BetaExpansion exp(beta, std::move(int_digits), std::move(frac_digits));
  return {std::move(exp), x - sum};
}

// Firing-sequence expansion of n/2 in base 1 + 1/n: the duel is run at
// q = n/(n+1) and round i becomes fractional digit i+1, Alice -> 1,
// Bob -> 0.
inline BetaExpansion duel_expansion(std::size_t n, std::size_t digit_count) {
  if (n < 2) throw std::domain_error("duel expansion needs n >= 2");
  if (digit_count == 0) throw std::domain_error("duel expansion needs at least one digit");
  const Rational q(BigInt(n), BigInt(n + 1));
  const FiringSequence seq =
      FiringSequence::generate(DuelParams::from_q(q), digit_count);
  std::vector<std::int64_t> digits;
  digits.reserve(digit_count);
  for (std::size_t i = 0; i < digit_count; ++i)
    digits.push_back(seq.sign_at(i) == Sign::minus ? 1 : 0);
  return BetaExpansion(Rational(1) / q, {}, std::move(digits));
}

struct ValidityReport {
  bool valid = false;
  // Shortest digit prefix that already fails, when invalid. Prefix 0
  // failing means x itself exceeds what any digits could represent.
  std::optional<std::size_t> first_violation;
};

// Checks that every digit prefix neither overshoots x nor falls so far
// behind that the remaining positions could no longer close the gap:
// 0 <= x - S_m <= floor(beta) * beta^(pos of last digit) / (beta - 1).
inline ValidityReport validate_expansion(const Rational& x, const BetaExpansion& exp) {
  const Rational fb(BigInt(exp.max_digit()));
  const Rational beta = exp.base();
  const Rational tail_unit = fb / (beta - Rational(1));
  Rational sum(0);
  Rational pw = Rational::pow(beta, exp.position_of(0));
  for (std::size_t m = 0; m <= exp.digit_count(); ++m) {
    const Rational diff = x - sum;
    // After m digits the last consumed position is position_of(m-1);
    // for m = 0 nothing is consumed and the tail starts one higher.
    const Rational tail_max = tail_unit * pw * beta;
    if (diff.sign() < 0 || diff > tail_max) return {false, m};
    if (m < exp.digit_count()) {
      sum += Rational(exp.digit(m)) * pw;
      pw = pw / beta;
    }
  }
  return {true, std::nullopt};
}

// First 1-based index where the fractional digit streams differ, or
// nullopt when one is a prefix of the other.
inline std::optional<std::size_t> first_disagreement(const BetaExpansion& a,
                                                     const BetaExpansion& b) {
  const auto& da = a.fractional_digits();
  const auto& db = b.fractional_digits();
  const std::size_t n = std::min(da.size(), db.size());
  for (std::size_t i = 0; i < n; ++i)
    if (da[i] != db[i]) return i + 1;
  return std::nullopt;
}

struct HalfLimitResult {
  Rational gap_alice;  // | sum_{i in S_A, i < rounds} q^i - 1/(2p) |
  Rational gap_bob;
  Rational bound;      // q^rounds / (1 - q)
  bool within_alice = false;
  bool within_bob = false;
};

// Both players' exact power sums approach 1/(2p); the deviation after
// `rounds` rounds is compared against the geometric tail.
inline HalfLimitResult half_limit_check(const DuelParams& params, std::size_t rounds) {
  const Rational half_target = Rational(1) / (Rational(2) * params.p());
  const Rational bound =
      Rational::pow(params.q(), static_cast<long long>(rounds)) / params.p();
  Rational sum_alice(0), sum_bob(0);
  if (rounds > 0) {
    const FiringSequence seq = FiringSequence::generate(params, rounds);
    sum_alice = seq.alice_win_prob(rounds - 1) / params.p();
    sum_bob = seq.bob_win_prob(rounds - 1) / params.p();
  }
  HalfLimitResult r;
  r.gap_alice = (sum_alice - half_target).abs();
  r.gap_bob = (sum_bob - half_target).abs();
  r.bound = bound;
  r.within_alice = r.gap_alice <= bound;
  r.within_bob = r.gap_bob <= bound;
  return r;
}

}  // namespace gduel
