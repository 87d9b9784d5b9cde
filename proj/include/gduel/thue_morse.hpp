#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gduel/duel.hpp"
#include "gduel/rational.hpp"
#include "gduel/sign.hpp"

namespace gduel {

// t_n = -1 iff the binary expansion of n has an even number of ones.
// Consistent with the recurrences t_0 = -1, t_{2i} = t_i,
// t_{2i+1} = -t_{2i}.
inline Sign tm_term(std::uint64_t n) {
  return (std::popcount(n) & 1u) == 0 ? Sign::minus : Sign::plus;
}

class TMSequence {
 public:
  explicit TMSequence(std::size_t length) {
    terms_.reserve(length);
    for (std::size_t i = 0; i < length; ++i) terms_.push_back(tm_term(i));
  }

  std::size_t length() const { return terms_.size(); }
  const std::vector<Sign>& terms() const { return terms_; }
  Sign operator[](std::size_t i) const { return terms_[i]; }

 private:
  std::vector<Sign> terms_;
};

// Collapses consecutive pairs (t_{2i}, t_{2i+1}) to single symbols,
// (-1,+1) -> -1 and (+1,-1) -> +1. The result is again the Thue-Morse
// sequence on that two-letter block alphabet.
inline std::vector<Sign> block_view(const TMSequence& seq) {
  if (seq.length() % 2 != 0)
    throw std::invalid_argument("block view needs an even-length sequence");
  std::vector<Sign> blocks;
  blocks.reserve(seq.length() / 2);
  for (std::size_t i = 0; i + 1 < seq.length(); i += 2) {
    if (seq[i] == seq[i + 1])
      throw std::logic_error("adjacent Thue-Morse terms cannot be equal");
    blocks.push_back(seq[i] == Sign::minus ? Sign::minus : Sign::plus);
  }
  return blocks;
}

// Sum of t_0 .. t_m inclusive; zero whenever m is odd.
inline long long balanced_prefix_sum(std::uint64_t m) {
  long long sum = 0;
  for (std::uint64_t i = 0; i <= m; ++i) sum += to_int(tm_term(i));
  return sum;
}

// Length of the longest common prefix between the firing sequence and
// Thue-Morse. A return value equal to the generated length means no
// mismatch was seen inside the window; extend the sequence to certify a
// true mismatch index.
inline std::size_t agreement_length(const FiringSequence& seq) {
  for (std::size_t i = 0; i < seq.length(); ++i)
    if (seq.sign_at(i) != tm_term(i)) return i;
  return seq.length();
}

struct MagnitudeResult {
  Rational magnitude;  // |sum_{i<terms} t_i q^i|, exact
  std::uint64_t terms;
};

namespace detail {

// Smallest N with q^N / (1 - q) <= bound, found by exact doubling plus
// binary search on fast exact powers.
inline std::uint64_t tail_cutoff(const Rational& q, const Rational& bound) {
  const Rational limit = bound * (Rational(1) - q);
  auto ok = [&](std::uint64_t n) {
    return Rational::pow(q, static_cast<long long>(n)) <= limit;
  };
  std::uint64_t hi = 1;
  while (!ok(hi)) {
    hi *= 2;
    if (hi > (1ull << 40)) throw std::domain_error("tail bound out of reach");
  }
  std::uint64_t lo = hi / 2;  // ok(hi), !ok(lo) unless hi == 1
  while (lo + 1 < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (ok(mid) ? hi : lo) = mid;
  }
  return ok(lo) ? lo : hi;
}

}  // namespace detail

// Magnitude of the Thue-Morse generating function at q, truncated where
// the geometric tail q^N/(1-q) drops below tail_bound. The truncated sum
// itself is exact.
inline MagnitudeResult tm_generating_magnitude(const Rational& q,
                                               const Rational& tail_bound) {
  if (!(Rational(0) < q) || !(q < Rational(1)))
    throw std::domain_error("q must lie strictly between 0 and 1");
  if (tail_bound.sign() <= 0) throw std::domain_error("tail bound must be positive");
  const std::uint64_t n = detail::tail_cutoff(q, tail_bound);
  if (n == 0) return {Rational(0), 0};
  // sum_{i<n} t_i q^i scaled by den^(n-1), accumulated term by term so
  // only integer arithmetic runs: acc_k = sum_{i<k} t_i num^i den^(k-1-i).
  BigInt acc = 0;
  BigInt num_pow = 1;
  BigInt den_pow = 1;  // den^(n-1) once the loop finishes
  for (std::uint64_t i = 0; i < n; ++i) {
    if (i > 0) {
      acc *= q.den();
      den_pow *= q.den();
    }
    acc += to_int(tm_term(i)) * num_pow;
    num_pow *= q.num();
  }
  return {Rational(acc, den_pow).abs(), n};
}

}  // namespace gduel
