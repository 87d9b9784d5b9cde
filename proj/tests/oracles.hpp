#pragma once

// Reference implementations used only by tests. Each one recomputes a
// quantity along a different route than the library so the two sides
// can check each other.

#include <cstdint>
#include <utility>
#include <vector>

#include "gduel/duel.hpp"
#include "gduel/polynomial.hpp"
#include "gduel/rational.hpp"
#include "gduel/rng.hpp"
#include "gduel/sign.hpp"

namespace oracle {

using gduel::BigInt;
using gduel::DuelParams;
using gduel::Rational;
using gduel::Sign;

// Plain Horner over rationals; the library path scales by denominator
// powers and never forms the rational value.
inline int horner_sign(const std::vector<int>& coeffs, const Rational& q) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * q + Rational(coeffs[i]);
  return acc.sign();
}

inline Rational horner_value(const std::vector<int>& coeffs, const Rational& q) {
  Rational acc(0);
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * q + Rational(coeffs[i]);
  return acc;
}

struct VerbalDuel {
  std::vector<Sign> shooters;
  std::vector<Rational> alice;  // cumulative win probability per round
  std::vector<Rational> bob;
};

// The greedy rule straight from its verbal statement: the shooter keeps
// the gun until their cumulative win probability meets or exceeds the
// opponent's, then hands it over. Probabilities are tracked directly;
// no decision polynomial is ever formed.
inline VerbalDuel verbal_duel(const Rational& p, std::size_t rounds) {
  VerbalDuel d;
  const Rational q = Rational(1) - p;
  Rational pa(0), pb(0);
  Rational qpow(1);  // probability everyone missed so far
  Sign shooter = Sign::minus;
  for (std::size_t round = 0; round < rounds; ++round) {
    if (round > 0) {
      const Rational& mine = shooter == Sign::minus ? pa : pb;
      const Rational& theirs = shooter == Sign::minus ? pb : pa;
      if (mine >= theirs) shooter = -shooter;
    }
    (shooter == Sign::minus ? pa : pb) += p * qpow;
    qpow *= q;
    d.shooters.push_back(shooter);
    d.alice.push_back(pa);
    d.bob.push_back(pb);
  }
  return d;
}

// Thue-Morse via the recurrences themselves (t_0 = -1, t_{2i} = t_i,
// t_{2i+1} = -t_{2i}); the library uses bit parity.
inline std::vector<Sign> tm_by_recurrence(std::size_t length) {
  std::vector<Sign> t;
  t.reserve(length);
  if (length > 0) t.push_back(Sign::minus);
  for (std::size_t i = 1; i < length; ++i)
    t.push_back(i % 2 == 0 ? t[i / 2] : -t[i / 2]);
  return t;
}

// Uniform random rational in (0, 1) with denominator <= max_den.
inline Rational random_unit_rational(gduel::XorShift64Star& rng,
                                     std::uint64_t max_den = 64) {
  const std::uint64_t den = 2 + rng.next() % (max_den - 1);
  const std::uint64_t num = 1 + rng.next() % (den - 1);
  return Rational(BigInt(num), BigInt(den));
}

// Schoolbook product of two integer coefficient lists.
inline std::vector<BigInt> naive_multiply(const std::vector<BigInt>& a,
                                          const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace oracle
