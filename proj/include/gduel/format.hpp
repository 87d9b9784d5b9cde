#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gduel/rational.hpp"
#include "gduel/sign.hpp"

namespace gduel {

enum class Alphabet { ab, pm1, zero_one };

// How {0,1} renders: the duel and the expansion machinery map Alice (-1)
// to 1, while the plain Thue-Morse export uses the usual parity digits
// with -1 as 0.
enum class ZeroOneMap { minus_is_zero, minus_is_one };

inline Alphabet parse_alphabet(const std::string& name) {
  if (name == "AB" || name == "ab") return Alphabet::ab;
  if (name == "pm1") return Alphabet::pm1;
  if (name == "01") return Alphabet::zero_one;
  throw std::invalid_argument("unknown alphabet: '" + name + "'");
}

inline char render_sign(Sign s, Alphabet alphabet, ZeroOneMap map) {
  switch (alphabet) {
    case Alphabet::ab:
      return player_char(s);
    case Alphabet::pm1:
      return s == Sign::minus ? '-' : '+';
    case Alphabet::zero_one: {
      const bool one = (s == Sign::minus) == (map == ZeroOneMap::minus_is_one);
      return one ? '1' : '0';
    }
  }
  throw std::logic_error("unreachable alphabet");
}

inline std::string render_signs(const std::vector<Sign>& signs, Alphabet alphabet,
                                ZeroOneMap map = ZeroOneMap::minus_is_zero) {
  std::string out;
  out.reserve(signs.size());
  for (Sign s : signs) out += render_sign(s, alphabet, map);
  return out;
}

// Fixed-point decimal approximation with `digits` places, rounded to
// nearest (ties away from zero). Display-only; exact values stay in
// Rational everywhere decisions are made.
inline std::string decimal_approx(const Rational& value, unsigned digits) {
  BigInt scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  BigInt scaled_twice = value.num() * scale * 2;
  const bool negative = scaled_twice < 0;
  if (negative) scaled_twice = -scaled_twice;
  BigInt rounded = (scaled_twice / value.den() + 1) / 2;
  BigInt ip = rounded / scale;
  BigInt fp = rounded % scale;
  std::string out = negative && rounded != 0 ? "-" : "";
  out += ip.str();
  if (digits > 0) {
    std::string frac = fp.str();
    out += '.';
    out += std::string(digits - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace gduel
