#pragma once

#include <cstdint>
#include <stdexcept>

namespace gduel {

// Two-valued symbol shared by firing sequences, Thue-Morse terms and the
// coefficients of sign polynomials. Alice is -1, Bob is +1.
enum class Sign : std::int8_t { minus = -1, plus = +1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator-(Sign s) {
  return s == Sign::minus ? Sign::plus : Sign::minus;
}

constexpr Sign sign_from_int(int v) {
  if (v == -1) return Sign::minus;
  if (v == 1) return Sign::plus;
  throw std::invalid_argument("sign value must be -1 or +1");
}

constexpr char player_char(Sign s) { return s == Sign::minus ? 'A' : 'B'; }

}  // namespace gduel
