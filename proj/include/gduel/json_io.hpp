#pragma once

#include <json.hpp>

#include <string>

#include "gduel/beta.hpp"
#include "gduel/duel.hpp"
#include "gduel/rational.hpp"
#include "gduel/simulate.hpp"
#include "gduel/thresholds.hpp"

// JSON views of the library's result types. Rationals are rendered as
// strings ("num/den", or "num" for integers) so no precision is lost;
// parsing the string with Rational::parse restores the exact value.

namespace gduel {

inline nlohmann::json to_json(const TableRow& row) {
  return nlohmann::json{{"round", row.round},
                        {"pA", row.alice_prob.to_string()},
                        {"pB", row.bob_prob.to_string()},
                        {"shooter", std::string(1, player_char(row.shooter))}};
}

inline nlohmann::json to_json(const SimConfig& config) {
  return nlohmann::json{{"p", config.params.p().to_string()},
                        {"q", config.params.q().to_string()},
                        {"max_rounds", config.max_rounds},
                        {"trials", config.trials},
                        {"seed", config.seed}};
}

inline nlohmann::json to_json(const SimResult& result) {
  return nlohmann::json{{"alice_wins", result.alice_wins},
                        {"bob_wins", result.bob_wins},
                        {"no_decision", result.no_decision},
                        {"empirical_pA", result.empirical_alice.to_string()},
                        {"empirical_pB", result.empirical_bob.to_string()},
                        {"analytic_pA", result.analytic_alice.to_string()},
                        {"analytic_pB", result.analytic_bob.to_string()}};
}

inline nlohmann::json to_json(const BetaExpansion& exp, const Rational& x,
                              const Rational& remainder) {
  nlohmann::json digits = nlohmann::json::array();
  for (auto d : exp.integer_digits()) digits.push_back(d);
  for (auto d : exp.fractional_digits()) digits.push_back(d);
  return nlohmann::json{{"base", exp.base().to_string()},
                        {"x", x.to_string()},
                        {"digits", digits},
                        {"remainder", remainder.to_string()}};
}

inline nlohmann::json to_json(const ThresholdRecord& rec, std::size_t k) {
  nlohmann::json j{{"k", k},
                   {"n", rec.source_n},
                   {"alpha_lo", rec.root.lo.to_string()},
                   {"alpha_hi", rec.root.hi.to_string()},
                   {"sign_change", rec.root.certified_sign_change},
                   {"running_lower_bound", rec.running_lower_bound.to_string()},
                   {"switching", rec.switching}};
  if (!rec.also_root_of.empty()) j["also_root_of"] = rec.also_root_of;
  return j;
}

}  // namespace gduel
