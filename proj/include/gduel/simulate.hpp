#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "gduel/duel.hpp"
#include "gduel/rational.hpp"
#include "gduel/rng.hpp"

namespace gduel {

struct SimConfig {
  DuelParams params;
  std::size_t max_rounds = 1;  // truncation horizon
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
};

struct SimResult {
  std::uint64_t alice_wins = 0;
  std::uint64_t bob_wins = 0;
  std::uint64_t no_decision = 0;
  Rational empirical_alice;  // alice_wins / trials
  Rational empirical_bob;
  Rational analytic_alice;   // P(A) by the end of round max_rounds-1, exact
  Rational analytic_bob;

  friend bool operator==(const SimResult&, const SimResult&) = default;
};

// Seeded Monte Carlo duel along the greedy firing sequence. Each trial
// draws one 64-bit xorshift64* stream whose seed is the trial-indexed
// SplitMix64 output, and a round hits iff the draw is below
// ceil(p * 2^64), so p is honored to within 2^-64 and results are
// identical across platforms and scheduling orders for a fixed seed.
// Duels can run forever; past max_rounds a trial counts as no_decision
// rather than being resampled, which keeps the empirical and analytic
// columns on the same event space.
inline SimResult run_sim(const SimConfig& config) {
  if (config.trials == 0) throw std::domain_error("simulation needs at least one trial");
  if (config.max_rounds == 0) throw std::domain_error("simulation needs at least one round");

  const FiringSequence seq =
      FiringSequence::generate(config.params, config.max_rounds);

  // hit  <=>  draw / 2^64 < p  <=>  draw < ceil(p * 2^64)
  const BigInt threshold_big =
      ((config.params.p().num() << 64) + config.params.p().den() - 1) /
      config.params.p().den();
  const bool always_hit = threshold_big >= (BigInt(1) << 64);
  const std::uint64_t threshold =
      always_hit ? 0 : threshold_big.convert_to<std::uint64_t>();

  SimResult result;
  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    XorShift64Star rng(SplitMix64::at(config.seed, trial));
    bool decided = false;
    for (std::size_t round = 0; round < config.max_rounds; ++round) {
      const std::uint64_t draw = rng.next();
      if (always_hit || draw < threshold) {
        (seq.sign_at(round) == Sign::minus ? result.alice_wins : result.bob_wins)++;
        decided = true;
        break;
      }
    }
    if (!decided) ++result.no_decision;
  }

  const Rational trials_r(BigInt(config.trials));
  result.empirical_alice = Rational(BigInt(result.alice_wins)) / trials_r;
  result.empirical_bob = Rational(BigInt(result.bob_wins)) / trials_r;
  result.analytic_alice = seq.alice_win_prob(config.max_rounds - 1);
  result.analytic_bob = seq.bob_win_prob(config.max_rounds - 1);
  return result;
}

}  // namespace gduel
