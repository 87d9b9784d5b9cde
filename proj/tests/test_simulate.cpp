#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "gduel/json_io.hpp"
#include "gduel/rng.hpp"
#include "gduel/simulate.hpp"
#include "oracles.hpp"

using namespace gduel;

namespace {

// |empirical - expected| <= sigmas * sqrt(expected (1-expected) / trials),
// compared exactly by squaring both sides.
bool within_sigma(const Rational& empirical, const Rational& expected,
                  std::uint64_t trials, int sigmas) {
  const Rational diff = empirical - expected;
  return diff * diff * Rational(BigInt(trials)) <=
         Rational(sigmas * sigmas) * expected * (Rational(1) - expected);
}

}  // namespace

TEST_CASE("splitmix64 reference vectors") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);

  SplitMix64 rng42(42);
  CHECK(rng42.next() == 0xBDD732262FEB6E95ull);

  // Jumping to index i matches stepping i times.
  SplitMix64 stepper(7);
  for (std::uint64_t i = 0; i < 5; ++i) CHECK(SplitMix64::at(7, i) == stepper.next());
}

TEST_CASE("xorshift64* reference vectors") {
  XorShift64Star rng(1);
  CHECK(rng.next() == 0x47E4CE4B896CDD1Dull);
  CHECK(rng.next() == 0xABCFA6A8E079651Dull);
  CHECK(rng.next() == 0xB9D10D8FEB731F57ull);

  // Zero states are remapped, never silently stuck.
  XorShift64Star zero(0);
  CHECK(zero.next() == XorShift64Star(SplitMix64::kGamma).next());
  CHECK(zero.next() != 0);
}

TEST_CASE("the hit threshold honors p to 2^-64") {
  // ceil(2^64 / 3) for p = 1/3.
  const BigInt expected("6148914691236517206");
  const Rational p(BigInt(1), BigInt(3));
  const BigInt threshold = ((p.num() << 64) + p.den() - 1) / p.den();
  CHECK(threshold == expected);
}

TEST_CASE("identical configs give byte-identical results") {
  const SimConfig config{DuelParams::from_p(Rational::parse("1/3")), 32, 20000, 99};
  const SimResult a = run_sim(config);
  const SimResult b = run_sim(config);
  CHECK(a == b);
  CHECK(to_json(a).dump() == to_json(b).dump());
  // A different seed perturbs the tallies.
  SimConfig other = config;
  other.seed = 100;
  CHECK(run_sim(other) != a);
}

TEST_CASE("empirical frequencies sit within four binomial sigmas") {
  const SimConfig config{DuelParams::from_p(Rational::parse("1/3")), 64, 100000, 7};
  const SimResult r = run_sim(config);
  CHECK(r.alice_wins + r.bob_wins + r.no_decision == config.trials);
  CHECK(within_sigma(r.empirical_alice, r.analytic_alice, config.trials, 4));
  CHECK(within_sigma(r.empirical_bob, r.analytic_bob, config.trials, 4));
  const Rational q64 = Rational::pow(config.params.q(), 64);
  CHECK(within_sigma(Rational(BigInt(r.no_decision)) / Rational(BigInt(config.trials)),
                     q64, config.trials, 4));
}

TEST_CASE("a single almost-certain round behaves like a Bernoulli draw") {
  const SimConfig config{DuelParams::from_p(Rational::parse("999/1000")), 1, 100000, 3};
  const SimResult r = run_sim(config);
  CHECK(r.bob_wins == 0);  // Alice alone shoots in round 0
  CHECK(r.analytic_alice == Rational::parse("999/1000"));
  CHECK(within_sigma(r.empirical_alice, r.analytic_alice, config.trials, 4));
  CHECK(within_sigma(Rational(BigInt(r.no_decision)) / Rational(BigInt(config.trials)),
                     Rational::parse("1/1000"), config.trials, 4));
}

TEST_CASE("at most one of five settings may drift past three sigmas") {
  const struct {
    const char* p;
    std::size_t horizon;
  } settings[] = {
      {"1/3", 64}, {"1/10", 48}, {"1/2", 16}, {"9/10", 8}, {"2/5", 32}};
  int outliers = 0;
  std::uint64_t seed = 1000;
  for (const auto& s : settings) {
    const SimConfig config{DuelParams::from_p(Rational::parse(s.p)), s.horizon, 40000,
                           seed++};
    const SimResult r = run_sim(config);
    if (!within_sigma(r.empirical_alice, r.analytic_alice, config.trials, 3) ||
        !within_sigma(r.empirical_bob, r.analytic_bob, config.trials, 3))
      ++outliers;
  }
  CHECK(outliers <= 1);
}

TEST_CASE("configs are validated") {
  const auto params = DuelParams::from_p(Rational::parse("1/3"));
  CHECK_THROWS_AS(run_sim(SimConfig{params, 0, 10, 1}), std::domain_error);
  CHECK_THROWS_AS(run_sim(SimConfig{params, 10, 0, 1}), std::domain_error);
}

TEST_CASE("JSON serialization keeps rationals exact") {
  const SimConfig config{DuelParams::from_p(Rational::parse("1/3")), 16, 5000, 5};
  const SimResult r = run_sim(config);
  const auto j = to_json(r);
  CHECK(Rational::parse(j["empirical_pA"].get<std::string>()) == r.empirical_alice);
  CHECK(Rational::parse(j["analytic_pA"].get<std::string>()) == r.analytic_alice);
  CHECK(Rational::parse(j["analytic_pB"].get<std::string>()) == r.analytic_bob);
  CHECK(j["alice_wins"].get<std::uint64_t>() == r.alice_wins);
}
