// Command-line front end: every subcommand parses its numeric flags as
// exact rationals ("a/b", finite decimals, or power shorthand like
// 1/2^40) and keeps all decision arithmetic exact. Decimal columns in
// plain output are display approximations and are marked with a tilde.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gduel/gduel.hpp"
#include "gduel/json_io.hpp"

namespace {

using namespace gduel;

enum class Format { plain, csv, json };

Format parse_format(const std::string& name) {
  if (name == "plain" || name == "plain-table") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown format: '" + name + "'");
}

std::string approx(const Rational& r, unsigned digits = 6) {
  return "≈" + decimal_approx(r, digits);  // marked approximate
}

std::string gap_str(double g) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", g);
  return buf;
}

struct DuelArgs {
  std::string p, q, format = "plain", alphabet = "AB";
  std::size_t rounds = 0;
};

int run_duel(const DuelArgs& args) {
  if (args.p.empty() == args.q.empty())
    throw std::domain_error("pass exactly one of --p or --q");
  const DuelParams params = args.p.empty()
                                ? DuelParams::from_q(Rational::parse(args.q))
                                : DuelParams::from_p(Rational::parse(args.p));
  if (args.rounds == 0) throw std::domain_error("--rounds must be at least 1");
  const Format format = parse_format(args.format);
  const Alphabet alphabet = parse_alphabet(args.alphabet);
  const auto rows = probability_table(params, args.rounds);
  const FiringSequence seq = FiringSequence::generate(params, args.rounds);
  const std::string turns =
      render_signs(seq.signs(), alphabet, ZeroOneMap::minus_is_one);

  switch (format) {
    case Format::plain: {
      std::cout << "p = " << params.p() << "  q = " << params.q() << "\n";
      std::cout << "sequence: " << turns << "\n";
      std::cout << "round  P(A)  P(B)  shooter\n";
      for (const auto& r : rows)
        std::cout << r.round << "  " << r.alice_prob << " (" << approx(r.alice_prob)
                  << ")  " << r.bob_prob << " (" << approx(r.bob_prob) << ")  "
                  << player_char(r.shooter) << "\n";
      break;
    }
    case Format::csv: {
      std::cout << "round,pA,pB,shooter\n";
      for (const auto& r : rows)
        std::cout << r.round << ',' << r.alice_prob << ',' << r.bob_prob << ','
                  << player_char(r.shooter) << "\n";
      break;
    }
    case Format::json: {
      nlohmann::json j{{"p", params.p().to_string()},
                       {"q", params.q().to_string()},
                       {"alphabet", args.alphabet},
                       {"sequence", turns}};
      auto rows_json = nlohmann::json::array();
      for (const auto& r : rows) rows_json.push_back(to_json(r));
      j["rows"] = rows_json;
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

struct CompareArgs {
  std::string q, format = "plain";
  std::size_t max_rounds = 0;
};

int run_compare(const CompareArgs& args) {
  const DuelParams params = DuelParams::from_q(Rational::parse(args.q));
  if (args.max_rounds == 0) throw std::domain_error("--max-rounds must be at least 1");
  const FiringSequence seq = FiringSequence::generate(params, args.max_rounds);
  const std::size_t agree = agreement_length(seq);
  const bool censored = agree == seq.length();
  const TMSequence tm(args.max_rounds);

  switch (parse_format(args.format)) {
    case Format::plain:
      std::cout << "q = " << params.q() << "\n";
      std::cout << "duel:       " << render_signs(seq.signs(), Alphabet::ab) << "\n";
      std::cout << "thue-morse: " << render_signs(tm.terms(), Alphabet::ab) << "\n";
      std::cout << "agreement length: " << agree << "\n";
      if (censored)
        std::cout << "no mismatch within window\n";
      else
        std::cout << "first mismatch index: " << agree << "\n";
      break;
    case Format::csv:
      std::cout << "q,max_rounds,agreement_length,first_mismatch\n";
      std::cout << params.q() << ',' << args.max_rounds << ',' << agree << ',';
      if (censored)
        std::cout << "none\n";
      else
        std::cout << agree << "\n";
      break;
    case Format::json: {
      nlohmann::json j{{"q", params.q().to_string()},
                       {"max_rounds", args.max_rounds},
                       {"duel", render_signs(seq.signs(), Alphabet::ab)},
                       {"thue_morse", render_signs(tm.terms(), Alphabet::ab)},
                       {"agreement_length", agree}};
      if (censored)
        j["first_mismatch"] = nullptr;
      else
        j["first_mismatch"] = agree;
      std::cout << j.dump() << "\n";
      break;
    }
  }
  return 0;
}

struct ThresholdArgs {
  std::string width = "1/2^40", format = "plain";
  std::size_t max_n = 0;
};

int run_thresholds(const ThresholdArgs& args) {
  const Rational width = Rational::parse(args.width);
  const auto records = alpha_sequence(args.max_n, width);
  const auto report = conjecture_report(records);

  switch (parse_format(args.format)) {
    case Format::plain:
      std::cout << "k  n  alpha  scaled_gap  switching\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        const auto& row = report.rows[i];
        std::cout << row.k << "  " << rec.source_n << "  "
                  << approx(rec.root.midpoint(), 12) << "  " << gap_str(row.scaled_gap)
                  << "  " << (rec.switching ? "yes" : "no");
        if (!rec.also_root_of.empty()) {
          std::cout << "  (also root of n =";
          for (auto n : rec.also_root_of) std::cout << ' ' << n;
          std::cout << ')';
        }
        std::cout << "\n";
      }
      break;
    case Format::csv:
      std::cout << "k,n,alpha_lo,alpha_hi,scaled_gap\n";
      for (const auto& row : report.rows)
        std::cout << row.k << ',' << row.source_n << ',' << row.alpha_lo << ','
                  << row.alpha_hi << ',' << gap_str(row.scaled_gap) << "\n";
      break;
    case Format::json: {
      auto arr = nlohmann::json::array();
      for (std::size_t i = 0; i < records.size(); ++i) {
        auto j = to_json(records[i], i + 1);
        j["scaled_gap"] = report.rows[i].scaled_gap;
        arr.push_back(std::move(j));
      }
      nlohmann::json j{{"width", width.to_string()},
                       {"records", arr},
                       {"non_monotone_at", report.non_monotone_at}};
      std::cout << j.dump() << "\n";
      break;
    }
  }
  for (const auto& rec : records)
    if (!rec.switching)
      std::cerr << "note: non-switching root of f_" << rec.source_n << " near "
                << approx(rec.root.midpoint(), 10) << "\n";
  for (auto k : report.non_monotone_at)
    std::cerr << "note: alpha_" << k + 1 << " < alpha_" << k << "\n";
  return 0;
}

struct BetaArgs {
  std::string method, x, beta, format = "plain";
  std::size_t digits = 0, n = 0;
  bool compare_greedy = false;
};

int run_beta(const BetaArgs& args) {
  if (args.digits == 0) throw std::domain_error("--digits must be at least 1");
  Rational x;
  std::optional<BetaExpansion> exp;
  if (args.method == "duel") {
    if (args.n == 0) throw std::domain_error("--method duel requires --n");
    if (!args.x.empty() || !args.beta.empty())
      throw std::domain_error("--method duel derives x and beta from --n");
    x = Rational(BigInt(args.n), BigInt(2));
    exp = duel_expansion(args.n, args.digits);
  } else if (args.method == "greedy") {
    if (args.x.empty() || args.beta.empty())
      throw std::domain_error("--method greedy requires --x and --beta");
    x = Rational::parse(args.x);
    exp = greedy_expansion(x, Rational::parse(args.beta), args.digits).expansion;
  } else {
    throw std::domain_error("--method must be greedy or duel");
  }
  const Rational remainder = x - exp->value();
  const ValidityReport validity = validate_expansion(x, *exp);

  switch (parse_format(args.format)) {
    case Format::plain:
      std::cout << "base = " << exp->base() << "\n";
      std::cout << "x = " << x << "\n";
      std::cout << "expansion: " << exp->digit_string() << "\n";
      std::cout << "remainder = " << remainder << " (" << approx(remainder, 8) << ")\n";
      if (validity.valid)
        std::cout << "valid through all " << exp->digit_count() << " digits\n";
      else
        std::cout << "invalid at prefix " << *validity.first_violation << "\n";
      break;
    case Format::csv:
      std::cout << "base,x,digits,remainder\n";
      std::cout << exp->base() << ',' << x << ',' << exp->digit_string() << ','
                << remainder << "\n";
      break;
    case Format::json: {
      auto j = to_json(*exp, x, remainder);
      j["valid"] = validity.valid;
      if (!validity.valid) j["first_violation"] = *validity.first_violation;
      std::cout << j.dump() << "\n";
      break;
    }
  }

  if (args.compare_greedy && args.method == "duel") {
    const auto greedy = greedy_expansion(x, exp->base(), args.digits);
    std::cout << "greedy expansion: " << greedy.expansion.digit_string() << "\n";
    if (auto idx = first_disagreement(*exp, greedy.expansion))
      std::cout << "first disagreement at digit " << *idx << "\n";
    else
      std::cout << "no disagreement within window\n";
  }
  return 0;
}

struct TmArgs {
  std::string alphabet = "AB", format = "plain";
  std::size_t length = 0;
};

int run_tm(const TmArgs& args) {
  const TMSequence seq(args.length);
  const std::string rendered =
      render_signs(seq.terms(), parse_alphabet(args.alphabet), ZeroOneMap::minus_is_zero);
  if (parse_format(args.format) == Format::json)
    std::cout << nlohmann::json{{"length", args.length},
                                {"alphabet", args.alphabet},
                                {"sequence", rendered}}
                     .dump()
              << "\n";
  else
    std::cout << rendered << "\n";
  return 0;
}

struct SimulateArgs {
  std::string p, format = "json";
  std::size_t rounds = 0;
  std::uint64_t trials = 0, seed = 0;
};

int run_simulate(const SimulateArgs& args) {
  const SimConfig config{DuelParams::from_p(Rational::parse(args.p)), args.rounds,
                         args.trials, args.seed};
  const SimResult result = run_sim(config);
  switch (parse_format(args.format)) {
    case Format::plain:
      std::cout << "trials = " << config.trials << ", horizon = " << config.max_rounds
                << ", seed = " << config.seed << "\n";
      std::cout << "alice wins " << result.alice_wins << " ("
                << approx(result.empirical_alice) << ", analytic "
                << approx(result.analytic_alice) << ")\n";
      std::cout << "bob wins " << result.bob_wins << " (" << approx(result.empirical_bob)
                << ", analytic " << approx(result.analytic_bob) << ")\n";
      std::cout << "no decision " << result.no_decision << "\n";
      break;
    case Format::csv:
      std::cout << "trials,horizon,seed,alice_wins,bob_wins,no_decision,empirical_pA,"
                   "empirical_pB,analytic_pA,analytic_pB\n";
      std::cout << config.trials << ',' << config.max_rounds << ',' << config.seed << ','
                << result.alice_wins << ',' << result.bob_wins << ','
                << result.no_decision << ',' << result.empirical_alice << ','
                << result.empirical_bob << ',' << result.analytic_alice << ','
                << result.analytic_bob << "\n";
      break;
    case Format::json:
      std::cout << nlohmann::json{{"config", to_json(config)},
                                  {"result", to_json(result)}}
                       .dump()
                << "\n";
      break;
  }
  return 0;
}

struct ApproxArgs {
  std::string q, tail, format = "plain";
};

int run_approx(const ApproxArgs& args) {
  const Rational q = Rational::parse(args.q);
  const Rational tail = Rational::parse(args.tail);
  const MagnitudeResult result = tm_generating_magnitude(q, tail);
  switch (parse_format(args.format)) {
    case Format::plain:
      std::cout << "q = " << q << "\n";
      std::cout << "terms = " << result.terms << "\n";
      std::cout << "magnitude " << approx(result.magnitude, 15) << "\n";
      break;
    case Format::csv:
      std::cout << "q,tail_bound,terms,magnitude\n";
      std::cout << q << ',' << tail << ',' << result.terms << ','
                << result.magnitude << "\n";
      break;
    case Format::json:
      std::cout << nlohmann::json{{"q", q.to_string()},
                                  {"tail_bound", tail.to_string()},
                                  {"terms", result.terms},
                                  {"magnitude", result.magnitude.to_string()}}
                       .dump()
                << "\n";
      break;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Greedy Galois-duel firing sequences: exact probability tables, "
      "Thue-Morse comparison, stabilization-threshold roots, fractional-base "
      "expansions and a reproducible Monte Carlo cross-check."};
  app.require_subcommand(1);

  DuelArgs duel_args;
  auto* duel = app.add_subcommand("duel", "Generate the firing sequence and win-probability table");
  duel->add_option("--p", duel_args.p, "hit probability (rational)");
  duel->add_option("--q", duel_args.q, "miss probability (rational)");
  duel->add_option("--rounds", duel_args.rounds, "number of rounds")->required();
  duel->add_option("--format", duel_args.format, "plain|csv|json");
  duel->add_option("--alphabet", duel_args.alphabet, "AB|pm1|01 (01 maps Alice to 1)");

  CompareArgs compare_args;
  auto* compare = app.add_subcommand("compare", "Agreement length against the Thue-Morse sequence");
  compare->add_option("--q", compare_args.q, "miss probability (rational)")->required();
  compare->add_option("--max-rounds", compare_args.max_rounds, "window length")->required();
  compare->add_option("--format", compare_args.format, "plain|csv|json");

  ThresholdArgs threshold_args;
  auto* thresholds = app.add_subcommand("thresholds", "Roots of the stabilized prefix polynomials in (0,1)");
  thresholds->add_option("--max-n", threshold_args.max_n, "largest polynomial index")->required();
  thresholds->add_option("--width", threshold_args.width, "isolation width (rational)");
  thresholds->add_option("--format", threshold_args.format, "plain|csv|json");

  BetaArgs beta_args;
  auto* beta = app.add_subcommand("beta", "Fractional-base expansions (greedy or duel-driven)");
  beta->add_option("--method", beta_args.method, "greedy|duel")->required();
  beta->add_option("--x", beta_args.x, "value to expand (rational, greedy method)");
  beta->add_option("--beta", beta_args.beta, "base (rational > 1, greedy method)");
  beta->add_option("--n", beta_args.n, "duel method: expand n/2 in base 1+1/n");
  beta->add_option("--digits", beta_args.digits, "number of digits")->required();
  beta->add_option("--format", beta_args.format, "plain|csv|json");
  beta->add_flag("--compare-greedy", beta_args.compare_greedy,
                 "with --method duel, also print the greedy expansion and the first disagreement");

  TmArgs tm_args;
  auto* tm = app.add_subcommand("tm", "Thue-Morse prefix");
  tm->add_option("--length", tm_args.length, "number of terms")->required();
  tm->add_option("--alphabet", tm_args.alphabet, "AB|pm1|01 (01 maps -1 to 0)");
  tm->add_option("--format", tm_args.format, "plain|json");

  SimulateArgs sim_args;
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo duel versus the exact table");
  simulate->add_option("--p", sim_args.p, "hit probability (rational)")->required();
  simulate->add_option("--rounds", sim_args.rounds, "truncation horizon")->required();
  simulate->add_option("--trials", sim_args.trials, "number of trials")->required();
  simulate->add_option("--seed", sim_args.seed, "64-bit seed");
  simulate->add_option("--format", sim_args.format, "plain|csv|json");

  ApproxArgs approx_args;
  auto* approx_cmd = app.add_subcommand("approx", "Thue-Morse generating-function magnitude near q = 1");
  approx_cmd->add_option("--q", approx_args.q, "evaluation point (rational in (0,1))")->required();
  approx_cmd->add_option("--tail", approx_args.tail, "geometric tail bound (rational)")->required();
  approx_cmd->add_option("--format", approx_args.format, "plain|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*duel) return run_duel(duel_args);
    if (*compare) return run_compare(compare_args);
    if (*thresholds) return run_thresholds(threshold_args);
    if (*beta) return run_beta(beta_args);
    if (*tm) return run_tm(tm_args);
    if (*simulate) return run_simulate(sim_args);
    if (*approx_cmd) return run_approx(approx_args);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
