#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gduel/duel.hpp"
#include "gduel/isolate.hpp"
#include "gduel/polynomial.hpp"
#include "gduel/rational.hpp"
#include "gduel/thue_morse.hpp"

namespace gduel {

// One isolated root of a stabilized prefix polynomial.
struct ThresholdRecord {
  std::size_t source_n;  // index of the polynomial the root came from
  IsolationInterval root;
  // Certified point below 1 above which every prefix examined so far is
  // constant in q: the running maximum of the certified upper endpoints.
  Rational running_lower_bound;
  // Whether duel prefixes generated just below and just above the root
  // actually differ (the root switches some a_{n+1}).
  bool switching = false;
  // Larger polynomial indices sharing this root, merged away.
  std::vector<std::size_t> also_root_of;
};

// f_n for n = 2..max_n with coefficients frozen to the Thue-Morse limit
// sequence, i.e. the fixed polynomials that decide the prefix for q
// close to 1.
inline std::vector<SignPolynomial> stabilized_prefix_polynomials(std::size_t max_n) {
  if (max_n < 2)
    throw std::domain_error("stabilized prefix polynomials start at n = 2");
  std::vector<SignPolynomial> polys;
  polys.reserve(max_n - 1);
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::vector<Sign> coeffs(n + 1);
    const Sign tn = tm_term(n);
    for (std::size_t j = 0; j <= n; ++j)
      coeffs[j] = tn == tm_term(j) ? Sign::plus : Sign::minus;
    polys.emplace_back(std::move(coeffs));
  }
  return polys;
}

namespace detail {

// True when g has at least one root in the closed interval [lo, hi].
inline bool has_root_in_closed(const IntPoly& g, const Rational& lo, const Rational& hi) {
  if (sign_at(g, lo) == 0 || sign_at(g, hi) == 0) return true;
  if (!(lo < hi)) return false;
  return !isolate_roots(g, lo, hi, hi - lo).empty();
}

}  // namespace detail

// All roots of the stabilized f_n, 2 <= n <= max_n, strictly inside
// (0, 1), each isolated to at most `width`, sorted by midpoint. Roots at
// q = 1 (every odd n has one) fall outside the open window. A root
// shared by several polynomials is kept once, attributed to the smallest
// n, with the other indices noted on the record.
inline std::vector<ThresholdRecord> alpha_sequence(std::size_t max_n,
                                                   const Rational& width) {
  if (max_n < 2) throw std::domain_error("alpha sequence needs max_n >= 2");
  if (width.sign() <= 0) throw std::domain_error("alpha sequence needs a positive width");

  struct Candidate {
    std::size_t n;
    IsolationInterval iv;
    std::vector<std::size_t> merged;
  };

  const std::vector<SignPolynomial> polys = stabilized_prefix_polynomials(max_n);
  std::vector<IntPoly> ints;
  std::vector<IntPoly> squarefrees;
  ints.reserve(polys.size());
  squarefrees.reserve(polys.size());
  std::vector<Candidate> cands;
  const Rational zero(0), one(1);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    ints.push_back(polys[i].to_polynomial());
    squarefrees.push_back(squarefree_part(ints.back()));
    for (auto& iv : isolate_roots(ints.back(), zero, one, width))
      cands.push_back({i + 2, std::move(iv), {}});
  }

  auto by_lo = [](const Candidate& x, const Candidate& y) { return x.iv.lo < y.iv.lo; };
  std::sort(cands.begin(), cands.end(), by_lo);

  // Resolve overlaps between intervals of different polynomials: merge
  // genuine shared roots, otherwise refine both brackets until disjoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(cands.begin(), cands.end(), by_lo);
    for (std::size_t i = 0; i + 1 < cands.size() && !changed; ++i) {
      Candidate& x = cands[i];
      Candidate& y = cands[i + 1];
      if (x.iv.hi < y.iv.lo) continue;
      const Rational olo = std::max(x.iv.lo, y.iv.lo);
      const Rational ohi = std::min(x.iv.hi, y.iv.hi);
      const IntPoly shared = integer_gcd(ints[x.n - 2], ints[y.n - 2]);
      if (shared.degree() >= 1 && detail::has_root_in_closed(shared, olo, ohi)) {
        Candidate& keep = x.n <= y.n ? x : y;
        Candidate& drop = x.n <= y.n ? y : x;
        keep.merged.push_back(drop.n);
        keep.merged.insert(keep.merged.end(), drop.merged.begin(), drop.merged.end());
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(&drop - cands.data()));
      } else {
        auto retighten = [](const IntPoly& sf, const IntPoly& target, IsolationInterval& iv) {
          auto r = detail::bisect_to_width(sf, iv.lo, iv.hi,
                                           iv.width() * Rational(BigInt(1), BigInt(4)));
          iv.lo = std::move(r.first);
          iv.hi = std::move(r.second);
          iv.certified_sign_change = sign_at(target, iv.lo) * sign_at(target, iv.hi) < 0;
        };
        retighten(squarefrees[x.n - 2], ints[x.n - 2], x.iv);
        retighten(squarefrees[y.n - 2], ints[y.n - 2], y.iv);
      }
      changed = true;
    }
  }

  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
    return x.iv.midpoint() < y.iv.midpoint();
  });

  std::vector<ThresholdRecord> records;
  records.reserve(cands.size());
  Rational running(0);
  for (auto& c : cands) {
    if (c.iv.hi > running) running = c.iv.hi;
    // The root switches a_{n+1} when prefixes generated just below and
    // just above it differ.
    const FiringSequence below =
        FiringSequence::generate(DuelParams::from_q(c.iv.lo), c.n + 2);
    const FiringSequence above =
        FiringSequence::generate(DuelParams::from_q(c.iv.hi), c.n + 2);
    const bool switching = below.signs() != above.signs();
    std::sort(c.merged.begin(), c.merged.end());
    records.push_back({c.n, std::move(c.iv), running, switching, std::move(c.merged)});
  }
  return records;
}

struct ConjectureRow {
  std::size_t k;         // 1-based rank in the merged root sequence
  std::size_t source_n;
  Rational alpha_lo;
  Rational alpha_hi;
  double scaled_gap;     // (1 - alpha_k) * sqrt(k), display value
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  // k values where alpha_{k+1} < alpha_k; reported, never fatal, since
  // the monotonicity is only conjectured.
  std::vector<std::size_t> non_monotone_at;
};

inline double to_double(const Rational& r) {
  // Display-only: scale the quotient so modest magnitudes convert cleanly.
  const BigInt scaled = (r.num() << 64) / r.den();
  return std::ldexp(scaled.convert_to<double>(), -64);
}

inline ConjectureReport conjecture_report(const std::vector<ThresholdRecord>& records) {
  ConjectureReport report;
  report.rows.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rec = records[i];
    const std::size_t k = i + 1;
    const double gap = to_double(Rational(1) - rec.root.midpoint()) *
                       std::sqrt(static_cast<double>(k));
    report.rows.push_back({k, rec.source_n, rec.root.lo, rec.root.hi, gap});
    if (i + 1 < records.size() &&
        records[i + 1].root.midpoint() < rec.root.midpoint())
      report.non_monotone_at.push_back(k);
  }
  return report;
}

}  // namespace gduel
