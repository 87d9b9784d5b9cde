#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gduel/polynomial.hpp"
#include "gduel/rational.hpp"

namespace gduel {

// Exact bracket around a single real root. `certified_sign_change` is
// true when the target polynomial itself takes opposite nonzero signs at
// lo and hi; it is false for roots of even multiplicity, which are still
// certified through the square-free part.
struct IsolationInterval {
  Rational lo;
  Rational hi;
  bool certified_sign_change = false;

  Rational midpoint() const { return (lo + hi) * Rational(BigInt(1), BigInt(2)); }
  Rational width() const { return hi - lo; }
};

namespace detail {

// P(x+1) over the integers, additions only.
inline IntPoly shift_by_one(const IntPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> c = p.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  return IntPoly(std::move(c));
}

// 2^n P(x/2): maps roots in (0, 1/2) onto (0, 1).
inline IntPoly half_scale(const IntPoly& p) {
  if (p.is_zero()) return p;
  std::vector<BigInt> c = p.coeffs();
  const std::size_t n = c.size();
  BigInt pw = 1;
  for (std::size_t i = n; i-- > 0;) {
    c[i] *= pw;
    pw <<= 1;
  }
  return IntPoly(std::move(c));
}

// x^n P(1/x), with any power of x divided out.
inline IntPoly reversed(const IntPoly& p) {
  std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
  return IntPoly(std::move(c));
}

inline int sign_variations(const IntPoly& p) {
  int vars = 0;
  int last = 0;
  for (const auto& c : p.coeffs()) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++vars;
    last = s;
  }
  return vars;
}

// Descartes bound on the number of roots of p in the open interval
// (0, 1): exact when it returns 0 or 1.
inline int variations_in_01(const IntPoly& p) {
  return sign_variations(shift_by_one(reversed(p)));
}

struct DyadicNode {
  IntPoly poly;  // roots in (0,1) <-> roots of the source in the dyadic window
  BigInt c;
  unsigned level;
};

constexpr unsigned kMaxSubdivisionDepth = 4096;

inline Rational dyadic_to_window(const Rational& a, const Rational& span,
                                 const BigInt& c, unsigned level) {
  return a + span * Rational(c, BigInt(1) << level);
}

// Shrinks [lo,hi] (opposite nonzero signs of sf at the ends, exactly one
// simple root inside) until its width is <= width. A bisection point that
// lands exactly on the root yields a tight bracket around it.
inline std::pair<Rational, Rational> bisect_to_width(const IntPoly& sf, Rational lo,
                                                     Rational hi, const Rational& width) {
  int slo = sign_at(sf, lo);
  if (slo == 0 || slo == sign_at(sf, hi))
    throw std::logic_error("bisection requires a strict sign change");
  const Rational half(BigInt(1), BigInt(2));
  while (hi - lo > width) {
    Rational mid = (lo + hi) * half;
    const int sm = sign_at(sf, mid);
    if (sm == 0) {
      Rational delta = std::min({width * half, (mid - lo) * half, (hi - mid) * half});
      return {mid - delta, mid + delta};
    }
    if (sm == slo)
      lo = std::move(mid);
    else
      hi = std::move(mid);
  }
  return {lo, hi};
}

// Re-bisects an isolating interval of sf until the point r lies strictly
// outside it. r must not be a root of sf.
inline std::pair<Rational, Rational> bisect_excluding(const IntPoly& sf, Rational lo,
                                                      Rational hi, const Rational& r) {
  int slo = sign_at(sf, lo);
  const Rational half(BigInt(1), BigInt(2));
  while (lo <= r && r <= hi) {
    Rational mid = (lo + hi) * half;
    int sm = sign_at(sf, mid);
    if (sm == 0) {
      // The contained root itself is rational; bracket it away from r.
      Rational gap = (mid - r).abs() * half;
      Rational delta = std::min({gap, (mid - lo) * half, (hi - mid) * half});
      return {mid - delta, mid + delta};
    }
    if (sm == slo) {
      lo = std::move(mid);
      slo = sm;
    } else {
      hi = std::move(mid);
    }
  }
  return {lo, hi};
}

}  // namespace detail

// Isolates every real root of `target` inside the open window (a, b).
// Returns sorted, pairwise disjoint intervals of width <= width, one per
// distinct root; multiplicities are collapsed through the square-free
// part, so roots of even multiplicity are reported as well. Subdivision
// follows Descartes' rule of signs on shifted/scaled integer
// polynomials, then plain bisection tightens each certified bracket.
inline std::vector<IsolationInterval> isolate_roots(const IntPoly& target,
                                                    const Rational& a, const Rational& b,
                                                    const Rational& width) {
  if (width.sign() <= 0) throw std::invalid_argument("isolation width must be positive");
  if (!(a < b)) throw std::invalid_argument("isolation window is empty");
  if (target.is_zero())
    throw std::invalid_argument("cannot isolate roots of the zero polynomial");

  const IntPoly sf_target = squarefree_part(target);
  const Rational span = b - a;

  IntPoly sf = sf_target;
  std::vector<Rational> exact_roots;       // rational roots discovered and deflated out
  std::vector<std::pair<Rational, Rational>> brackets;  // isolating, sign change on sf

  bool restart = true;
  while (restart) {
    restart = false;
    brackets.clear();
    // Window endpoints are excluded from the open interval: peel them off
    // so every remaining sign test at a node endpoint is nonzero.
    while (!sf.is_zero() && sf.degree() > 0 && sign_at(sf, a) == 0) sf = deflate_root(sf, a);
    while (!sf.is_zero() && sf.degree() > 0 && sign_at(sf, b) == 0) sf = deflate_root(sf, b);
    if (sf.degree() <= 0) break;

    // Affine change of variable mapping (a, b) onto (0, 1).
    RatPoly shifted = taylor_shift(to_rational(sf), Rational(a));
    std::vector<Rational> scaled = shifted.coeffs();
    Rational pw(1);
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      scaled[i] *= pw;
      pw *= span;
    }
    const IntPoly window = to_integer_primitive(RatPoly(std::move(scaled)));

    std::vector<detail::DyadicNode> stack;
    stack.push_back({window, BigInt(0), 0});
    while (!stack.empty()) {
      detail::DyadicNode node = std::move(stack.back());
      stack.pop_back();
      const int vars = detail::variations_in_01(node.poly);
      if (vars == 0) continue;
      if (vars == 1) {
        Rational lo = detail::dyadic_to_window(a, span, node.c, node.level);
        Rational hi = detail::dyadic_to_window(a, span, node.c + 1, node.level);
        brackets.emplace_back(std::move(lo), std::move(hi));
        continue;
      }
      if (node.level >= detail::kMaxSubdivisionDepth)
        throw std::logic_error("root isolation failed to converge");
      const Rational mid =
          detail::dyadic_to_window(a, span, 2 * node.c + 1, node.level + 1);
      if (sign_at(sf, mid) == 0) {
        // Rational root hit a subdivision point: record it, remove the
        // factor and start over on the smaller polynomial.
        exact_roots.push_back(mid);
        sf = deflate_root(sf, mid);
        restart = true;
        break;
      }
      IntPoly left = primitive_part(detail::half_scale(node.poly));
      IntPoly right = primitive_part(detail::shift_by_one(left));
      stack.push_back({std::move(left), node.c * 2, node.level + 1});
      stack.push_back({std::move(right), node.c * 2 + 1, node.level + 1});
    }
  }

  std::vector<std::pair<Rational, Rational>> refined;
  refined.reserve(brackets.size());
  for (auto& [lo, hi] : brackets)
    refined.push_back(detail::bisect_to_width(sf, std::move(lo), std::move(hi), width));

  // Exact roots were deflated out of sf, so a refined bracket may still
  // straddle one; push such brackets off the point before placing the
  // exact roots' own brackets.
  for (const Rational& r : exact_roots)
    for (auto& iv : refined)
      if (iv.first <= r && r <= iv.second)
        iv = detail::bisect_excluding(sf, iv.first, iv.second, r);

  std::vector<Rational> cuts;  // boundaries exact-root brackets must respect
  cuts.push_back(a);
  cuts.push_back(b);
  for (const auto& iv : refined) {
    cuts.push_back(iv.first);
    cuts.push_back(iv.second);
  }
  for (const Rational& r : exact_roots) cuts.push_back(r);

  std::vector<std::pair<Rational, Rational>> all = refined;
  const Rational half(BigInt(1), BigInt(2));
  const Rational third(BigInt(1), BigInt(3));
  for (const Rational& r : exact_roots) {
    Rational delta = width * half;
    for (const Rational& c : cuts) {
      if (c == r) continue;
      // A third of the gap keeps neighbouring brackets strictly apart.
      Rational gap = (c - r).abs() * third;
      if (gap < delta) delta = gap;
    }
    all.emplace_back(r - delta, r + delta);
  }

  std::sort(all.begin(), all.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<IsolationInterval> result;
  result.reserve(all.size());
  for (auto& [lo, hi] : all) {
    const int a_sign = sign_at(sf_target, lo);
    const int b_sign = sign_at(sf_target, hi);
    if (a_sign == 0 || b_sign == 0 || a_sign == b_sign)
      throw std::logic_error("isolation certificate lost: no sign change at bracket ends");
    const bool flips = sign_at(target, lo) * sign_at(target, hi) < 0;
    result.push_back({std::move(lo), std::move(hi), flips});
  }
  for (std::size_t i = 0; i + 1 < result.size(); ++i)
    if (!(result[i].hi < result[i + 1].lo))
      throw std::logic_error("isolation intervals overlap");
  return result;
}

inline std::vector<IsolationInterval> isolate_roots(const SignPolynomial& target,
                                                    const Rational& a, const Rational& b,
                                                    const Rational& width) {
  return isolate_roots(target.to_polynomial(), a, b, width);
}

}  // namespace gduel
