#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pword/continued_fraction.hpp"
#include "pword/fraction.hpp"

namespace pword {

// A bracketing pair of the mediant descent: left < target < right, and the
// two sides are Stern-Brocot neighbours (right.num*left.den - left.num*right.den == 1).
struct FareyPair {
  Fraction left;
  Fraction right;

  friend bool operator==(const FareyPair&, const FareyPair&) = default;
};

// The full pair sequence of the slow mediant descent toward x, starting from
// (0/1, 1/0) and ending with the pair whose mediant equals x. Output length
// is Theta(num + den); callers accept that cost.
inline std::vector<FareyPair> farey_pairs(const Fraction& x) {
  if (!x.is_finite() || x.is_zero())
    throw std::domain_error("farey_pairs: target must be a finite positive rational");
  std::vector<FareyPair> pairs;
  Fraction left(0, 1);
  Fraction right = Fraction::infinity();
  while (true) {
    pairs.push_back({left, right});
    const Fraction mid = mediant(left, right);
    if (mid == x) break;
    (mid < x ? left : right) = mid;
  }
  return pairs;
}

// All semiconvergents of a finite positive rational together with their
// parity, sorted by value. Enumerated as the truncations of the canonical
// expansion [g0; g1, ..., gm]: for each 0 <= m' <= m the partial coefficients
// [g0; ..., g_{m'-1}, t] (t below g_{m'} when m' == m), plus the improper
// fraction 1/0. Zero is included via t == 0 at m' == 0, which makes the set
// coincide with the components visited by the mediant descent. x itself is
// not one of its semiconvergents.
inline std::vector<std::pair<Fraction, Parity>> semiconvergents_with_parity(const Fraction& x) {
  if (!x.is_finite() || x.is_zero())
    throw std::domain_error("semiconvergents: target must be a finite positive rational");
  const ContinuedFraction cf = ContinuedFraction::expand(x, Parity::even);
  const auto& g = cf.coefficients();
  const std::size_t m = g.size() - 1;
  std::vector<std::pair<Fraction, Parity>> out;
  out.emplace_back(Fraction::infinity(), Parity::odd);
  std::vector<std::int64_t> prefix;
  for (std::size_t mp = 0; mp <= m; ++mp) {
    const std::int64_t t_lo = (mp == 0) ? 0 : 1;
    const std::int64_t t_hi = (mp == m) ? g[mp] - 1 : g[mp];
    const Parity par = (mp % 2 == 0) ? Parity::even : Parity::odd;
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
      prefix.push_back(t);
      out.emplace_back(ContinuedFraction(prefix).value(), par);
      prefix.pop_back();
    }
    prefix.push_back(g[mp]);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

inline std::vector<Fraction> semiconvergents(const Fraction& x) {
  std::vector<Fraction> out;
  for (const auto& [f, par] : semiconvergents_with_parity(x)) out.push_back(f);
  return out;
}

// Best left/right approximations of x among fractions of weight num+den <= k:
// the largest fraction <= x and the smallest fraction >= x. Computed together
// by a batched Stern-Brocot descent (whole continued-fraction quotients per
// step), O(log k) arithmetic operations. Requires k >= 1; 0/1 and 1/0 belong
// to every such set, so both answers exist.
inline std::pair<Fraction, Fraction> best_approx_pair(const Fraction& x, std::int64_t k) {
  if (k < 1) throw std::domain_error("best approximation: weight bound must be >= 1");
  if (!x.is_finite() || x.is_zero())
    throw std::domain_error("best approximation: target must be a finite positive rational");
  const std::int64_t p = x.num(), q = x.den();
  if (x.weight() <= k) return {x, x};

  std::int64_t a = 0, b = 1, c = 1, d = 0;
  Fraction left(0, 1);
  Fraction right = Fraction::infinity();
  while (true) {
    const __int128 lhs = static_cast<__int128>(a + c) * q;
    const __int128 rhs = static_cast<__int128>(b + d) * p;
    if (lhs == rhs) break;  // descent reached x; x itself is over the weight bound
    if (lhs < rhs) {
      // mediant < x: advance the left side. Largest t with (a+tc)/(b+td) < x,
      // capped by the weight budget; successive components only get heavier,
      // so a capped batch freezes both answers.
      const __int128 tn = static_cast<__int128>(b) * p - static_cast<__int128>(a) * q;
      const __int128 td = static_cast<__int128>(c) * q - static_cast<__int128>(d) * p;
      const std::int64_t t_max = static_cast<std::int64_t>((tn - 1) / td);
      const std::int64_t t_cap = (k - (a + b)) / (c + d);
      const std::int64_t t = std::min(t_max, t_cap);
      a += t * c;
      b += t * d;
      if (t >= 1) left = Fraction(a, b);
      if (t < t_max) break;
    } else {
      const __int128 tn = static_cast<__int128>(c) * q - static_cast<__int128>(d) * p;
      const __int128 td = static_cast<__int128>(b) * p - static_cast<__int128>(a) * q;
      const std::int64_t t_max = static_cast<std::int64_t>((tn - 1) / td);
      const std::int64_t t_cap = (k - (c + d)) / (a + b);
      const std::int64_t t = std::min(t_max, t_cap);
      c += t * a;
      d += t * b;
      if (t >= 1) right = Fraction(c, d);
      if (t < t_max) break;
    }
  }
  return {left, right};
}

inline Fraction best_left_approx(const Fraction& x, std::int64_t k) {
  return best_approx_pair(x, k).first;
}

inline Fraction best_right_approx(const Fraction& x, std::int64_t k) {
  return best_approx_pair(x, k).second;
}

// Direct arithmetic characterization of best left approximations a/b < x:
// b == floor(a*q/p) + 1 and a*q mod p is a strict prefix maximum of the
// sequence (i*q mod p). Linear in a.num; meant for desk-scale cross checks.
inline bool is_best_left_approx(const Fraction& a, const Fraction& x) {
  if (!a.is_finite() || !x.is_finite())
    throw std::domain_error("is_best_left_approx: finite fractions required");
  if (!(a < x)) throw std::domain_error("is_best_left_approx: requires a < x");
  const std::int64_t p = x.num(), q = x.den();
  if (a.den() != checked_mul(a.num(), q) / p + 1) return false;
  const std::int64_t target = checked_mul(a.num(), q) % p;
  for (std::int64_t i = 0; i < a.num(); ++i) {
    if (checked_mul(i, q) % p >= target) return false;
  }
  return true;
}

}  // namespace pword
