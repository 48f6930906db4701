#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "pword/checked.hpp"
#include "pword/farey.hpp"
#include "pword/fraction.hpp"

// Compact piecewise-linear tables: for a fixed hole budget h, the threshold
// functions restricted to a ratio interval p/q in I are linear forms
// c_q*q + c_p*p + c_0. threshold_table(h) covers the full threshold with O(h)
// pieces; special_threshold_table(h) and exclusive_multiple_table(h) cover
// the two ingredients it is assembled from.

namespace pword {

struct LinearForm {
  std::int64_t c_q = 0;
  std::int64_t c_p = 0;
  std::int64_t c_0 = 0;

  std::int64_t evaluate(std::int64_t p, std::int64_t q) const {
    return checked_add(checked_add(checked_mul(c_q, q), checked_mul(c_p, p)), c_0);
  }

  // "q+4p", "8p", "4q+p", "q+6p-1"; the q term leads.
  std::string str() const {
    std::string out;
    auto term = [&out](std::int64_t coeff, const char* name) {
      if (coeff == 0) return;
      if (!out.empty() && coeff > 0) out += '+';
      if (coeff == -1)
        out += '-';
      else if (coeff != 1)
        out += std::to_string(coeff);
      out += name;
    };
    term(c_q, "q");
    term(c_p, "p");
    if (c_0 != 0) {
      if (!out.empty() && c_0 > 0) out += '+';
      out += std::to_string(c_0);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

struct Piece {
  Fraction lo;
  Fraction hi;
  bool lo_closed = true;
  bool hi_closed = true;
  LinearForm form;

  bool contains(const Fraction& x) const {
    if (x < lo || (x == lo && !lo_closed)) return false;
    if (x > hi || (x == hi && !hi_closed)) return false;
    return true;
  }

  std::string str() const {
    return form.str() + " on " + (lo_closed ? "[" : "(") + lo.str() + ", " + hi.str() +
           (hi_closed ? "]" : ")");
  }

  friend bool operator==(const Piece&, const Piece&) = default;
};

// Ordered pieces with pairwise disjoint interiors. Closed shared endpoints
// always agree in value wherever a coprime p/q can reach them; ratio points
// that no valid pair attains (the L^s/L^d seam) may be left uncovered.
struct PiecewiseThreshold {
  std::int64_t h = 0;
  std::vector<Piece> pieces;

  // Value at ratio p/q for coprime p < q. Binary search plus exact fraction
  // comparison; throws if the ratio falls outside every piece.
  std::int64_t evaluate(std::int64_t p, std::int64_t q) const {
    if (p < 1 || q < 1 || p >= q || std::gcd(p, q) != 1)
      throw std::domain_error("piecewise evaluate: requires coprime 0 < p < q");
    const Fraction x(p, q);
    std::size_t lo = 0, hi = pieces.size();
    while (lo < hi) {  // first piece whose lower end is > x
      const std::size_t mid = lo + (hi - lo) / 2;
      if (x < pieces[mid].lo)
        hi = mid;
      else
        lo = mid + 1;
    }
    for (std::size_t i = lo; i-- > 0;) {
      if (pieces[i].contains(x)) return pieces[i].form.evaluate(p, q);
      if (pieces[i].hi < x) break;
    }
    throw std::domain_error("piecewise evaluate: ratio " + x.str() + " not covered");
  }

  friend bool operator==(const PiecewiseThreshold&, const PiecewiseThreshold&) = default;
};

// The breakpoint grid for hole budget h: anchor points (i-1)/(h+4-i) and
// middle points i/(h+4-i) for i = 1..h+4, each increasing. Values are kept in
// lowest terms; the position in the list recovers the index i.
struct SpecialPoints {
  std::vector<Fraction> special;
  std::vector<Fraction> middle;
};

inline SpecialPoints special_points(std::int64_t h) {
  if (h < 0) throw std::domain_error("special_points: requires h >= 0");
  SpecialPoints pts;
  for (std::int64_t i = 1; i <= h + 4; ++i) {
    pts.special.emplace_back(i - 1, h + 4 - i);
    pts.middle.emplace_back(i, h + 4 - i);
  }
  return pts;
}

// Table of nth_exclusive_multiple(h+2, p, q) over ratios p/q in [0, 1]:
// alternating pure-p and pure-q forms, (h+4-i)*p on [l_i, m_i] and i*q on
// [m_i, l_{i+1}]. Valid for coprime pairs with p+q > h+4: at p+q == h+4 the
// ratio coincides with a reduced middle point and the closed form degrades
// (it yields p*q where the true value is p*q + p). The threshold tables below
// are immune: their open middle pieces override exactly those ratios.
inline PiecewiseThreshold exclusive_multiple_table(std::int64_t h) {
  if (h < 0) throw std::domain_error("exclusive_multiple_table: requires h >= 0");
  const Fraction one(1, 1);
  PiecewiseThreshold table{h, {}};
  for (std::int64_t i = 1; i <= h + 4; ++i) {
    const Fraction l_i(i - 1, h + 4 - i);
    if (l_i >= one) break;
    const Fraction m_i(i, h + 4 - i);
    const Fraction l_next(i, h + 3 - i);
    table.pieces.push_back({l_i, std::min(m_i, one), true, true, {0, h + 4 - i, 0}});
    if (m_i >= one) break;
    table.pieces.push_back({m_i, std::min(l_next, one), true, true, {i, 0, 0}});
    if (l_next >= one) break;
  }
  return table;
}

// Table of special_threshold(h, p, q) over ratios in (0, 1). Each gap
// [l_i, l_{i+1}] splits at the best approximations of the middle point with
// weight bound h+3 into a left pure-p piece, an open middle piece a*q + d*p,
// and a right pure-q piece; empty and degenerate pieces are dropped (their
// endpoint values coincide with the neighbouring closed pieces). Valid for
// coprime pairs with h <= p+q-3.
inline PiecewiseThreshold special_threshold_table(std::int64_t h) {
  if (h < 0) throw std::domain_error("special_threshold_table: requires h >= 0");
  const Fraction one(1, 1);
  PiecewiseThreshold table{h, {}};
  const auto push = [&table, &one](Piece piece) {
    if (piece.lo >= one || piece.lo >= piece.hi) return;  // point pieces: neighbours carry the value
    table.pieces.push_back(std::move(piece));
  };
  for (std::int64_t i = 1; i <= h + 3; ++i) {
    const Fraction l_i(i - 1, h + 4 - i);
    if (l_i >= one) break;
    const Fraction l_next(i, h + 3 - i);
    const Fraction m_i(i, h + 4 - i);
    const auto [left, right] = best_approx_pair(m_i, h + 3);
    push({l_i, std::min(left, one), true, true, {0, h + 4 - i, 0}});
    if (left < right)  // reducible middle points collapse: no middle piece
      push({left, std::min(right, one), false, false, {left.num(), right.den(), 0}});
    push({right, std::min(l_next, one), true, true, {i, 0, 0}});
  }
  return table;
}

// Full threshold table over ratios in (0, 1). For q/p > ceil(h/2), i.e.
// p/q below the seam 1/ceil(h/2), the bordered form
// ceil((h+1)/2)*p + q - ((h+1) mod 2) applies; past the seam the special
// table takes over (trimmed, the seam itself left open: no coprime pair with
// p > 2 attains it). h == 4 carries the one exception: the bordered form
// returns on q/p < 3/2. O(h) pieces, built with O(h) best-approximation
// queries.
inline PiecewiseThreshold threshold_table(std::int64_t h) {
  if (h < 0) throw std::domain_error("threshold_table: requires h >= 0");
  const LinearForm bordered{1, h / 2 + 1, -(1 - h % 2)};
  const Fraction zero(0, 1);
  const Fraction one(1, 1);
  if (h <= 2) return {h, {Piece{zero, one, false, false, bordered}}};

  const Fraction seam(1, (h + 1) / 2);  // 1/ceil(h/2)
  const Fraction upper = h == 4 ? Fraction(2, 3) : one;
  PiecewiseThreshold table{h, {}};
  table.pieces.push_back({zero, seam, false, false, bordered});
  for (Piece piece : special_threshold_table(h).pieces) {
    if (piece.hi <= seam || piece.lo >= upper) continue;
    if (piece.lo < seam) {
      piece.lo = seam;
      piece.lo_closed = false;
    }
    if (piece.hi > upper) {
      piece.hi = upper;
      piece.hi_closed = false;
    }
    table.pieces.push_back(std::move(piece));
  }
  if (h == 4) table.pieces.push_back({upper, one, false, false, bordered});
  return table;
}

}  // namespace pword
