#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "pword/checked.hpp"
#include "pword/errors.hpp"
#include "pword/farey.hpp"
#include "pword/fraction.hpp"

// Hole and length-threshold functions for partial words with two strong
// periods p, q.
//
//   min_holes(n, p, q)   minimum number of holes in a non-unary partial word
//                        of length n with strong periods p and q but without
//                        period gcd(p,q) == 1.
//   threshold(h, p, q)   minimum length that forces period gcd(p,q) on every
//                        partial word with h holes and periods p, q; the
//                        generalized inverse of min_holes.
//
// Two restricted families bound these from above and between them are always
// tight: the hole-bordered extensions of the extremal solid word
// ("bordered_*", see constructions.hpp) and the pinned special words
// ("special_*"). threshold() routes between the two families and reduces
// gcd > 1 and p == 2 cases first.

namespace pword {

namespace detail {

inline void require_coprime_gt1(std::int64_t p, std::int64_t q, const char* who) {
  if (p <= 1 || q <= 1) throw std::domain_error(std::string(who) + ": requires p, q > 1");
  if (std::gcd(p, q) != 1) throw std::domain_error(std::string(who) + ": requires coprime p, q");
}

inline void require_ordered(std::int64_t p, std::int64_t q, const char* who) {
  require_coprime_gt1(p, q, who);
  if (p >= q) throw std::domain_error(std::string(who) + ": requires p < q");
}

}  // namespace detail

// floor(n/p) + floor(n/q) - 2*floor(n/(p*q)); for coprime p, q this counts
// the integers in [1, n] divisible by exactly one of them.
inline std::int64_t exclusive_multiple_count(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 0) throw std::domain_error("exclusive_multiple_count: n must be non-negative");
  if (p < 1 || q < 1) throw std::domain_error("exclusive_multiple_count: p, q must be positive");
  // floor(n/(p*q)) == floor(floor(n/p)/q); avoids forming p*q.
  return n / p + n / q - 2 * ((n / p) / q);
}

// Smallest n whose exclusive-multiple count exceeds k; equivalently the
// (k+1)-th positive integer divisible by exactly one of p and q. By
// convention k == -1 yields 0. O(log k): reduce by the period
// (count(n + p*q) == count(n) + p + q - 2), then binary-search separately
// over multiples of p and of q.
inline std::int64_t nth_exclusive_multiple(std::int64_t k, std::int64_t p, std::int64_t q) {
  detail::require_coprime_gt1(p, q, "nth_exclusive_multiple");
  if (k < -1) throw std::domain_error("nth_exclusive_multiple: k must be >= -1");
  if (k == -1) return 0;

  const std::int64_t period = checked_sub(checked_add(p, q), 2);
  const std::int64_t wraps = k / period;
  const std::int64_t kr = k % period;
  const std::int64_t base = wraps == 0 ? 0 : checked_mul(wraps, checked_mul(p, q));

  const auto first_exceeding = [kr, p, q](std::int64_t step) {
    // smallest m >= 1 with count(m*step) > kr; count(m*step) >= m bounds the search
    std::int64_t lo = 1, hi = kr + 1;
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      if (exclusive_multiple_count(checked_mul(mid, step), p, q) > kr)
        hi = mid;
      else
        lo = mid + 1;
    }
    return checked_mul(lo, step);
  };
  return checked_add(base, std::min(first_exceeding(p), first_exceeding(q)));
}

// Minimum holes over the bordered family at length n >= q (coprime 1 < p < q):
// floor((n-q)/p) + floor((n-q+1)/p). CLI kind `Hs`.
inline std::int64_t bordered_min_holes(std::int64_t n, std::int64_t p, std::int64_t q) {
  detail::require_ordered(p, q, "bordered_min_holes");
  if (n < q) throw std::domain_error("bordered_min_holes: requires n >= q");
  return (n - q) / p + (n - q + 1) / p;
}

// Generalized inverse of bordered_min_holes:
// ceil((h+1)/2) * p + q - ((h+1) mod 2). CLI kind `Ls`.
inline std::int64_t bordered_threshold(std::int64_t h, std::int64_t p, std::int64_t q) {
  detail::require_ordered(p, q, "bordered_threshold");
  if (h < 0) throw std::domain_error("bordered_threshold: requires h >= 0");
  const std::int64_t half_up = h / 2 + 1;            // ceil((h+1)/2)
  const std::int64_t parity_adj = 1 - h % 2;         // (h+1) mod 2
  return checked_sub(checked_add(checked_mul(half_up, p), q), parity_adj);
}

// Minimum holes over the pinned special words of length n: the minimum over
// pin positions l of count(l) + count(n-l-1). The length is first reduced by
// the period (value shifts by p+q-2 per p*q of length), so the scan costs
// O(min(n, p*q)). CLI kind `Hd`.
inline std::int64_t special_min_holes(std::int64_t n, std::int64_t p, std::int64_t q) {
  detail::require_coprime_gt1(p, q, "special_min_holes");
  const std::int64_t lower = std::max(p, q);
  if (n < lower) throw std::domain_error("special_min_holes: requires n >= max(p, q)");

  const std::int64_t pq = checked_mul(p, q);
  std::int64_t shift = 0;
  if (n - lower >= pq) {
    const std::int64_t wraps = (n - lower) / pq;
    n -= wraps * pq;
    shift = checked_mul(wraps, p + q - 2);
  }
  std::int64_t best = exclusive_multiple_count(n - 1, p, q);  // l == 0
  for (std::int64_t l = 1; l < n; ++l) {
    best = std::min(best, exclusive_multiple_count(l, p, q) +
                              exclusive_multiple_count(n - l - 1, p, q));
  }
  return checked_add(best, shift);
}

// Generalized inverse of special_min_holes, linear scan form: the maximum over
// k of nth_exclusive_multiple(k) + nth_exclusive_multiple(h-k), with the
// sequence generated once by merging multiples of p and q (common multiples
// skipped). O(h + log p + log q).
inline std::int64_t special_threshold_linear(std::int64_t h, std::int64_t p, std::int64_t q) {
  detail::require_coprime_gt1(p, q, "special_threshold_linear");
  if (h < 0) throw std::domain_error("special_threshold_linear: requires h >= 0");

  std::vector<std::int64_t> seq(static_cast<std::size_t>(h) + 1);
  std::int64_t mp = p, mq = q;
  for (std::size_t i = 0; i < seq.size();) {
    if (mp == mq) {  // common multiple: counts for neither side
      mp = checked_add(mp, p);
      mq = checked_add(mq, q);
      continue;
    }
    if (mp < mq) {
      seq[i++] = mp;
      mp = checked_add(mp, p);
    } else {
      seq[i++] = mq;
      mq = checked_add(mq, q);
    }
  }
  std::int64_t best = 0;
  for (std::int64_t k = 0; 2 * k <= h; ++k)
    best = std::max(best, checked_add(seq[static_cast<std::size_t>(k)],
                                      seq[static_cast<std::size_t>(h - k)]));
  return best;
}

// Same value in O(log p + log q) arithmetic operations, for coprime p, q > 2.
// The hole budget is first reduced modulo p+q-2 (each full period is worth
// p*q of length); the reduced budget h' is resolved through the best
// approximations of p/q with weight bound h'+3: if their weights sum to h'+4
// the two one-sided answers add up, otherwise the answer is the single
// (h'+2)-th exclusive multiple. CLI kind `Ld`.
inline std::int64_t special_threshold(std::int64_t h, std::int64_t p, std::int64_t q) {
  detail::require_coprime_gt1(p, q, "special_threshold");
  if (p == 2 || q == 2) throw std::domain_error("special_threshold: requires p, q > 2");
  if (h < 0) throw std::domain_error("special_threshold: requires h >= 0");

  const std::int64_t period = checked_sub(checked_add(p, q), 2);
  const std::int64_t pq = checked_mul(p, q);
  const std::int64_t wraps = h / period;
  const std::int64_t hr = h % period;
  const std::int64_t base = wraps == 0 ? 0 : checked_mul(wraps, pq);

  if (hr == period - 1) return checked_add(base, pq);

  const auto [left, right] = best_approx_pair(Fraction(p, q), hr + 3);
  if (checked_add(left.weight(), right.weight()) == hr + 4) {
    return checked_add(base, checked_add(nth_exclusive_multiple(left.weight() - 2, p, q),
                                         nth_exclusive_multiple(right.weight() - 2, p, q)));
  }
  return checked_add(base, nth_exclusive_multiple(hr + 2, p, q));
}

// Full holes function for coprime 2 < p < q and n >= p+q-2: the bordered
// family is tight up to q + p*ceil(q/p) - 1 and again on [3q, q+3p-1]; the
// special family is tight everywhere else. CLI kind `H`.
inline std::int64_t min_holes(std::int64_t n, std::int64_t p, std::int64_t q) {
  detail::require_ordered(p, q, "min_holes");
  if (p == 2) throw std::domain_error("min_holes: requires p > 2");
  if (n < p + q - 2) throw std::domain_error("min_holes: requires n >= p+q-2");

  const std::int64_t bordered_hi =
      checked_sub(checked_add(q, checked_mul(p, (q + p - 1) / p)), 1);
  const bool bordered_regime =
      n <= bordered_hi ||
      (static_cast<__int128>(3) * q <= n &&
       n <= static_cast<__int128>(q) + static_cast<__int128>(3) * p - 1);
  return bordered_regime ? bordered_min_holes(n, p, q) : special_min_holes(n, p, q);
}

// Full threshold for p == 2 (q odd, q > 2):
//   threshold_p2(h, q) = 2q * floor(h/q) + q + (h mod q) + 1.
// Derived from the structure of the position graph - the two parity classes
// are cliques and the cross edges split by residue mod q into complete
// bipartite blocks, so the minimum separator of length n = mq+s is
// s*floor((m+1)/2) + (q-s)*floor(m/2) - and validated against the separator
// oracle (tests cover q <= 11, h <= 20 exactly). A closed form sometimes
// quoted for this case, (2p+1)*floor(h/p) + h mod p, does not hold: it leaves
// p unbound in a statement that fixes p = 2 and yields 0 at h = 0 instead of
// the classical q + 1.
inline std::int64_t threshold_p2(std::int64_t h, std::int64_t q) {
  if (q <= 2 || q % 2 == 0) throw std::domain_error("threshold_p2: requires odd q > 2");
  if (h < 0) throw std::domain_error("threshold_p2: requires h >= 0");
  return checked_add(checked_mul(checked_mul(2, q), h / q), checked_add(q, h % q + 1));
}

// Full threshold function L. Reduces gcd(p,q) = g > 1 to the coprime core
// (value scales by g), dispatches p == 2 to threshold_p2, and otherwise
// routes between the bordered and special families: the bordered form wins
// iff q/p > ceil(h/2), plus the isolated exception h == 4 with q/p < 3/2.
// O(log p + log q) arithmetic operations. Instances with p | q or q | p have
// no finite threshold and raise trivial_instance_error. CLI kind `L`.
inline std::int64_t threshold(std::int64_t h, std::int64_t p, std::int64_t q) {
  if (p <= 1 || q <= 1) throw std::domain_error("threshold: requires p, q > 1");
  if (h < 0) throw std::domain_error("threshold: requires h >= 0");
  const std::int64_t g = std::gcd(p, q);
  if (g == p || g == q)
    throw trivial_instance_error("threshold: one period divides the other; the gcd period is "
                                 "forced at every length");
  std::int64_t pp = p / g, qq = q / g;
  if (pp > qq) std::swap(pp, qq);

  std::int64_t core;
  if (pp == 2) {
    core = threshold_p2(h, qq);
  } else {
    const bool bordered_regime =
        static_cast<__int128>(pp) * (h / 2 + h % 2) < qq ||  // q/p > ceil(h/2)
        (h == 4 && static_cast<__int128>(2) * qq < static_cast<__int128>(3) * pp);
    core = bordered_regime ? bordered_threshold(h, pp, qq) : special_threshold(h, pp, qq);
  }
  return checked_mul(g, core);
}

// min_holes recomputed by inverting threshold() with a binary search over the
// hole budget; an independent route kept as a cross-check of the duality
// min_holes(n) <= h  iff  threshold(h) > n.
inline std::int64_t min_holes_via_threshold(std::int64_t n, std::int64_t p, std::int64_t q) {
  detail::require_ordered(p, q, "min_holes_via_threshold");
  if (n < p + q - 2) throw std::domain_error("min_holes_via_threshold: requires n >= p+q-2");
  std::int64_t lo = 0, hi = n;  // threshold(n, p, q) > n always
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (threshold(mid, p, q) > n)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace pword
