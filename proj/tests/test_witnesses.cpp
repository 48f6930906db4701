#include <doctest.h>

#include <numeric>
#include <random>

#include "pword/constructions.hpp"
#include "pword/partial_word.hpp"
#include "pword/piecewise.hpp"
#include "pword/thresholds.hpp"

namespace {

// The cheapest counterexample word of length n: whichever family min_holes
// routes to, built explicitly (for the special family, the best pin is the
// argmin of the hole-count split).
pword::PartialWord optimal_counterexample(std::int64_t n, std::int64_t p, std::int64_t q) {
  const std::int64_t target = pword::min_holes(n, p, q);
  const std::int64_t bordered_max = p + q + 2 * p * (q / p);
  if (n <= bordered_max && pword::bordered_min_holes(n, p, q) == target)
    return pword::bordered_word_of_length(n, p, q);

  std::int64_t best_pin = 0;
  std::int64_t best = -1;
  for (std::int64_t l = 0; l < n; ++l) {
    const std::int64_t holes = pword::exclusive_multiple_count(l, p, q) +
                               pword::exclusive_multiple_count(n - l - 1, p, q);
    if (best == -1 || holes < best) {
      best = holes;
      best_pin = l;
    }
  }
  return pword::special_word(n, p, q, best_pin);
}

}  // namespace

TEST_CASE("a word with the stated hole count exists one position below every threshold") {
  for (std::int64_t p = 3; p <= 10; ++p) {
    for (std::int64_t q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t h = 0; h <= 20; ++h) {
        const std::int64_t length = pword::threshold(h, p, q);
        const std::int64_t n = length - 1;
        const std::int64_t holes = pword::min_holes(n, p, q);
        REQUIRE(holes <= h);

        const pword::PartialWord word = optimal_counterexample(n, p, q);
        REQUIRE(word.size() == static_cast<std::size_t>(n));
        REQUIRE(word.hole_count() == holes);
        REQUIRE(word.non_unary());
        REQUIRE(pword::has_strong_period(word, p));
        REQUIRE(pword::has_strong_period(word, q));
        REQUIRE_FALSE(pword::has_strong_period(word, 1));
      }
    }
  }
}

TEST_CASE("threshold tables at larger budgets match point evaluation") {
  std::mt19937_64 rng(0xab1e);
  std::uniform_int_distribution<std::int64_t> period(3, 20'000);
  for (const std::int64_t h : {31, 64, 97, 150, 200}) {
    const pword::PiecewiseThreshold table = pword::threshold_table(h);
    const pword::PiecewiseThreshold multiples = pword::exclusive_multiple_table(h);
    REQUIRE(static_cast<std::int64_t>(table.pieces.size()) <= 4 * h + 8);
    int samples = 0;
    while (samples < 150) {
      std::int64_t p = period(rng), q = period(rng);
      if (p > q) std::swap(p, q);
      if (p == q || p <= 2 || std::gcd(p, q) != 1 || h >= p + q - 2) continue;
      ++samples;
      REQUIRE(table.evaluate(p, q) == pword::threshold(h, p, q));
      if (p + q > h + 4)
        REQUIRE(multiples.evaluate(p, q) == pword::nth_exclusive_multiple(h + 2, p, q));
    }
  }
}
