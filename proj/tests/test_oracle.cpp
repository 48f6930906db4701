#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "pword/oracle.hpp"
#include "pword/partial_word.hpp"
#include "pword/thresholds.hpp"

using pword::PQGraph;

TEST_CASE("separator oracle reproduces the reference holes row for (5,7)") {
  const std::vector<std::int64_t> expected{0, 1, 2, 2, 2, 2, 3, 3, 3, 4, 4, 5, 5, 5, 5, 6};
  for (std::int64_t n = 10; n <= 25; ++n) {
    CHECK(pword::min_holes_oracle(n, 5, 7) == expected[static_cast<std::size_t>(n - 10)]);
  }
}

TEST_CASE("minimum separator of the (20,5,7) graph is 4 and the witness is genuine") {
  const PQGraph g(20, 5, 7);
  const auto result = pword::min_vertex_separator(g);
  CHECK_FALSE(result.complete);
  CHECK(result.size == 4);
  REQUIRE(result.witness.size() == 4);

  // removing the witness really disconnects
  std::vector<char> removed(20, 0);
  for (const int v : result.witness) removed[static_cast<std::size_t>(v)] = 1;
  const auto adj = g.adjacency();
  int start = -1, kept = 0;
  for (int v = 0; v < 20; ++v)
    if (!removed[static_cast<std::size_t>(v)]) {
      if (start == -1) start = v;
      ++kept;
    }
  std::vector<char> seen(20, 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const int u : adj[static_cast<std::size_t>(v)]) {
      if (removed[static_cast<std::size_t>(u)] || seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  CHECK(reached < kept);

  // the word the separator encodes is a valid counterexample word
  const pword::PartialWord word = pword::separator_word(g, result.witness);
  CHECK(word.hole_count() == 4);
  CHECK(word.non_unary());
  CHECK(pword::has_strong_period(word, 5));
  CHECK(pword::has_strong_period(word, 7));
  CHECK_FALSE(pword::has_strong_period(word, 1));
}

TEST_CASE("spot values") {
  CHECK(pword::min_holes_oracle(11, 5, 7) == 1);
  CHECK(pword::min_holes_oracle(12, 5, 7) == 2);
  CHECK(pword::min_holes_oracle(18, 5, 7) == 3);
  CHECK(pword::min_holes_oracle(10, 5, 7) == 0);  // already disconnected
}

TEST_CASE("the length-(p+q-2) graph splits into exactly two components") {
  for (std::int64_t p = 2; p <= 11; ++p) {
    for (std::int64_t q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const PQGraph g(p + q - 2, p, q);
      REQUIRE_FALSE(g.connected());
      const auto word = pword::separator_word(g, {});
      std::set<int> letters;
      for (const auto sym : word.symbols()) letters.insert(sym.letter_id());
      REQUIRE(letters.size() == 2);
    }
  }
}

TEST_CASE("exhaustive subset oracle agrees with the flow oracle") {
  CHECK(pword::min_holes_oracle_exhaustive(16, 5, 7, 6) == 3);
  CHECK(pword::min_holes_oracle_exhaustive(11, 5, 7, 6) == 1);
  CHECK(pword::min_holes_oracle_exhaustive(10, 5, 7, 6) == 0);
  CHECK(pword::min_holes_oracle_exhaustive(25, 5, 7, 4) == std::nullopt);  // H(25,5,7) == 6

  for (std::int64_t p = 3; p <= 7; ++p) {
    for (std::int64_t q = p + 1; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = std::max(p, q); n <= 22; ++n) {
        const std::int64_t flow = pword::min_holes_oracle(n, p, q);
        if (flow > 5) continue;
        REQUIRE(pword::min_holes_oracle_exhaustive(n, p, q, 5) == flow);
      }
    }
  }
}

TEST_CASE("separator value never exceeds either family bound") {
  for (std::int64_t p = 3; p <= 9; ++p) {
    for (std::int64_t q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = q; n <= 40; ++n) {
        const std::int64_t oracle = pword::min_holes_oracle(n, p, q);
        REQUIRE(oracle <= pword::bordered_min_holes(n, p, q));
        REQUIRE(oracle <= pword::special_min_holes(n, p, q));
      }
    }
  }
}

TEST_CASE("witness separators encode valid counterexample words") {
  for (std::int64_t p = 3; p <= 7; ++p) {
    for (std::int64_t q = p + 1; q <= 8; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = p + q - 1; n <= 24; ++n) {
        const PQGraph g(n, p, q);
        const auto result = pword::min_vertex_separator(g);
        REQUIRE_FALSE(result.complete);
        if (result.size == 0) continue;
        REQUIRE(static_cast<std::int64_t>(result.witness.size()) == result.size);
        const auto word = pword::separator_word(g, result.witness);
        REQUIRE(word.hole_count() == result.size);
        REQUIRE(word.non_unary());
        REQUIRE(pword::has_strong_period(word, p));
        REQUIRE(pword::has_strong_period(word, q));
        REQUIRE_FALSE(pword::has_strong_period(word, 1));
      }
    }
  }
}

TEST_CASE("exhaustive oracle reports its budget") {
  // the complete graph never disconnects, so every subset size is tried
  CHECK_THROWS_AS(pword::min_holes_oracle_exhaustive(27, 1, 1, 27),
                  pword::budget_exceeded_error);
}

TEST_CASE("threshold scan oracle") {
  CHECK(pword::threshold_oracle(2, 5, 7, 140) == 16);
  CHECK(pword::threshold_oracle(5, 5, 7, 140) == 25);
  CHECK(pword::threshold_oracle(0, 5, 7, 140) == 11);
  CHECK_THROWS_AS(pword::threshold_oracle(5, 5, 7, 20), std::domain_error);
}

TEST_CASE("q-edge counts per residue class") {
  const PQGraph g(20, 5, 7);
  const auto counts = pword::q_edge_counts(g);
  REQUIRE(counts.size() == 5);
  CHECK(counts[4] == 2);

  for (std::int64_t p = 3; p <= 9; ++p) {
    for (std::int64_t q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t n = q + 1; n <= 40; ++n) {
        const PQGraph graph(n, p, q);
        const auto edge_counts = pword::q_edge_counts(graph);
        std::int64_t total = 0;
        for (std::int64_t j = 0; j < p; ++j) {
          const std::int64_t closed_form = (n - j - q + p - 1) / p;  // ceil((n-j-q)/p)
          REQUIRE(edge_counts[static_cast<std::size_t>(j)] == std::max<std::int64_t>(closed_form, 0));
          total += edge_counts[static_cast<std::size_t>(j)];
        }
        // partition of all q-edges
        std::int64_t direct = 0;
        for (std::int64_t i = 0; i + q < n; ++i) ++direct;
        REQUIRE(total == direct);
        // the two lightest classes give the bordered hole count
        REQUIRE(edge_counts[static_cast<std::size_t>(p - 1)] +
                    edge_counts[static_cast<std::size_t>(p - 2)] ==
                pword::bordered_min_holes(n, p, q));
      }
    }
  }
}
