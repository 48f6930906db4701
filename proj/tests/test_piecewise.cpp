#include <doctest.h>

#include <numeric>
#include <string>
#include <vector>

#include "pword/piecewise.hpp"
#include "pword/piecewise_io.hpp"
#include "pword/thresholds.hpp"

using pword::Fraction;
using pword::LinearForm;
using pword::Piece;
using pword::PiecewiseThreshold;

TEST_CASE("linear form rendering") {
  CHECK(LinearForm{1, 4, 0}.str() == "q+4p");
  CHECK(LinearForm{0, 8, 0}.str() == "8p");
  CHECK(LinearForm{3, 0, 0}.str() == "3q");
  CHECK(LinearForm{4, 1, 0}.str() == "4q+p");
  CHECK(LinearForm{1, 6, -1}.str() == "q+6p-1");
  CHECK(LinearForm{0, 0, 0}.str() == "0");
  CHECK(LinearForm{1, 4, 0}.evaluate(5, 7) == 27);
}

TEST_CASE("breakpoint grid") {
  // budget 7: anchors 0/10, 1/9, 2/8, ..., middles 1/10, 2/9, ... (values)
  const auto pts = pword::special_points(7);
  REQUIRE(pts.special.size() == 11);
  REQUIRE(pts.middle.size() == 11);
  for (std::int64_t i = 1; i <= 11; ++i) {
    if (11 - i > 0) {
      CHECK(pts.special[static_cast<std::size_t>(i - 1)] == Fraction(i - 1, 11 - i));
      CHECK(pts.middle[static_cast<std::size_t>(i - 1)] == Fraction(i, 11 - i));
    }
  }
  CHECK(pts.special[5] == Fraction(1, 1));       // 5/5
  CHECK(pts.special.back() == Fraction::infinity());
  CHECK(pword::special_points(0).middle[0] == Fraction(1, 3));
}

TEST_CASE("exclusive-multiple table matches the reference diagrams") {
  // budget 7 (the table of the 9th exclusive multiple): 10p, q, 9p, 2q, 8p,
  // 3q, 7p, 4q, 6p, 5q over [0,1]
  const PiecewiseThreshold g7 = pword::exclusive_multiple_table(7);
  REQUIRE(g7.pieces.size() == 10);
  CHECK(g7.pieces[0].form == LinearForm{0, 10, 0});
  CHECK(g7.pieces[0].lo == Fraction(0, 1));
  CHECK(g7.pieces[0].hi == Fraction(1, 10));
  CHECK(g7.pieces[1].form == LinearForm{1, 0, 0});
  CHECK(g7.pieces[1].hi == Fraction(1, 9));
  CHECK(g7.pieces[3].form == LinearForm{2, 0, 0});
  CHECK(g7.pieces[3].lo == Fraction(2, 9));
  CHECK(g7.pieces[3].hi == Fraction(1, 4));  // 2/8
  CHECK(g7.pieces.back().form == LinearForm{5, 0, 0});
  CHECK(g7.pieces.back().hi == Fraction(1, 1));

  // budget 10: ..., 6q on [6/8, 6/7], then 7p on [6/7, 7/7]
  const PiecewiseThreshold g10 = pword::exclusive_multiple_table(10);
  const Piece& last = g10.pieces.back();
  CHECK(last.form == LinearForm{0, 7, 0});
  CHECK(last.lo == Fraction(6, 7));
  CHECK(last.hi == Fraction(1, 1));
  const Piece& second_last = g10.pieces[g10.pieces.size() - 2];
  CHECK(second_last.form == LinearForm{6, 0, 0});
  CHECK(second_last.lo == Fraction(3, 4));  // 6/8
  CHECK(second_last.hi == Fraction(6, 7));
}

TEST_CASE("exclusive-multiple table alternates pure-p and pure-q forms") {
  for (std::int64_t h = 0; h <= 20; ++h) {
    const PiecewiseThreshold table = pword::exclusive_multiple_table(h);
    for (std::size_t i = 0; i < table.pieces.size(); ++i) {
      const LinearForm& form = table.pieces[i].form;
      REQUIRE(form.c_0 == 0);
      if (i % 2 == 0) {
        REQUIRE(form.c_q == 0);
        REQUIRE(form.c_p > 0);
      } else {
        REQUIRE(form.c_p == 0);
        REQUIRE(form.c_q > 0);
      }
    }
  }
}

TEST_CASE("exclusive-multiple table evaluates correctly inside its domain") {
  for (std::int64_t h = 0; h <= 25; ++h) {
    const PiecewiseThreshold table = pword::exclusive_multiple_table(h);
    for (std::int64_t p = 3; p <= 19; ++p) {
      for (std::int64_t q = p + 1; p + q <= 40; ++q) {
        if (std::gcd(p, q) != 1 || p + q <= h + 4) continue;
        REQUIRE(table.evaluate(p, q) == pword::nth_exclusive_multiple(h + 2, p, q));
      }
    }
  }
}

TEST_CASE("exclusive-multiple table boundary defect at p+q == h+4 is the known one") {
  // when the ratio is itself a reduced middle point the two touching pieces
  // both evaluate to p*q, while the true value is p*q + p
  for (const auto& [p, q] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {5, 7}, {4, 7}}) {
    const std::int64_t h = p + q - 4;
    CHECK(pword::exclusive_multiple_table(h).evaluate(p, q) == p * q);
    CHECK(pword::nth_exclusive_multiple(h + 2, p, q) == p * q + p);
  }
}

TEST_CASE("adjacent closed pieces agree where they touch") {
  for (std::int64_t h = 0; h <= 20; ++h) {
    for (const PiecewiseThreshold& table :
         {pword::exclusive_multiple_table(h), pword::special_threshold_table(h),
          pword::threshold_table(h)}) {
      for (std::size_t i = 0; i + 1 < table.pieces.size(); ++i) {
        const Piece& a = table.pieces[i];
        const Piece& b = table.pieces[i + 1];
        REQUIRE(a.hi <= b.lo);  // sorted, disjoint interiors
        if (a.hi == b.lo && a.hi_closed && b.lo_closed) {
          // equal value at the shared ratio: compare c_q*den + c_p*num and
          // the constant separately (constants only occur in open pieces)
          const Fraction shared = a.hi;
          REQUIRE(a.form.c_0 == b.form.c_0);
          REQUIRE(a.form.c_q * shared.den() + a.form.c_p * shared.num() ==
                  b.form.c_q * shared.den() + b.form.c_p * shared.num());
        }
      }
    }
  }
}

TEST_CASE("special-threshold table spot checks") {
  // budget 8 at 5/7 lands in the open middle piece 2q+4p
  const PiecewiseThreshold t8 = pword::special_threshold_table(8);
  CHECK(t8.evaluate(5, 7) == 34);
  bool found_middle = false;
  for (const Piece& piece : t8.pieces) {
    if (piece.contains(Fraction(5, 7))) {
      CHECK(piece.form == LinearForm{2, 4, 0});
      CHECK_FALSE(piece.lo_closed);
      CHECK_FALSE(piece.hi_closed);
      CHECK(piece.lo == Fraction(2, 3));
      CHECK(piece.hi == Fraction(3, 4));
      found_middle = true;
    }
  }
  CHECK(found_middle);

  // budget 7 at 5/7: the closed piece [2/3, 4/5] valued 6p
  const PiecewiseThreshold t7 = pword::special_threshold_table(7);
  CHECK(t7.evaluate(5, 7) == 30);

  // budget p+q-3 evaluates to p*q at the ratio itself
  CHECK(pword::special_threshold_table(4).evaluate(3, 4) == 12);
  CHECK(pword::special_threshold_table(9).evaluate(5, 7) == 35);
}

TEST_CASE("special-threshold table equals the fast route across the grid") {
  for (std::int64_t h = 0; h <= 25; ++h) {
    const PiecewiseThreshold table = pword::special_threshold_table(h);
    for (std::int64_t p = 3; p <= 19; ++p) {
      for (std::int64_t q = p + 1; p + q <= 40; ++q) {
        if (std::gcd(p, q) != 1 || h > p + q - 3) continue;
        REQUIRE(table.evaluate(p, q) == pword::special_threshold(h, p, q));
      }
    }
  }
}

TEST_CASE("threshold table golden rendering for budget 7") {
  const std::string expected =
      "q+4p on (0, 1/4)\n"
      "8p on [1/4, 1/3]\n"
      "q+5p on (1/3, 2/5)\n"
      "3q on [2/5, 3/7]\n"
      "7p on [3/7, 1/2]\n"
      "q+5p on (1/2, 3/5)\n"
      "4q on [3/5, 2/3]\n"
      "6p on [2/3, 4/5]\n"
      "4q+p on (4/5, 1)\n";
  CHECK(pword::to_text(pword::threshold_table(7)) == expected);
}

TEST_CASE("threshold table golden rendering for budget 10") {
  const std::string expected =
      "q+6p-1 on (0, 1/5)\n"
      "11p on (1/5, 1/4]\n"
      "q+7p on (1/4, 2/7)\n"
      "3q on [2/7, 3/10]\n"
      "10p on [3/10, 2/5]\n"
      "4q on [2/5, 4/9]\n"
      "9p on [4/9, 1/2]\n"
      "q+7p on (1/2, 4/7)\n"
      "5q on [4/7, 5/8]\n"
      "8p on [5/8, 3/4]\n"
      "6q on [3/4, 6/7]\n"
      "7p on [6/7, 1]\n";
  CHECK(pword::to_text(pword::threshold_table(10)) == expected);
}

TEST_CASE("small-budget threshold tables") {
  const PiecewiseThreshold t0 = pword::threshold_table(0);
  REQUIRE(t0.pieces.size() == 1);
  CHECK(t0.pieces[0].form == LinearForm{1, 1, -1});
  CHECK(t0.evaluate(5, 7) == 11);

  const PiecewiseThreshold t4 = pword::threshold_table(4);
  REQUIRE(t4.pieces.size() == 3);
  CHECK(t4.pieces[0].form == LinearForm{1, 3, -1});
  CHECK(t4.pieces[1].form == LinearForm{1, 3, 0});  // the q/p in (3/2, 2) exception band
  CHECK(t4.pieces[2].form == LinearForm{1, 3, -1});
  CHECK(t4.evaluate(5, 7) == 21);
  CHECK(t4.evaluate(3, 5) == 14);
  CHECK(t4.evaluate(3, 4) == 12);
}

TEST_CASE("threshold table equals the point evaluation across the grid") {
  for (std::int64_t h = 0; h <= 25; ++h) {
    const PiecewiseThreshold table = pword::threshold_table(h);
    REQUIRE(static_cast<std::int64_t>(table.pieces.size()) <= 4 * h + 8);
    for (std::int64_t p = 3; p <= 19; ++p) {
      for (std::int64_t q = p + 1; p + q <= 40; ++q) {
        if (std::gcd(p, q) != 1 || h >= p + q - 2) continue;
        REQUIRE(table.evaluate(p, q) == pword::threshold(h, p, q));
      }
    }
  }
}

TEST_CASE("table evaluation rejects out-of-domain ratios") {
  CHECK_THROWS_AS(pword::threshold_table(7).evaluate(4, 6), std::domain_error);
  CHECK_THROWS_AS(pword::threshold_table(7).evaluate(7, 5), std::domain_error);
}

TEST_CASE("tsv round-trip is bit-exact") {
  for (const std::int64_t h : {0, 3, 4, 7, 10, 13}) {
    const PiecewiseThreshold table = pword::threshold_table(h);
    const std::string tsv = pword::to_tsv(table);
    const PiecewiseThreshold back = pword::from_tsv(tsv);
    REQUIRE(back == table);
    REQUIRE(pword::to_tsv(back) == tsv);
  }
  CHECK_THROWS_AS(pword::from_tsv("garbage"), std::invalid_argument);
}

TEST_CASE("structured round-trip is bit-exact") {
  for (const std::int64_t h : {0, 3, 4, 7, 10, 13}) {
    const PiecewiseThreshold table = pword::threshold_table(h);
    const nlohmann::json doc = pword::to_json(table);
    const PiecewiseThreshold back = pword::from_json(doc);
    REQUIRE(back == table);
    REQUIRE(pword::to_json(back).dump() == doc.dump());
  }
}
