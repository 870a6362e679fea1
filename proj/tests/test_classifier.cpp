#include <doctest.h>

#include <stdexcept>

#include "corpus.hpp"
#include "interp/classifier.hpp"

using namespace interp;

namespace {

Tuple make(i64 d, i64 g, i64 r) { return Tuple{d, g, r, {}}; }

Tuple with(Tuple t, int slot, i64 count) {
  t.n[slot] = count;
  return t;
}

}  // namespace

TEST_CASE("delta matches the six-row table") {
  MarkedCounts n;
  CHECK(*delta(n) == 2);  // (I, J) = (0, 0)

  n = MarkedCounts{};
  n[kSlot100] = 1;
  CHECK(*delta(n) == 3);  // (1, 0)

  n = MarkedCounts{};
  n[kSlot110] = 1;
  CHECK(*delta(n) == 5);  // (1, 1)

  n = MarkedCounts{};
  n[kSlot200] = 1;
  CHECK(*delta(n) == 4);  // (2, 0)

  n = MarkedCounts{};
  n[kSlot110] = 1;
  n[kSlot100] = 1;
  CHECK(*delta(n) == 5);  // (2, 1)

  n = MarkedCounts{};
  n[kSlot100] = 3;
  CHECK(*delta(n) == 4);  // (3, 0)

  n = MarkedCounts{};
  n[kSlot200] = 2;  // I + J = 4: out of the table's domain
  CHECK(!delta(n));
}

TEST_CASE("classify: zero marked points reproduces the main theorem") {
  CHECK(classify(make(5, 2, 3)) == Classification::NotGood);
  CHECK(classify(make(6, 2, 4)) == Classification::NotGood);
  CHECK(classify(make(7, 2, 5)) == Classification::NotGood);
  CHECK(classify(make(8, 2, 6)) == Classification::Good);
  CHECK(classify(make(20, 3, 12)) == Classification::Good);

  for (i64 r = 3; r <= 15; ++r) {
    for (i64 d = r; d <= 40; ++d) {
      for (i64 g = 0; g <= d - r; ++g) {
        const auto got = classify(make(d, g, r));
        const auto want = is_exceptional_triple(d, g, r)
                              ? Classification::NotGood
                              : Classification::Good;
        CHECK(got == want);
      }
    }
  }
}

TEST_CASE("classify: preconditions") {
  CHECK_THROWS_AS(classify(make(4, 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(classify(with(make(9, 2, 4), kSlot002, 2)),
                  std::invalid_argument);  // K too large
}

TEST_CASE("classify: regime violations are NotGood") {
  CHECK(classify(with(make(5, 2, 3), kSlot100, 10)) == Classification::NotGood);
}

TEST_CASE("classify: r = 2 and rational curves") {
  CHECK(classify(with(make(6, 2, 2), kSlot100, 2)) == Classification::Good);
  CHECK(classify(with(make(7, 0, 4), kSlot100, 1)) == Classification::Good);
}

TEST_CASE("classify: space-curve families are withheld") {
  // Family 2 member: K = 1, sum i n = 2d + 2g - 9.
  const Tuple fam2 = with(with(make(6, 1, 3), kSlot001, 1), kSlot100, 5);
  CHECK(classify(fam2) == Classification::OutsideClosedForm);

  // Off-family space curves with points are good.
  CHECK(classify(with(make(6, 1, 3), kSlot110, 1)) == Classification::Good);
}

TEST_CASE("classify: high-dimension families for r >= 12") {
  // First family: I = J = 1, K = r - 2, d + g = 2r - 2.
  Tuple fam1 = make(17, 5, 12);
  fam1.n[kSlot111] = 1;
  fam1.n[kSlot002] = 4;
  fam1.n[kSlot001] = 1;
  CHECK(classify(fam1) == Classification::OutsideClosedForm);

  // Mod-5 family at r = 13 with K between the two thresholds: the default
  // theorem threshold withholds, the strengthened corollary decides good.
  Tuple fam2 = make(17, 4, 13);
  fam2.n[kSlot002] = 4;  // K = 8, delta = 2, d+g+r = 34 = delta + 2 mod 5
  CHECK(classify(fam2, false) == Classification::OutsideClosedForm);
  CHECK(classify(fam2, true) == Classification::Good);

  // r = 11 is excellent across the board.
  Tuple t11 = make(16, 5, 11);
  t11.n[kSlot111] = 1;
  t11.n[kSlot002] = 4;  // K = 9, heavy but admissible
  CHECK(classify(t11) == Classification::Good);
}

TEST_CASE("classify: excellent proposition ranges with marked points") {
  CHECK(classify(with(make(9, 2, 4), kSlot100, 1)) == Classification::Good);
  CHECK(classify(with(make(12, 2, 5), kSlot100, 1)) == Classification::Good);
  CHECK(classify(with(make(11, 2, 6), kSlot100, 1)) == Classification::Good);
  CHECK(classify(with(make(12, 2, 7), kSlot100, 1)) == Classification::Good);
  CHECK(classify(with(make(8, 0, 8), kSlot100, 1)) == Classification::Good);
  CHECK(classify(with(make(10, 1, 9), kSlot100, 1)) == Classification::Good);
  // Below the proven window: withheld.
  CHECK(classify(with(make(8, 2, 4), kSlot100, 1)) ==
        Classification::OutsideClosedForm);
}

TEST_CASE("classify: good implies regime on corpus") {
  for (const Tuple& t : testing::random_corpus(2000)) {
    if (classify(t) == Classification::Good) CHECK(regime_holds(t));
  }
}

TEST_CASE("classify: genus 0 is decided by regime alone") {
  for (i64 r = 3; r <= 6; ++r) {
    for (i64 d = r; d <= 12; ++d) {
      enumerate_marked_counts(d, 0, r, [&](const MarkedCounts& n) {
        CHECK(classify(Tuple{d, 0, r, n}) == Classification::Good);
      });
      // Off-stream counts that fail regime get the opposite verdict.
      Tuple heavy{d, 0, r, {}};
      heavy.n[kSlot100] = 3 * d;
      if (is_admissible(heavy) && !regime_holds(heavy))
        CHECK(classify(heavy) == Classification::NotGood);
    }
  }
}

TEST_CASE("the mod-5 family cannot capture n = 0 in high dimension") {
  // Second exception family needs K = 4r - 2d - 2g - delta(n) > r/2; with
  // n = 0 both K and the table value force a contradiction, so zero
  // marked counts always classify definitively for r >= 12.
  for (i64 r = 12; r <= 20; ++r) {
    for (i64 d = r; d <= r + 10; ++d) {
      for (i64 g = 0; g <= d - r; ++g) {
        const MarkedCounts zero{};
        CHECK(*delta(zero) == 2);
        CHECK(!(0 > r / 2));  // K = 0 can never clear the threshold
        const auto got = classify(Tuple{d, g, r, zero});
        CHECK(got != Classification::OutsideClosedForm);
      }
    }
  }
}

TEST_CASE("is_excellent") {
  CHECK(is_excellent(10, 0, 4) == Excellence::Yes);   // rational curves
  CHECK(is_excellent(11, 0, 4) == Excellence::Yes);   // d + g >= 11
  CHECK(is_excellent(6, 2, 4) == Excellence::No);
  CHECK(is_excellent(5, 2, 3) == Excellence::No);
  CHECK(is_excellent(12, 3, 9) == Excellence::Yes);   // plow
  CHECK(is_excellent(6, 1, 3) == Excellence::Unproven);
  CHECK(is_excellent(8, 2, 4) == Excellence::Unproven);
  CHECK(is_excellent(6, 2, 2) == Excellence::Yes);
  // Induction through r = 12 from the r = 11 propositions.
  CHECK(is_excellent(22, 1, 12) == Excellence::Yes);
  CHECK(is_excellent(21, 1, 12) == Excellence::Unproven);
  CHECK_THROWS_AS(is_excellent(4, 2, 3), std::invalid_argument);
}

TEST_CASE("max_general_points frozen values") {
  // The two special-cased triples, and the middle one via the formula.
  CHECK(max_general_points(5, 2, 3) == 9);
  CHECK(max_general_points(6, 2, 4) == 9);
  CHECK(max_general_points(7, 2, 5) == 9);

  const std::pair<std::array<i64, 3>, i64> frozen[] = {
      {{4, 0, 3}, 8},   {{5, 0, 3}, 10},  {{6, 1, 3}, 12},  {{7, 2, 3}, 14},
      {{8, 3, 3}, 16},  {{6, 0, 4}, 10},  {{7, 1, 4}, 11},  {{8, 2, 4}, 13},
      {{10, 4, 4}, 15}, {{7, 0, 5}, 11},  {{8, 1, 5}, 12},  {{9, 2, 5}, 13},
      {{10, 3, 5}, 14}, {{9, 0, 6}, 13},  {{10, 1, 6}, 14}, {{12, 3, 6}, 15},
      {{11, 0, 7}, 15}, {{12, 1, 7}, 16}, {{14, 2, 8}, 17}, {{15, 3, 9}, 17},
  };
  for (const auto& [dgr, want] : frozen) {
    CHECK(max_general_points(dgr[0], dgr[1], dgr[2]) == want);
  }
  CHECK_THROWS_AS(max_general_points(4, 2, 3), std::invalid_argument);
}
