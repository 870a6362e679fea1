#include <doctest.h>

#include "corpus.hpp"
#include "interp/rules.hpp"

using namespace interp;

namespace {

Tuple make(i64 d, i64 g, i64 r) { return Tuple{d, g, r, {}}; }

Tuple with(Tuple t, int slot, i64 count) {
  t.n[slot] = count;
  return t;
}

bool measure_decreases(const Tuple& parent, const Tuple& child) {
  return child.d < parent.d ||
         (child.d == parent.d && child.n.total() < parent.n.total());
}

}  // namespace

TEST_CASE("count transforms") {
  MarkedCounts n;
  n[kSlot111] = 2;  // (1,1;1)
  n[kSlot201] = 1;  // (2,0;1)
  n[kSlot100] = 3;  // (1,0;0)
  n[kSlot001] = 1;  // (0,0;1)

  const MarkedCounts collapsed = collapse_k(n);
  CHECK(collapsed[kSlot110] == 2);
  CHECK(collapsed[kSlot200] == 1);
  CHECK(collapsed[kSlot100] == 3);
  CHECK(collapsed[kSlot001] == 0);
  CHECK(collapsed.total() == 6);

  const MarkedCounts keep = stick_transpose_keep_k(n);
  CHECK(keep[kSlot101] == 2);  // (1,1;1) -> (1,0;1)
  CHECK(keep[kSlot001] == 2);  // (2,0;1) -> (0,0;1), plus the old (0,0;1)
  CHECK(keep[kSlot100] == 0);  // (1,0;0) -> dropped
  CHECK(keep.total() == 4);

  const MarkedCounts drop = stick_transpose_drop_k(n);
  CHECK(drop[kSlot100] == 2);  // only the j = 1 points survive
  CHECK(drop.total() == 2);
}

TEST_CASE("two-secant") {
  // (6,1,3;0): K = 0 < r - 2, child gains a (1,1;1) point.
  const auto apps = apply_two_secant(make(6, 1, 3));
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].rule == RuleId::TwoSecantA);
  REQUIRE(apps[0].children.size() == 1);
  CHECK(apps[0].children[0] == with(make(5, 0, 3), kSlot111, 1));

  // (5,2,3;0) is applicable; the child feeds the exceptional family.
  const auto apps2 = apply_two_secant(make(5, 2, 3));
  REQUIRE(apps2.size() == 1);
  CHECK(apps2[0].children[0] == with(make(4, 1, 3), kSlot111, 1));

  // g = 0 is out.
  CHECK(apply_two_secant(make(7, 0, 4)).empty());
  CHECK(apply_two_secant(with(make(7, 0, 4), kSlot100, 1)).empty());

  // K = r - 2 collapses and adds a (1,1;0) point.
  const Tuple t = with(make(9, 2, 4), kSlot002, 1);  // K = 2 = r - 2
  const auto apps3 = apply_two_secant(t);
  REQUIRE(apps3.size() == 1);
  CHECK(apps3[0].rule == RuleId::TwoSecantB);
  CHECK(apps3[0].children[0] == with(make(8, 1, 4), kSlot110, 1));
}

TEST_CASE("two-secant-backwards") {
  // K = r - 3 at r = 5: child gains one (1,0;1).
  const Tuple t = with(make(8, 2, 5), kSlot002, 1);
  const auto apps = apply_two_secant_backwards(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].rule == RuleId::TwoSecantBackA);
  CHECK(apps[0].children[0] == with(make(7, 1, 5), kSlot101, 1));

  // K = r - 2 gains one (1,0;2).
  const Tuple t2 = with(with(make(9, 2, 5), kSlot002, 1), kSlot001, 1);
  const auto apps2 = apply_two_secant_backwards(t2);
  REQUIRE(apps2.size() == 1);
  CHECK(apps2[0].rule == RuleId::TwoSecantBackB);
  CHECK(apps2[0].children[0] == with(make(8, 1, 5), kSlot102, 1));

  // r = 3 and wrong K are out.
  CHECK(apply_two_secant_backwards(with(make(8, 2, 3), kSlot001, 1)).empty());
  CHECK(apply_two_secant_backwards(make(9, 2, 5)).empty());
}

TEST_CASE("stick") {
  // (5,2,3; 9 points of (1,0;0)): lhs 9 in window [7,9]; all points land
  // on (0,0;0) and vanish.
  const Tuple t = with(make(5, 2, 3), kSlot100, 9);
  const auto apps = apply_stick(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].rule == RuleId::StickA);
  CHECK(apps[0].children[0] == make(4, 2, 2));

  // Below the window: inapplicable.
  CHECK(apply_stick(make(5, 2, 3)).empty());

  // K = r - 2 case: (3,0,3; one (1,0;1)) sits at lhs 0 in window [-1,1].
  const Tuple t2 = with(make(3, 0, 3), kSlot101, 1);
  const auto apps2 = apply_stick(t2);
  REQUIRE(apps2.size() == 1);
  CHECK(apps2[0].rule == RuleId::StickB);
  CHECK(apps2[0].children[0] == make(2, 0, 2));
}

TEST_CASE("two-sticks") {
  // lhs outside the window.
  CHECK(apply_two_sticks(make(8, 3, 5)).empty());
  // r = 3 excluded.
  CHECK(apply_two_sticks(with(make(5, 1, 3), kSlot100, 1)).empty());

  // K = r - 2 case yields exactly one (2,0;1).
  Tuple t = make(8, 1, 5);
  t.n[kSlot111] = 1;
  t.n[kSlot002] = 1;  // K = 3 = r - 2, lhs = 2 in window [1,7]
  const auto apps = apply_two_sticks(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].rule == RuleId::TwoSticksC);
  Tuple expected = make(6, 0, 4);
  expected.n[kSlot100] = 1;  // the (1,1;1) point transposes to (1,0;0)
  expected.n[kSlot201] = 1;  // the new point
  CHECK(apps[0].children[0] == expected);
}

TEST_CASE("lower-d") {
  const auto apps = apply_lower_d(make(6, 1, 3));
  REQUIRE(apps.size() == 1);
  REQUIRE(apps[0].children.size() == 2);
  CHECK(apps[0].children[0] == make(5, 1, 3));
  CHECK(apps[0].children[1] == make(5, 1, 2));

  CHECK(apply_lower_d(make(5, 2, 3)).empty());  // d = g + r
  CHECK(apply_lower_d(with(make(6, 1, 3), kSlot110, 1)).empty());  // J != 0
}

TEST_CASE("izz") {
  const Tuple t = with(make(6, 1, 4), kSlot100, 2);
  const auto apps = apply_izz(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].consumed_l == 1);
  REQUIRE(apps[0].children.size() == 2);
  CHECK(apps[0].children[0] == with(make(6, 1, 4), kSlot100, 1));
  CHECK(apps[0].children[1] == make(5, 1, 3));

  // Both point types present: two candidate applications, l ascending.
  const Tuple t2 = with(with(make(8, 1, 4), kSlot100, 1), kSlot200, 1);
  const auto apps2 = apply_izz(t2);
  REQUIRE(apps2.size() == 2);
  CHECK(apps2[0].consumed_l == 1);
  CHECK(apps2[1].consumed_l == 2);

  CHECK(apply_izz(make(6, 1, 4)).empty());
}

TEST_CASE("ijz") {
  const Tuple t = with(make(7, 1, 3), kSlot110, 1);
  const auto apps = apply_ijz(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].children[0] == make(7, 1, 3));
  CHECK(apps[0].consumed_l == 1);
  CHECK(apps[0].consumed_m == 1);

  CHECK(apply_ijz(with(make(7, 1, 4), kSlot110, 1)).empty());  // r != 3
  CHECK(apply_ijz(make(7, 1, 3)).empty());                     // no point
}

TEST_CASE("zzk") {
  const Tuple t = with(make(7, 1, 4), kSlot001, 2);
  const auto apps = apply_zzk(t);
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].consumed_l == 1);
  REQUIRE(apps[0].children.size() == 2);
  CHECK(apps[0].children[0] == with(make(7, 1, 4), kSlot001, 1));
  CHECK(apps[0].children[1] == make(7, 1, 4));

  CHECK(apply_zzk(make(7, 1, 4)).empty());
}

TEST_CASE("special-5") {
  const auto apps = apply_special5(make(10, 4, 5));
  REQUIRE(apps.size() == 1);
  CHECK(apps[0].children[0] == with(make(8, 2, 5), kSlot101, 2));

  const auto apps2 = apply_special5(make(8, 2, 5));
  REQUIRE(apps2.size() == 1);
  CHECK(apps2[0].children[0] == with(make(6, 0, 5), kSlot101, 2));

  CHECK(apply_special5(make(10, 4, 4)).empty());
  CHECK(apply_special5(make(10, 1, 5)).empty());
  CHECK(apply_special5(with(make(10, 4, 5), kSlot100, 1)).empty());
  // (7,2,5;0): the child would violate regime, so the rule declines.
  CHECK(apply_special5(make(7, 2, 5)).empty());
}

TEST_CASE("base cases") {
  auto base = [](const Tuple& t) { return base_case(t, true); };

  REQUIRE(base(make(4, 2, 2)));
  CHECK(base(make(4, 2, 2))->rule == RuleId::BaseP2);

  // (4,1,3; three (1,0;0) points): sum (i-k) n = 3 in window [1,3].
  const Tuple mid = with(make(4, 1, 3), kSlot100, 3);
  REQUIRE(base(mid));
  CHECK(base(mid)->rule == RuleId::BaseP3Mid);
  CHECK(!base(make(5, 1, 3)));  // window [3,5] misses 0

  REQUIRE(base(make(11, 2, 9)));
  CHECK(base(make(11, 2, 9))->rule == RuleId::BaseLastCase);
  CHECK(base(make(6, 1, 5))->rule == RuleId::BaseLastCase);  // g = 1 member

  const Tuple t835 = with(make(8, 3, 5), kSlot101, 2);
  REQUIRE(base(t835));
  CHECK(base(t835)->rule == RuleId::Base835);
  CHECK(!base(with(make(6, 1, 5), kSlot101, 2)));  // wrong (d, g)

  REQUIRE(base(make(7, 0, 4)));
  CHECK(base(make(7, 0, 4))->rule == RuleId::BaseRational);
  CHECK(!base_case(make(7, 0, 4), false));  // shortcut disabled

  CHECK(!base(make(9, 2, 5)));
}

TEST_CASE("rule corpus properties") {
  const auto corpus = testing::random_corpus(4000);
  for (const Tuple& t : corpus) {
    for (const RuleFamily& family : search_rule_families()) {
      for (const RuleApplication& app : family.fn(t)) {
        CHECK(app.parent == t);
        CHECK(!app.children.empty());
        const i64 K = t.n.sum_k();
        // Children valid, measure decreasing, regime preserved.
        for (const Tuple& child : app.children) {
          CHECK(is_admissible(child));
          CHECK(measure_decreases(t, child));
          CHECK(regime_holds(child));
        }
        for (const SideCondition& sc : app.side_conditions)
          CHECK(sc.satisfied);
        // The variant must match the parent's K-case.
        switch (app.rule) {
          case RuleId::TwoSecantA: CHECK(K < t.r - 2); break;
          case RuleId::TwoSecantB: CHECK(K == t.r - 2); break;
          case RuleId::TwoSecantBackA: CHECK(K == t.r - 3); break;
          case RuleId::TwoSecantBackB: CHECK(K == t.r - 2); break;
          case RuleId::StickA: CHECK(K < t.r - 2); break;
          case RuleId::StickB: CHECK(K == t.r - 2); break;
          case RuleId::TwoSticksA: CHECK(K < t.r - 3); break;
          case RuleId::TwoSticksB: CHECK(K == t.r - 3); break;
          case RuleId::TwoSticksC: CHECK(K == t.r - 2); break;
          default: break;
        }
      }
    }
  }
}

TEST_CASE("stick children satisfy regime whenever applicable") {
  // Lemma-level guarantee: inside the window the child always passes.
  for (const Tuple& t : testing::random_corpus(4000, 99u)) {
    for (const RuleApplication& app : apply_stick(t)) {
      for (const Tuple& child : app.children) CHECK(regime_holds(child));
    }
  }
}

TEST_CASE("rule names round-trip") {
  for (RuleId id : {RuleId::TwoSecantA, RuleId::StickB, RuleId::LowerD,
                    RuleId::Base835, RuleId::NegTwist}) {
    CHECK(rule_from_name(rule_name(id)) == id);
  }
  CHECK(!rule_from_name("NoSuchRule"));
}
