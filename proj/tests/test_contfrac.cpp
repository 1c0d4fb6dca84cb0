#include "rbd/contfrac.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace rbd;

TEST_CASE("expansion of known fractions") {
  CHECK(hj_expand(24, 17) == Tuple{2, 2, 4, 2, 2});
  CHECK(hj_expand(24, 7) == Tuple{4, 2, 4});
  CHECK(hj_expand(81, 34) == Tuple{3, 2, 3, 3, 3});
  CHECK(hj_expand(81, 47) == Tuple{2, 4, 3, 3, 2});
  CHECK(hj_expand(37, 27) == Tuple{2, 2, 3, 2, 4});
  CHECK(hj_expand(45, 19) == Tuple{3, 2, 3, 2, 3});
  CHECK(hj_expand(140, 99) == Tuple{2, 2, 4, 2, 4, 2, 2});
  CHECK(hj_expand(140, 41) == Tuple{4, 2, 4, 2, 4});
  CHECK(hj_expand(1971, 815) == Tuple{3, 2, 4, 3, 2, 2, 4, 2, 4});
  CHECK(hj_expand(2, 1) == Tuple{2});
  CHECK(hj_expand(7, 1) == Tuple{7});
}

TEST_CASE("expansion round trips through evaluation") {
  for (int p = 2; p <= 200; ++p) {
    for (int q = 1; q < p; ++q) {
      if (gcd(Int(p), Int(q)) != 1) continue;
      Tuple b = hj_expand(p, q);
      for (Entry e : b) REQUIRE(e >= 2);
      auto v = cf_eval(b);
      REQUIRE(v);
      REQUIRE(*v == Rat(p, q));
    }
  }
}

TEST_CASE("expansion rejects bad input") {
  CHECK_THROWS_AS(hj_expand(4, 2), InvalidInput);
  CHECK_THROWS_AS(hj_expand(3, 4), InvalidInput);
  CHECK_THROWS_AS(hj_expand(3, 3), InvalidInput);
  CHECK_THROWS_AS(hj_expand(3, 0), InvalidInput);
  CHECK_THROWS_AS(hj_expand(0, 1), InvalidInput);
}

TEST_CASE("evaluation handles admissible and inadmissible tuples") {
  CHECK(*cf_eval({4, 2, 4}) == Rat(24, 7));
  CHECK(*cf_eval({2, 2, 2}) == Rat(4, 3));
  CHECK(*cf_eval({1, 2, 1}) == 0);
  CHECK(*cf_eval({2, 1, 2}) == 0);
  CHECK(*cf_eval({3, 1}) == 2);
  CHECK(*cf_eval({5}) == 5);
  // Only the tails beyond the first entry must stay positive; the value
  // itself may be negative.
  CHECK(*cf_eval({1, 1, 2}) == Rat(-1));
  // A vanishing or negative tail makes the tuple inadmissible.
  CHECK_FALSE(cf_eval({1, 1, 1}));
  CHECK_FALSE(cf_eval({2, 1, 1}));
  CHECK_FALSE(cf_eval({1, 2, 3, 1, 3, 1, 2}));
  CHECK_FALSE(cf_eval({2, 0}));
  CHECK_FALSE(cf_eval({3, -1, 3}));
  CHECK(is_admissible({1, 2, 3, 1, 3, 2, 1}));
  CHECK_FALSE(is_admissible({1, 2, 3, 1, 3, 1, 2}));
}

TEST_CASE("dual expansion matches the dot diagram") {
  CHECK(riemenschneider_dual({3, 2, 3, 3, 3}) == Tuple{2, 4, 3, 3, 2});
  CHECK(riemenschneider_dual({2, 2, 2, 4, 2, 2, 3, 2, 5}) ==
        Tuple{5, 2, 5, 4, 2, 2, 2});
  // Sweep every tuple with entries 2..5 and length <= 6 against the
  // independent staircase construction, and check the involution.
  for (int len = 1; len <= 6; ++len) {
    Tuple b(len, 2);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == len) {
        Tuple dual = riemenschneider_dual(b);
        REQUIRE(dual == testutil::dot_dual(b));
        REQUIRE(riemenschneider_dual(dual) == b);
        return;
      }
      for (Entry e = 2; e <= 5; ++e) {
        b[i] = e;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
  CHECK_THROWS_AS(riemenschneider_dual({2, 1, 3}), InvalidInput);
  CHECK_THROWS_AS(riemenschneider_dual(Tuple{}), InvalidInput);
}

TEST_CASE("dual pairs with swapped denominators") {
  for (auto [p, q] : std::vector<std::pair<int, int>>{
           {24, 7}, {81, 34}, {37, 10}, {45, 19}, {140, 41}, {1971, 815}}) {
    Tuple a = hj_expand(p, q);
    Tuple b = hj_expand(p, p - q);
    CHECK(riemenschneider_dual(a) == b);
    CHECK(riemenschneider_dual(b) == a);
  }
}

TEST_CASE("wahl family membership and parameters") {
  auto p4 = wahl_params(Tuple{4});
  REQUIRE(p4);
  CHECK(p4->s == 2);
  CHECK(p4->h == 1);
  auto p25 = wahl_params(Tuple{2, 5});
  REQUIRE(p25);
  CHECK(p25->s == 3);
  CHECK(p25->h == 2);
  auto p52 = wahl_params(Tuple{5, 2});
  REQUIRE(p52);
  CHECK(p52->s == 3);
  CHECK(p52->h == 1);
  auto p253 = wahl_params(Tuple{2, 5, 3});
  REQUIRE(p253);
  CHECK(p253->s == 5);
  CHECK(p253->h == 3);
  auto p622 = wahl_params(Tuple{6, 2, 2});
  REQUIRE(p622);
  CHECK(p622->s == 4);
  CHECK(p622->h == 1);
  CHECK_FALSE(wahl_params(Tuple{2}));
  CHECK_FALSE(wahl_params(Tuple{3, 3}));
  CHECK_FALSE(wahl_params(Tuple{2, 4, 4, 2}));
  CHECK_FALSE(wahl_params(Tuple{2, 2}));
}

TEST_CASE("wahl family generated forward agrees with recognition") {
  // Grow the family from (4) by the two moves; every member must be
  // recognised, and recognition must agree with parameter extraction on a
  // full sweep of candidate tuples.
  std::vector<Tuple> frontier{{4}};
  std::set<Tuple> family(frontier.begin(), frontier.end());
  for (int step = 0; step < 6; ++step) {
    std::vector<Tuple> next;
    for (const Tuple& w : frontier) {
      Tuple a = w;
      a.insert(a.begin(), 2);
      ++a.back();
      Tuple b = w;
      b.push_back(2);
      ++b.front();
      for (const Tuple& t : {a, b})
        if (family.insert(t).second) next.push_back(t);
    }
    frontier = std::move(next);
  }
  for (const Tuple& w : family) {
    CHECK(is_wahl_family(w));
    auto par = wahl_params(w);
    REQUIRE(par);
    // Definition: the tuple is the expansion of s^2/(sh-1).
    CHECK(hj_expand(par->s * par->s, par->s * par->h - 1) == w);
  }
  for (int len = 1; len <= 6; ++len) {
    Tuple w(len, 2);
    auto rec = [&](auto&& self, int i) -> void {
      if (i == len) {
        CHECK(is_wahl_family(w) == wahl_params(w).has_value());
        CHECK(is_wahl_family(w) == (family.count(w) > 0));
        return;
      }
      for (Entry e = 2; e <= 8; ++e) {
        w[i] = e;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
  }
}
