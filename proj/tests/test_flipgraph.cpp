#include "rbd/flipgraph.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

using namespace rbd;

namespace {

// Number of maximal interior-blowdown sequences of n, by direct recursion.
// Each such sequence corresponds to one directed path from the fan to n.
Int count_blowdown_sequences(const Tuple& n, std::map<Tuple, Int>& memo) {
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Int total = 0;
  bool any = false;
  for (std::size_t i = 1; i + 1 < n.size(); ++i) {
    if (n[i] != 1) continue;
    any = true;
    total += count_blowdown_sequences(blowdown(n, static_cast<int>(i) + 1),
                                      memo);
  }
  if (!any) total = 1;
  memo.emplace(n, total);
  return total;
}

}  // namespace

TEST_CASE("flip graph structure") {
  for (int k = 3; k <= 8; ++k) {
    GradedGraph g = build_gk(k);
    REQUIRE(Int(g.vertices.size()) == catalan(k - 1));
    REQUIRE(g.vertices[0].tuple == testutil::fan(k));
    REQUIRE(g.vertices[0].height == 0);
    CHECK_FALSE(g.p);
    CHECK_FALSE(g.hj);
    std::map<int, int> out_degree;
    for (const GraphEdge& e : g.edges) {
      ++out_degree[e.src];
      REQUIRE(e.flips.size() == 1);
      REQUIRE_FALSE(e.weights);
      REQUIRE(g.vertices[e.dst].height == g.vertices[e.src].height + 1);
    }
    for (int v = 0; v < static_cast<int>(g.vertices.size()); ++v)
      REQUIRE(out_degree[v] ==
              k - 2 - static_cast<int>(g.vertices[v].height));
  }
  CHECK_THROWS_AS(build_gk(1), InvalidInput);
  CHECK_THROWS_AS(build_gk(13), LimitExceeded);
}

TEST_CASE("path counts match blowdown sequence counts") {
  for (int k = 3; k <= 7; ++k) {
    GradedGraph g = build_gk(k);
    std::map<Tuple, Int> memo;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      const Tuple& n = g.vertices[i].tuple;
      REQUIRE(count_paths(g, 0, static_cast<int>(i)) ==
              count_blowdown_sequences(n, memo));
    }
  }
  GradedGraph g5 = build_gk(5);
  CHECK(count_paths(g5, testutil::fan(5), {2, 1, 4, 1, 2}) == 2);
  CHECK(count_paths(g5, {2, 1, 4, 1, 2}, testutil::fan(5)) == 0);
  CHECK(count_paths(g5, 0, 0) == 1);
  GradedGraph g7 = build_gk(7);
  CHECK(count_paths(g7, testutil::fan(7), {2, 1, 4, 2, 1, 4, 1}) == 3);
  CHECK(count_paths(g7, testutil::fan(7), {3, 2, 1, 4, 2, 1, 4}) == 6);
  CHECK_THROWS_AS(count_paths(g5, 0, 99), InvalidInput);
  CHECK_THROWS_AS(count_paths(g5, {3, 3}, {2, 1, 4, 1, 2}), InvalidInput);
}

TEST_CASE("plumbing weights of flip sequences") {
  CHECK(edge_weights({1}) == Tuple{4});
  CHECK(edge_weights({3, 2}) == Tuple{5, 2});
  CHECK(edge_weights({1, 2}) == Tuple{2, 5});
  CHECK(edge_weights({2, 1, 3}) == Tuple{2, 5, 3});
  CHECK(edge_weights({5, 4, 6, 7, 3, 2, 1}) == Tuple{5, 2, 5, 4, 2, 2, 2});
  CHECK(edge_weights({4, 5, 3}) == Tuple{3, 5, 2});
  CHECK_THROWS_AS(edge_weights({}), InvalidInput);
  CHECK_THROWS_AS(edge_weights({2, 2}), InvalidInput);
}

TEST_CASE("blowdown graph of a bound") {
  GradedGraph g = build_gpq(81, 47);
  REQUIRE(g.k == 5);
  REQUIRE(g.p == Int(81));
  REQUIRE(g.q == Int(47));
  REQUIRE(g.hj == Tuple{3, 2, 3, 3, 3});
  REQUIRE(g.vertices.size() == 6);
  REQUIRE(g.edges.size() == 7);
  REQUIRE(g.vertices[0].tuple == testutil::fan(5));
  for (const GraphVertex& v : g.vertices) {
    REQUIRE(v.betti);
    REQUIRE(*v.betti == 5 - v.height);
  }
  for (const GraphEdge& e : g.edges) {
    REQUIRE(e.weights);
    REQUIRE(*e.weights == edge_weights(e.flips));
    REQUIRE_FALSE(e.flips.empty());
  }
  CHECK_THROWS_AS(build_gpq(24, 18), InvalidInput);
  CHECK_THROWS_AS(build_gpq(7, 7), InvalidInput);
  // k = 1 bounds have no graph.
  CHECK_THROWS_AS(build_gpq(2, 1), InvalidInput);
}

TEST_CASE("graph distances") {
  GradedGraph g = build_gpq(24, 7);
  CHECK(graph_distance(g, testutil::fan(5), {2, 1, 4, 1, 2}) ==
        std::optional<Entry>(2));
  CHECK(graph_distance(g, testutil::fan(5), {2, 1, 3, 2, 1}) ==
        std::optional<Entry>(1));
  CHECK(graph_distance(g, 0, 0) == std::optional<Entry>(0));
  CHECK_FALSE(graph_distance(g, {2, 1, 4, 1, 2}, testutil::fan(5)));
  CHECK_THROWS_AS(graph_distance(g, 0, 99), InvalidInput);
}

TEST_CASE("path extraction") {
  GradedGraph g5 = build_gk(5);
  CHECK(lex_min_path(g5, {2, 1, 4, 1, 2}) == std::vector<int>{1, 3});
  CHECK(lex_min_path(g5, testutil::fan(5)).empty());
  auto paths = all_paths(g5, {2, 1, 4, 1, 2});
  std::set<std::vector<int>> want{{1, 3}, {3, 1}};
  CHECK(std::set<std::vector<int>>(paths.begin(), paths.end()) == want);
  // Path lengths always equal the height of the target.
  for (const GraphVertex& v : g5.vertices)
    for (const auto& p : all_paths(g5, v.tuple))
      REQUIRE(Entry(p.size()) == v.height);
}

TEST_CASE("depth recipes blow down one enumeration per phase") {
  DepthRecipe left = depth_recipe(24, 7, {2, 1, 4, 1, 2});
  REQUIRE(left.b == Tuple{2, 2, 4, 2, 2});
  REQUIRE(left.start == testutil::fan(5));
  REQUIRE(left.steps.size() == 2);
  CHECK(left.steps[0].flips == std::vector<int>{1});
  CHECK(left.steps[0].weights == Tuple{4});
  CHECK(left.steps[0].stop == Tuple{2, 1, 3, 2, 1});
  CHECK(left.steps[1].flips == std::vector<int>{3});
  CHECK(left.steps[1].stop == Tuple{2, 1, 4, 1, 2});

  DepthRecipe right = depth_recipe(24, 7, {2, 1, 4, 1, 2},
                                   {InteriorOneSelector::rightmost(),
                                    InteriorOneSelector::rightmost()});
  REQUIRE(right.steps.size() == 2);
  CHECK(right.steps[0].stop == Tuple{1, 2, 3, 1, 2});
  CHECK(right.steps[1].stop == Tuple{2, 1, 4, 1, 2});

  // Ordinal selectors replicate the keyword ones.
  DepthRecipe named = depth_recipe(
      1971, 1156, {3, 1, 4, 3, 1, 2, 4, 1, 4},
      {InteriorOneSelector::middle(), InteriorOneSelector::rightmost(),
       InteriorOneSelector::leftmost()});
  DepthRecipe ordinals = depth_recipe(
      1971, 1156, {3, 1, 4, 3, 1, 2, 4, 1, 4},
      {InteriorOneSelector::at(2), InteriorOneSelector::at(2),
       InteriorOneSelector::at(1)});
  REQUIRE(named.steps.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(named.steps[i].flips == ordinals.steps[i].flips);
    CHECK(named.steps[i].stop == ordinals.steps[i].stop);
  }

  DepthRecipe fan_recipe = depth_recipe(24, 7, {1, 2, 2, 2, 1});
  CHECK(fan_recipe.steps.empty());
  DepthRecipe seed = depth_recipe(2, 1, {0});
  CHECK(seed.start == Tuple{0});
  CHECK(seed.steps.empty());

  CHECK_THROWS_AS(depth_recipe(24, 7, {1, 3, 1, 3, 1}), NotAFilling);
  CHECK_THROWS_AS(depth_recipe(24, 7, {2, 1, 4, 1, 2},
                               {InteriorOneSelector::at(3)}),
                  InvalidSelector);
}
