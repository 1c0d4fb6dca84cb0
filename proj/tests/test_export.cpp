#include "rbd/export.hpp"

#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>

using namespace rbd;

namespace {

void require_equal(const GradedGraph& a, const GradedGraph& b) {
  REQUIRE(a.k == b.k);
  REQUIRE(a.p == b.p);
  REQUIRE(a.q == b.q);
  REQUIRE(a.hj == b.hj);
  REQUIRE(a.vertices == b.vertices);
  REQUIRE(a.edges == b.edges);
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("json round trips graded graphs") {
  for (int k = 2; k <= 8; ++k) {
    GradedGraph g = build_gk(k);
    require_equal(graph_from_json(graph_to_json(g)), g);
  }
  for (auto [p, q] : std::vector<std::pair<Int, Int>>{
           {24, 7}, {81, 47}, {140, 41}}) {
    GradedGraph g = build_gpq(p, q);
    require_equal(graph_from_json(graph_to_json(g)), g);
  }
}

TEST_CASE("json fields") {
  GradedGraph g = build_gpq(24, 7);
  nlohmann::json j = graph_to_json(g);
  CHECK(j["k"] == 5);
  CHECK(j["p"] == 24);
  CHECK(j["q"] == 7);
  CHECK(j["hj"].get<Tuple>() == Tuple{2, 2, 4, 2, 2});
  REQUIRE(j["vertices"].is_array());
  CHECK(j["vertices"][0]["tuple"].get<Tuple>() == Tuple{1, 2, 2, 2, 1});
  for (const auto& jv : j["vertices"]) {
    CHECK(jv.contains("betti"));
    // Every triangulation of the hexagon carries k - 2 = 3 diagonals.
    CHECK(jv["diagonals"].size() == 3);
  }
  for (const auto& je : j["edges"]) CHECK(je.contains("weights"));

  nlohmann::json jk = graph_to_json(build_gk(5));
  CHECK_FALSE(jk.contains("p"));
  CHECK_FALSE(jk.contains("hj"));
  for (const auto& jv : jk["vertices"]) CHECK_FALSE(jv.contains("betti"));
  for (const auto& je : jk["edges"]) CHECK_FALSE(je.contains("weights"));
}

TEST_CASE("json parsing rejects inconsistent graphs") {
  GradedGraph g = build_gpq(24, 7);
  nlohmann::json j = graph_to_json(g);
  nlohmann::json sparse = j;
  sparse["vertices"][1]["id"] = 9;
  CHECK_THROWS_AS(graph_from_json(sparse), InvalidInput);
  nlohmann::json dangling = j;
  dangling["edges"][0]["dst"] = 99;
  CHECK_THROWS_AS(graph_from_json(dangling), InvalidInput);
  CHECK_THROWS(graph_from_json(nlohmann::json::object()));
}

TEST_CASE("dot rendering") {
  GradedGraph g = build_gpq(81, 47);
  std::string dot = graph_to_dot(g);
  CHECK(dot.rfind("digraph rbd {", 0) == 0);
  CHECK(count_of(dot, "{") == count_of(dot, "}"));
  CHECK(count_of(dot, "->") == g.edges.size());
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("label=\"(1,2,2,2,1)\"") != std::string::npos);
  // Weight labels ride on the edges of a blowdown graph.
  CHECK(dot.find("label=\"(4)\"") != std::string::npos);

  std::string dot_k = graph_to_dot(build_gk(4));
  // Flip labels stand in when weights are absent.
  CHECK(dot_k.find("label=\"d1\"") != std::string::npos);
  CHECK(count_of(dot_k, "->") == build_gk(4).edges.size());
}
