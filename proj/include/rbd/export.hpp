#pragma once

// JSON and Graphviz serialization for graded graphs.  The JSON form is the
// exchange format of the CLI and round-trips losslessly; integers only.

#include "rbd/core.hpp"
#include "rbd/flipgraph.hpp"
#include "rbd/polygon.hpp"

#include <json.hpp>

#include <limits>
#include <map>

namespace rbd {

namespace detail {
inline std::int64_t to_i64(const Int& x) {
  if (x > std::numeric_limits<std::int64_t>::max() ||
      x < std::numeric_limits<std::int64_t>::min())
    throw LimitExceeded("json export: integer does not fit 64 bits");
  return static_cast<std::int64_t>(x);
}
}  // namespace detail

inline nlohmann::json graph_to_json(const GradedGraph& g) {
  nlohmann::json j;
  j["k"] = g.k;
  if (g.p) j["p"] = detail::to_i64(*g.p);
  if (g.q) j["q"] = detail::to_i64(*g.q);
  if (g.hj) j["hj"] = *g.hj;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t id = 0; id < g.vertices.size(); ++id) {
    const GraphVertex& v = g.vertices[id];
    nlohmann::json jv;
    jv["id"] = id;
    jv["tuple"] = v.tuple;
    jv["height"] = v.height;
    if (v.betti) jv["betti"] = *v.betti;
    nlohmann::json diags = nlohmann::json::array();
    for (const Diagonal& d : phi_inverse(v.tuple).diagonals())
      diags.push_back({d.first, d.second});
    jv["diagonals"] = diags;
    j["vertices"].push_back(std::move(jv));
  }
  j["edges"] = nlohmann::json::array();
  for (const GraphEdge& e : g.edges) {
    nlohmann::json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["flips"] = e.flips;
    if (e.weights) je["weights"] = *e.weights;
    j["edges"].push_back(std::move(je));
  }
  return j;
}

inline GradedGraph graph_from_json(const nlohmann::json& j) {
  GradedGraph g;
  g.k = j.at("k").get<int>();
  if (j.contains("p")) g.p = Int(j.at("p").get<std::int64_t>());
  if (j.contains("q")) g.q = Int(j.at("q").get<std::int64_t>());
  if (j.contains("hj")) g.hj = j.at("hj").get<Tuple>();
  for (const auto& jv : j.at("vertices")) {
    if (jv.at("id").get<int>() != static_cast<int>(g.vertices.size()))
      throw InvalidInput("graph json: vertex ids must be dense and in order");
    GraphVertex v;
    v.tuple = jv.at("tuple").get<Tuple>();
    v.height = jv.at("height").get<Entry>();
    if (jv.contains("betti")) v.betti = jv.at("betti").get<Entry>();
    g.vertices.push_back(std::move(v));
  }
  for (const auto& je : j.at("edges")) {
    GraphEdge e;
    e.src = je.at("src").get<int>();
    e.dst = je.at("dst").get<int>();
    e.flips = je.at("flips").get<std::vector<int>>();
    if (je.contains("weights")) e.weights = je.at("weights").get<Tuple>();
    if (e.src < 0 || e.dst < 0 ||
        e.src >= static_cast<int>(g.vertices.size()) ||
        e.dst >= static_cast<int>(g.vertices.size()))
      throw InvalidInput("graph json: edge endpoint out of range");
    g.edges.push_back(std::move(e));
  }
  return g;
}

// Graphviz digraph, vertices grouped into ranks by height, edges labelled
// with their weight tuple (or flip index when weights are absent).
inline std::string graph_to_dot(const GradedGraph& g) {
  std::ostringstream os;
  os << "digraph rbd {\n  rankdir=TB;\n";
  std::map<Entry, std::vector<std::size_t>> by_height;
  for (std::size_t id = 0; id < g.vertices.size(); ++id)
    by_height[g.vertices[id].height].push_back(id);
  for (const auto& [h, ids] : by_height) {
    os << "  { rank=same;";
    for (std::size_t id : ids) os << " v" << id << ";";
    os << " }\n";
  }
  for (std::size_t id = 0; id < g.vertices.size(); ++id)
    os << "  v" << id << " [label=\"" << to_string(g.vertices[id].tuple)
       << "\"];\n";
  for (const GraphEdge& e : g.edges) {
    os << "  v" << e.src << " -> v" << e.dst << " [label=\"";
    if (e.weights) {
      os << to_string(*e.weights);
    } else {
      for (std::size_t i = 0; i < e.flips.size(); ++i)
        os << (i ? " " : "") << "d" << e.flips[i];
    }
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace rbd
