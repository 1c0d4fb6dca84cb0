#pragma once

// Graded flip graphs and the rational blowdown graph of a lens space.
//
// G_k: vertices are the triangulations of the (k+1)-gon identified with
// their tuples in Z_k, graded by height; one directed edge per flip of a
// distinguished diagonal.  All paths between two vertices have the same
// length, so path counting runs as a DP along the grading.
//
// G^{p,q}_k keeps only the tuples bounded by the expansion of p/(p-q) and
// joins u -> v exactly when G_k has a unique path from u to v; that path is
// contiguous and its flip sequence determines the plumbing weights of the
// rational blowdown via the two-sided weight iteration.

#include "rbd/contfrac.hpp"
#include "rbd/core.hpp"
#include "rbd/polygon.hpp"
#include "rbd/tuples.hpp"

#include <deque>
#include <map>
#include <optional>

namespace rbd {

struct GraphVertex {
  Tuple tuple;
  Entry height = 0;
  std::optional<Entry> betti;  // only in G^{p,q}
  bool operator==(const GraphVertex&) const = default;
};

struct GraphEdge {
  int src = 0;
  int dst = 0;
  std::vector<int> flips;        // diagonal indices, in flip order
  std::optional<Tuple> weights;  // plumbing weights, only in G^{p,q}
  bool operator==(const GraphEdge&) const = default;
};

struct GradedGraph {
  int k = 0;
  std::optional<Int> p, q;  // set for G^{p,q}
  std::optional<Tuple> hj;  // expansion of p/(p-q)
  std::vector<GraphVertex> vertices;  // sorted by tuple; vertices[0] is root
  std::vector<GraphEdge> edges;       // sorted by (src, dst)

  int index_of(const Tuple& t) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (vertices[i].tuple == t) return static_cast<int>(i);
    throw InvalidInput("graph: tuple is not a vertex: " + to_string(t));
  }
};

// Fan-rooted flip graph on all of Z_k.  A vertex of height r has exactly
// k - 2 - r outgoing flips (the distinguished diagonals it still carries).
inline GradedGraph build_gk(int k, int limit = kDefaultMaxK) {
  if (k < 2) throw InvalidInput("build_gk: need k >= 2");
  if (k > limit)
    throw LimitExceeded("build_gk: k exceeds limit " + std::to_string(limit));
  GradedGraph g;
  g.k = k;
  std::vector<Tuple> tuples = enumerate_zk(k, limit);
  std::map<Tuple, int> index;
  for (const Tuple& t : tuples) {
    index.emplace(t, static_cast<int>(g.vertices.size()));
    g.vertices.push_back({t, height(t), std::nullopt});
  }
  for (int src = 0; src < static_cast<int>(g.vertices.size()); ++src) {
    Triangulation tri = phi_inverse(g.vertices[src].tuple);
    int out_degree = 0;
    for (int i = 1; i <= k - 2; ++i) {
      if (!tri.has_distinguished(i)) continue;
      ++out_degree;
      FlipResult fr = flip(tri, i);
      g.edges.push_back({src, index.at(phi(fr.tri)), {i}, std::nullopt});
    }
    if (out_degree != k - 2 - static_cast<int>(g.vertices[src].height))
      throw InternalError("build_gk: out-degree violates grading");
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
    return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
  });
  if (g.vertices[0].height != 0)
    throw InternalError("build_gk: root is not at index 0");
  return g;
}

// Number of directed paths u -> v; exact, DP along the height grading.
inline Int count_paths(const GradedGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(g.vertices.size()) ||
      v >= static_cast<int>(g.vertices.size()))
    throw InvalidInput("count_paths: vertex id out of range");
  std::vector<Int> paths(g.vertices.size(), 0);
  paths[u] = 1;
  // Edges sorted by src do not guarantee height order; sweep heights.
  std::vector<int> order(g.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.vertices[a].height < g.vertices[b].height;
  });
  std::vector<std::vector<const GraphEdge*>> out(g.vertices.size());
  for (const GraphEdge& e : g.edges) out[e.src].push_back(&e);
  for (int x : order)
    if (paths[x] != 0)
      for (const GraphEdge* e : out[x]) paths[e->dst] += paths[x];
  return paths[v];
}

inline Int count_paths(const GradedGraph& g, const Tuple& u, const Tuple& v) {
  return count_paths(g, g.index_of(u), g.index_of(v));
}

// Plumbing weights carried by a flip sequence: start from (4); a rise
// i_j < i_{j+1} prepends 2 and increments the last weight, a fall appends 2
// and increments the first.  The result always lies in the Wahl family.
inline Tuple edge_weights(const std::vector<int>& flips) {
  if (flips.empty()) throw InvalidInput("edge_weights: empty flip sequence");
  Tuple w{4};
  for (std::size_t j = 0; j + 1 < flips.size(); ++j) {
    if (flips[j] == flips[j + 1])
      throw InvalidInput("edge_weights: repeated flip index");
    if (flips[j] < flips[j + 1]) {
      w.insert(w.begin(), 2);
      ++w.back();
    } else {
      w.push_back(2);
      ++w.front();
    }
  }
  return w;
}

namespace detail {

// Unique path u -> v recovered by walking edges whose endpoint still
// reaches v; callers guarantee count_paths(g, u, v) == 1.
inline std::vector<int> walk_unique_path(
    const GradedGraph& g, const std::vector<std::vector<const GraphEdge*>>& out,
    const std::vector<Int>& paths_to_v, int u, int v) {
  std::vector<int> flips;
  int cur = u;
  while (cur != v) {
    const GraphEdge* next = nullptr;
    for (const GraphEdge* e : out[cur]) {
      if (paths_to_v[e->dst] != 0) {
        next = e;
        break;
      }
    }
    if (!next) throw InternalError("walk_unique_path: dead end");
    flips.insert(flips.end(), next->flips.begin(), next->flips.end());
    cur = next->dst;
  }
  return flips;
}

// paths_to[x] = number of paths x -> v.
inline std::vector<Int> paths_to(const GradedGraph& g, int v) {
  std::vector<Int> paths(g.vertices.size(), 0);
  paths[v] = 1;
  std::vector<int> order(g.vertices.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return g.vertices[a].height > g.vertices[b].height;
  });
  std::vector<std::vector<const GraphEdge*>> out(g.vertices.size());
  for (const GraphEdge& e : g.edges) out[e.src].push_back(&e);
  for (int x : order)
    for (const GraphEdge* e : out[x]) paths[x] += paths[e->dst];
  return paths;
}

}  // namespace detail

// Rational blowdown graph of L(p,q): fillings of the expansion b of
// p/(p-q), one edge u -> v per unique G_k path, labelled by the path's
// flips and plumbing weights.  Edges are kept even when the unique path
// passes through other fillings.
inline GradedGraph build_gpq(const Int& p, const Int& q,
                             int limit = kDefaultMaxK) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw InvalidInput("build_gpq: need coprime p > q >= 1");
  Tuple b = hj_expand(p, p - q);
  Tuple a = hj_expand(p, q);
  int k = static_cast<int>(b.size());
  if (k < 2)
    throw InvalidInput("build_gpq: expansion of p/(p-q) has length 1");
  Entry r = static_cast<Entry>(a.size());
  GradedGraph gk = build_gk(k, limit);
  GradedGraph g;
  g.k = k;
  g.p = p;
  g.q = q;
  g.hj = b;
  std::vector<int> gk_index;  // vertex id in gk per filling
  for (const Tuple& n : fillings(b, limit)) {
    Entry h = height(n);
    g.vertices.push_back({n, h, r - h});
    gk_index.push_back(gk.index_of(n));
  }
  std::vector<std::vector<const GraphEdge*>> out(gk.vertices.size());
  for (const GraphEdge& e : gk.edges) out[e.src].push_back(&e);
  for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
    std::vector<Int> to_v = detail::paths_to(gk, gk_index[vi]);
    for (std::size_t ui = 0; ui < g.vertices.size(); ++ui) {
      if (ui == vi) continue;
      if (to_v[gk_index[ui]] != 1) continue;
      std::vector<int> flips = detail::walk_unique_path(
          gk, out, to_v, gk_index[ui], gk_index[vi]);
      g.edges.push_back({static_cast<int>(ui), static_cast<int>(vi), flips,
                         edge_weights(flips)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const auto& x, const auto& y) {
    return std::pair(x.src, x.dst) < std::pair(y.src, y.dst);
  });
  return g;
}

// Edge count of a shortest directed path, nullopt when unreachable.
inline std::optional<Entry> graph_distance(const GradedGraph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= static_cast<int>(g.vertices.size()) ||
      v >= static_cast<int>(g.vertices.size()))
    throw InvalidInput("graph_distance: vertex id out of range");
  std::vector<std::vector<int>> out(g.vertices.size());
  for (const GraphEdge& e : g.edges) out[e.src].push_back(e.dst);
  std::vector<Entry> dist(g.vertices.size(), -1);
  dist[u] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == v) return dist[x];
    for (int y : out[x])
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return std::nullopt;
}

inline std::optional<Entry> graph_distance(const GradedGraph& g, const Tuple& u,
                                           const Tuple& v) {
  return graph_distance(g, g.index_of(u), g.index_of(v));
}

// Lexicographically smallest flip sequence from the fan to the vertex of
// tuple n in G_k.
inline std::vector<int> lex_min_path(const GradedGraph& gk, const Tuple& n) {
  int target = gk.index_of(n);
  std::vector<Int> to_target = detail::paths_to(gk, target);
  if (to_target[0] == 0)
    throw InternalError("lex_min_path: target unreachable from root");
  std::vector<std::vector<const GraphEdge*>> out(gk.vertices.size());
  for (const GraphEdge& e : gk.edges) out[e.src].push_back(&e);
  std::vector<int> flips;
  int cur = 0;
  while (cur != target) {
    const GraphEdge* best = nullptr;
    for (const GraphEdge* e : out[cur])
      if (to_target[e->dst] != 0 &&
          (!best || e->flips.front() < best->flips.front()))
        best = e;
    if (!best) throw InternalError("lex_min_path: dead end");
    flips.push_back(best->flips.front());
    cur = best->dst;
  }
  return flips;
}

// All flip sequences from the fan to n in G_k (test and word helper).
inline std::vector<std::vector<int>> all_paths(const GradedGraph& gk,
                                               const Tuple& n) {
  int target = gk.index_of(n);
  std::vector<Int> to_target = detail::paths_to(gk, target);
  std::vector<std::vector<const GraphEdge*>> out(gk.vertices.size());
  for (const GraphEdge& e : gk.edges) out[e.src].push_back(&e);
  std::vector<std::vector<int>> result;
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int x) -> void {
    if (x == target) {
      result.push_back(cur);
      return;
    }
    for (const GraphEdge* e : out[x]) {
      if (to_target[e->dst] == 0) continue;
      cur.push_back(e->flips.front());
      self(self, e->dst);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return result;
}

// Selector for "the v-th interior 1, counted left to right" used by depth
// recipes; keywords resolve against the current interior-1 count.
struct InteriorOneSelector {
  enum Kind { kLeftmost, kMiddle, kRightmost, kOrdinal } kind = kLeftmost;
  int ordinal = 1;

  static InteriorOneSelector leftmost() { return {kLeftmost, 1}; }
  static InteriorOneSelector middle() { return {kMiddle, 0}; }
  static InteriorOneSelector rightmost() { return {kRightmost, 0}; }
  static InteriorOneSelector at(int v) { return {kOrdinal, v}; }

  int resolve(int count) const {
    int v = 0;
    switch (kind) {
      case kLeftmost: v = 1; break;
      case kMiddle: v = (count + 1) / 2; break;
      case kRightmost: v = count; break;
      case kOrdinal: v = ordinal; break;
    }
    if (v < 1 || v > count)
      throw InvalidSelector("selector: ordinal " + std::to_string(v) +
                            " out of range 1.." + std::to_string(count));
    return v;
  }
};

struct RecipeStep {
  std::vector<int> flips;  // distinguished diagonals flipped in this step
  Tuple weights;           // plumbing weights of the rational blowdown
  Tuple stop;              // filling reached after this step
};

struct DepthRecipe {
  Tuple b;                 // expansion of p/(p-q)
  Tuple start;             // u_k
  std::vector<RecipeStep> steps;  // one per unit of depth
};

namespace detail {

// Positions (1-based) of interior 1's.
inline std::vector<int> interior_ones(const Tuple& t) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < t.size(); ++i)
    if (t[i] == 1) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace detail

// Blowdown recipe realising the filling n in depth(n) rational blowdowns:
// per phase, repeatedly blow down the interior 1 of the chosen enumeration
// until the depth drops, translating each blowdown into the distinguished
// diagonal joining its vertex to the distinguished one.  Flipping the
// accumulated diagonals from the fan visits one filling per phase.
inline DepthRecipe depth_recipe(const Int& p, const Int& q, const Tuple& n,
                                std::vector<InteriorOneSelector> strategy = {},
                                int limit = kDefaultMaxK) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw InvalidInput("depth_recipe: need coprime p > q >= 1");
  Tuple b = hj_expand(p, p - q);
  int k = static_cast<int>(b.size());
  if (!is_filling(n, b))
    throw NotAFilling("depth_recipe: tuple is not a filling for (p,q)");
  if (k > limit)
    throw LimitExceeded("depth_recipe: k exceeds limit " +
                        std::to_string(limit));
  DepthRecipe recipe;
  recipe.b = b;
  if (k == 1) {
    recipe.start = {0};
    return recipe;  // Z_1 = {(0)}, nothing to blow down
  }
  recipe.start = Tuple(k, 2);
  recipe.start.front() = recipe.start.back() = 1;

  Tuple cur = n;
  std::vector<int> labels(k);  // original vertex label per current position
  for (int i = 0; i < k; ++i) labels[i] = i + 1;
  std::vector<int> flips_so_far;
  Entry total_depth = depth(n);
  for (Entry phase = 0; phase < total_depth; ++phase) {
    InteriorOneSelector sel = phase < static_cast<Entry>(strategy.size())
                                  ? strategy[phase]
                                  : InteriorOneSelector::leftmost();
    Entry target_depth = total_depth - phase - 1;
    std::vector<int> phase_flips;
    while (true) {
      std::vector<int> ones = detail::interior_ones(cur);
      int v = sel.resolve(static_cast<int>(ones.size()));
      int pos = ones[v - 1];
      phase_flips.push_back(labels[pos - 1] - 1);  // vertex w -> d_{w-1}
      cur = blowdown(cur, pos);
      labels.erase(labels.begin() + (pos - 1));
      Entry d = 0;
      for (std::size_t i = 1; i + 1 < cur.size(); ++i)
        if (cur[i] == 1) ++d;
      if (d == target_depth) break;
      if (d < target_depth)
        throw InternalError("depth_recipe: depth dropped by more than one");
    }
    flips_so_far.insert(flips_so_far.end(), phase_flips.begin(),
                        phase_flips.end());
    Triangulation t = initial_triangulation(k);
    for (int f : flips_so_far) t = flip(t, f).tri;
    Tuple stop = phi(t);
    if (!is_filling(stop, b))
      throw InternalError("depth_recipe: stop is not a filling");
    recipe.steps.push_back({phase_flips, edge_weights(phase_flips), stop});
  }
  const Tuple& last = recipe.steps.empty() ? recipe.start
                                           : recipe.steps.back().stop;
  if (last != n) throw InternalError("depth_recipe: final stop differs from n");
  return recipe;
}

}  // namespace rbd
