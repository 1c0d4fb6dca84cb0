#pragma once

// Triangulations of a convex (k+1)-gon with a distinguished vertex, and the
// bijection with zero continued fractions.
//
// Vertices are labelled 0..k counterclockwise; 0 is the distinguished
// vertex.  The tuple attached to a triangulation records, for i = 1..k, the
// number of triangles meeting vertex i.  The distinguished diagonals are
// d_i = {0, i+1} for i = 1..k-2; flipping them generates the graded flip
// graph built in flipgraph.hpp.

#include "rbd/contfrac.hpp"
#include "rbd/core.hpp"

#include <map>
#include <utility>

namespace rbd {

using Diagonal = std::pair<int, int>;  // endpoints, stored first < second

struct Triangle {
  int a, b, c;  // vertex labels, a < b < c
  bool operator==(const Triangle&) const = default;
  auto operator<=>(const Triangle&) const = default;
};

// Quadrilateral (0, a, t, b) whose diagonal was exchanged by a flip,
// reported by the three non-distinguished corners; 1 <= a < t < b <= k.
struct FlipQuad {
  int a, t, b;
  bool operator==(const FlipQuad&) const = default;
};

class Triangulation {
 public:
  Triangulation(int k, std::vector<Diagonal> diagonals) : k_(k) {
    if (k < 2) throw InvalidInput("triangulation: need k >= 2");
    for (auto& d : diagonals) {
      if (d.first > d.second) std::swap(d.first, d.second);
      if (d.first < 0 || d.second > k || d.first == d.second)
        throw InvalidInput("triangulation: diagonal endpoint out of range");
      if (d.second - d.first == 1 || (d.first == 0 && d.second == k))
        throw InvalidInput("triangulation: boundary edge listed as diagonal");
    }
    std::sort(diagonals.begin(), diagonals.end());
    if (std::adjacent_find(diagonals.begin(), diagonals.end()) !=
        diagonals.end())
      throw InvalidInput("triangulation: repeated diagonal");
    if (static_cast<int>(diagonals.size()) != k - 2)
      throw InvalidInput("triangulation: expected k-2 diagonals");
    for (std::size_t i = 0; i < diagonals.size(); ++i)
      for (std::size_t j = i + 1; j < diagonals.size(); ++j)
        if (crosses(diagonals[i], diagonals[j]))
          throw InvalidInput("triangulation: crossing diagonals");
    diagonals_ = std::move(diagonals);
  }

  // Fan from the distinguished vertex: diagonals {0,2}, ..., {0,k-1}.
  // Its tuple is u_k = (1,2,...,2,1).
  static Triangulation initial(int k) {
    std::vector<Diagonal> ds;
    for (int v = 2; v <= k - 1; ++v) ds.push_back({0, v});
    return Triangulation(k, std::move(ds));
  }

  int k() const { return k_; }
  const std::vector<Diagonal>& diagonals() const { return diagonals_; }

  bool has_diagonal(int a, int b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(diagonals_.begin(), diagonals_.end(),
                              Diagonal{a, b});
  }

  // d_i = {0, i+1}, defined for 1 <= i <= k-2.
  bool has_distinguished(int i) const {
    return i >= 1 && i <= k_ - 2 && has_diagonal(0, i + 1);
  }

  // Boundary edge or diagonal of the polygon.
  bool has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    if (b - a == 1 || (a == 0 && b == k_)) return true;
    return has_diagonal(a, b);
  }

  // The k-1 triangles, sorted.  Recursion: the edge {a,b} together with the
  // unique vertex c in between forming edges {a,c}, {c,b} spans a triangle;
  // uniqueness holds because two candidate apexes would force a crossing.
  std::vector<Triangle> triangles() const {
    std::vector<Triangle> out;
    collect(0, k_, out);
    if (static_cast<int>(out.size()) != k_ - 1)
      throw InternalError("triangulation: face count mismatch");
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Triangulation& o) const {
    return k_ == o.k_ && diagonals_ == o.diagonals_;
  }
  auto operator<=>(const Triangulation& o) const {
    if (auto c = k_ <=> o.k_; c != 0) return c;
    return diagonals_ <=> o.diagonals_;
  }

 private:
  static bool crosses(const Diagonal& x, const Diagonal& y) {
    // Strict interleaving; sharing an endpoint is fine.
    return (x.first < y.first && y.first < x.second && x.second < y.second) ||
           (y.first < x.first && x.first < y.second && y.second < x.second);
  }

  void collect(int a, int b, std::vector<Triangle>& out) const {
    if (b - a < 2) return;
    for (int c = a + 1; c < b; ++c) {
      if (has_edge(a, c) && has_edge(c, b)) {
        out.push_back({a, c, b});
        collect(a, c, out);
        collect(c, b, out);
        return;
      }
    }
    throw InternalError("triangulation: no apex found");
  }

  int k_;
  std::vector<Diagonal> diagonals_;
};

inline Triangulation initial_triangulation(int k) {
  return Triangulation::initial(k);
}

// Tuple of triangle counts at vertices 1..k.
inline Tuple phi(const Triangulation& t) {
  Tuple counts(t.k(), 0);
  for (const Triangle& tr : t.triangles())
    for (int v : {tr.a, tr.b, tr.c})
      if (v >= 1) ++counts[v - 1];
  return counts;
}

namespace detail {

inline void require_in_zk(const Tuple& n) {
  if (n.size() < 2) throw NotInZk("expected a tuple of length >= 2");
  for (Entry e : n)
    if (e < 1) throw NotInZk("entries must be positive");
  auto v = cf_eval(n);
  if (!v || *v != 0) throw NotInZk("tuple does not evaluate to zero");
}

}  // namespace detail

// Inverse of phi by ear peeling: an entry 1 at vertex i marks an ear whose
// triangle joins the two current boundary neighbours of i.  Ties broken by
// smallest vertex label, which makes the reconstruction deterministic (the
// result does not depend on the order).
inline Triangulation phi_inverse(const Tuple& n) {
  detail::require_in_zk(n);
  int k = static_cast<int>(n.size());
  std::vector<int> boundary(k + 1);
  for (int v = 0; v <= k; ++v) boundary[v] = v;
  Tuple counts = n;
  std::vector<Diagonal> diagonals;
  while (boundary.size() > 3) {
    int pos = -1;
    for (std::size_t j = 0; j < boundary.size(); ++j) {
      int v = boundary[j];
      if (v != 0 && counts[v - 1] == 1 && (pos < 0 || v < boundary[pos]))
        pos = static_cast<int>(j);
    }
    if (pos < 0) throw NotInZk("no ear available");  // unreachable for Z_k
    int m = static_cast<int>(boundary.size());
    int prev = boundary[(pos + m - 1) % m];
    int next = boundary[(pos + 1) % m];
    int lo = std::min(prev, next), hi = std::max(prev, next);
    if (hi - lo != 1 && !(lo == 0 && hi == k)) diagonals.push_back({lo, hi});
    if (prev != 0) --counts[prev - 1];
    if (next != 0) --counts[next - 1];
    boundary.erase(boundary.begin() + pos);
  }
  return Triangulation(k, std::move(diagonals));
}

struct FlipResult {
  Triangulation tri;
  FlipQuad quad;
};

// Exchange the distinguished diagonal d_i for the opposite diagonal of its
// quadrilateral.  The tuple changes by +1 at a and b, -1 at t = i+1, so one
// flip raises the height grading by one.
inline FlipResult flip(const Triangulation& tri, int i) {
  if (!tri.has_distinguished(i))
    throw MissingDiagonal("flip: d_" + std::to_string(i) + " not present");
  int t = i + 1;
  int a = -1, b = -1;
  for (const Triangle& tr : tri.triangles()) {
    if (tr.a != 0) continue;
    if (tr.b == t) b = tr.c;        // triangle (0, t, b) with b > t
    else if (tr.c == t) a = tr.b;   // triangle (0, a, t) with a < t
  }
  if (a < 0 || b < 0) throw InternalError("flip: adjacent triangles missing");
  std::vector<Diagonal> ds;
  for (const Diagonal& d : tri.diagonals())
    if (d != Diagonal{0, t}) ds.push_back(d);
  ds.push_back({a, b});
  return FlipResult{Triangulation(tri.k(), std::move(ds)), FlipQuad{a, t, b}};
}

// A flip sequence is contiguous when each successive pair of flipped
// diagonals spans a triangle of the triangulation current before the
// earlier of the two flips.  All flips must be legal.
inline bool is_contiguous(const Triangulation& start,
                          const std::vector<int>& seq) {
  Triangulation cur = start;
  bool ok = true;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    if (ok && j + 1 < seq.size()) {
      int t1 = seq[j] + 1, t2 = seq[j + 1] + 1;
      Triangle want{0, std::min(t1, t2), std::max(t1, t2)};
      auto tris = cur.triangles();
      ok = std::binary_search(tris.begin(), tris.end(), want);
    }
    cur = flip(cur, seq[j]).tri;
  }
  return ok;
}

// Remove the single triangle at vertex v (which must be an ear, i.e. have
// triangle count 1) and close up the polygon, relabelling vertices above v
// downwards.  The distinguished vertex stays 0.
inline Triangulation peel_ear(const Triangulation& tri, int v) {
  int k = tri.k();
  if (v < 1 || v > k) throw NotAnEar("peel_ear: vertex out of range");
  if (k == 2) throw NotAnEar("peel_ear: polygon is already a triangle");
  Tuple counts = phi(tri);
  if (counts[v - 1] != 1) throw NotAnEar("peel_ear: vertex is not an ear");
  int prev = v - 1;
  int next = v == k ? 0 : v + 1;
  int lo = std::min(prev, next), hi = std::max(prev, next);
  std::vector<Diagonal> ds;
  for (const Diagonal& d : tri.diagonals()) {
    if (d == Diagonal{lo, hi}) continue;  // becomes a boundary edge
    Diagonal nd = d;
    if (nd.first > v) --nd.first;
    if (nd.second > v) --nd.second;
    ds.push_back(nd);
  }
  return Triangulation(k - 1, std::move(ds));
}

// All triangulations of the (k+1)-gon, C_{k-1} of them.
inline std::vector<Triangulation> all_triangulations(int k) {
  if (k < 2) throw InvalidInput("all_triangulations: need k >= 2");
  std::map<std::pair<int, int>, std::vector<std::vector<Diagonal>>> memo;
  auto gen = [&](auto&& self, int a, int b)
      -> const std::vector<std::vector<Diagonal>>& {
    auto it = memo.find({a, b});
    if (it != memo.end()) return it->second;
    std::vector<std::vector<Diagonal>> out;
    if (b - a < 2) {
      out.push_back({});
    } else {
      for (int c = a + 1; c < b; ++c) {
        for (const auto& left : self(self, a, c)) {
          for (const auto& right : self(self, c, b)) {
            std::vector<Diagonal> ds = left;
            ds.insert(ds.end(), right.begin(), right.end());
            if (c - a >= 2) ds.push_back({a, c});
            if (b - c >= 2) ds.push_back({c, b});
            out.push_back(std::move(ds));
          }
        }
      }
    }
    return memo.emplace(std::pair{a, b}, std::move(out)).first->second;
  };
  std::vector<Triangulation> result;
  for (const auto& ds : gen(gen, 0, k)) {
    auto copy = ds;
    // The outer edge {0,k} is a boundary edge; drop it if recorded.
    std::erase(copy, Diagonal{0, k});
    result.push_back(Triangulation(k, std::move(copy)));
  }
  return result;
}

}  // namespace rbd
