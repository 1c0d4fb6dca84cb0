#pragma once

// Dehn twist words for the Milnor fibers, tracked as signed multisets of
// curves on the disk with k holes (holes numbered 1..k left to right).
//
// Curve families:
//   gamma_r     encloses holes 1..r
//   delta_{s,t} encloses holes s..t (2 <= s <= t; alpha_s = delta_{s,s})
//   beta_{i,t,j} encloses holes 1..i and t+1..j  (1 <= i < t < j)
// The word of the fan filling is alpha_2..alpha_k together with gamma_i
// repeated b_i - (u_k)_i times.  Each flip of d_{t-1} with quadrilateral
// (i,t,j) rewrites the word by a lantern substitution: it consumes the four
// boundary curves gamma_i, delta_{i+1,t}, delta_{t+1,j}, gamma_j and
// produces beta_{i,t,j}, gamma_t, delta_{i+1,j}.  When the new tuple
// exceeds b at position i (resp. j) the consumed gamma comes from an
// inserted cancelling pair and a negative twist remains.

#include "rbd/contfrac.hpp"
#include "rbd/core.hpp"
#include "rbd/flipgraph.hpp"
#include "rbd/polygon.hpp"
#include "rbd/tuples.hpp"

#include <map>
#include <optional>

namespace rbd {

struct Curve {
  enum Family { kGamma, kDelta, kBeta } family;
  int a = 0, b = 0, c = 0;

  static Curve gamma(int r) {
    if (r < 1) throw InvalidInput("curve: gamma needs r >= 1");
    return {kGamma, r, 0, 0};
  }
  // delta_{1,t} encloses holes 1..t, i.e. it is gamma_t.
  static Curve delta(int s, int t) {
    if (s < 1 || t < s) throw InvalidInput("curve: delta needs 1 <= s <= t");
    if (s == 1) return gamma(t);
    return {kDelta, s, t, 0};
  }
  static Curve alpha(int s) { return delta(s, s); }
  static Curve beta(int i, int t, int j) {
    if (i < 1 || t <= i || j <= t)
      throw InvalidInput("curve: beta needs 1 <= i < t < j");
    return {kBeta, i, t, j};
  }

  bool operator==(const Curve&) const = default;
  auto operator<=>(const Curve&) const = default;

  std::string str() const {
    switch (family) {
      case kGamma: return "g" + std::to_string(a);
      case kDelta:
        if (a == b) return "a" + std::to_string(a);
        return "d(" + std::to_string(a) + "," + std::to_string(b) + ")";
      case kBeta:
        return "b(" + std::to_string(a) + "," + std::to_string(b) + "," +
               std::to_string(c) + ")";
    }
    return {};
  }
};

// Signed multiset of Dehn twists; count > 0 means positive twists.  A
// cancelling pair (+c, -c) never persists because signed counts absorb it.
struct TwistWord {
  int k = 0;
  std::map<Curve, int> counts;

  bool operator==(const TwistWord&) const = default;

  bool positive() const {
    for (const auto& [c, m] : counts)
      if (m < 0) return false;
    return true;
  }

  Entry length() const {
    Entry total = 0;
    for (const auto& [c, m] : counts) total += m < 0 ? -m : m;
    return total;
  }

  Entry signed_count() const {
    Entry total = 0;
    for (const auto& [c, m] : counts) total += m;
    return total;
  }

  void add(const Curve& c, int m) {
    int& slot = counts[c];
    slot += m;
    if (slot == 0) counts.erase(c);
  }

  std::string str() const {
    std::string out;
    for (const auto& [c, m] : counts) {
      char sign = m > 0 ? '+' : '-';
      for (int i = 0; i < (m < 0 ? -m : m); ++i) {
        if (!out.empty()) out += ' ';
        out += sign;
        out += c.str();
      }
    }
    return out;
  }
};

// Word of the fan filling u_k for the surgery coefficients b.
inline TwistWord initial_word(const Int& p, const Int& q) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw InvalidInput("initial_word: need coprime p > q >= 1");
  Tuple b = hj_expand(p, p - q);
  int k = static_cast<int>(b.size());
  if (k < 2) throw InvalidInput("initial_word: need expansion length >= 2");
  TwistWord w;
  w.k = k;
  for (int s = 2; s <= k; ++s) w.add(Curve::alpha(s), 1);
  for (int i = 1; i <= k; ++i) {
    Entry u = (i == 1 || i == k) ? 1 : 2;
    if (b[i - 1] - u > 0) w.add(Curve::gamma(i), static_cast<int>(b[i - 1] - u));
  }
  return w;
}

// One lantern substitution for the flip with quadrilateral quad = (i,t,j),
// where new_tuple is the tuple after the flip.  gamma_i / gamma_j may be
// consumed from an inserted cancelling pair exactly when the new tuple
// exceeds b there; a missing delta means the word and path disagree.
inline TwistWord lantern_substitute(TwistWord w, const FlipQuad& quad,
                                    const Tuple& b, const Tuple& new_tuple) {
  int k = w.k;
  if (static_cast<int>(b.size()) != k ||
      static_cast<int>(new_tuple.size()) != k)
    throw InvalidInput("lantern_substitute: tuple length mismatch");
  if (!(1 <= quad.a && quad.a < quad.t && quad.t < quad.b && quad.b <= k))
    throw InvalidQuad("lantern_substitute: bad quadrilateral");
  auto consume_gamma = [&](int r) {
    Curve c = Curve::gamma(r);
    auto it = w.counts.find(c);
    int have = it == w.counts.end() ? 0 : it->second;
    if (have <= 0 && new_tuple[r - 1] <= b[r - 1])
      throw SubstitutionCurveMissing(
          "lantern_substitute: gamma_" + std::to_string(r) +
          " absent without a cancelling-pair trigger");
    w.add(c, -1);
  };
  auto consume_delta = [&](int s, int t) {
    Curve c = Curve::delta(s, t);
    auto it = w.counts.find(c);
    if (it == w.counts.end() || it->second <= 0)
      throw SubstitutionCurveMissing("lantern_substitute: " + c.str() +
                                     " absent");
    w.add(c, -1);
  };
  consume_gamma(quad.a);
  consume_delta(quad.a + 1, quad.t);
  consume_delta(quad.t + 1, quad.b);
  consume_gamma(quad.b);
  w.add(Curve::beta(quad.a, quad.t, quad.b), 1);
  w.add(Curve::gamma(quad.t), 1);
  w.add(Curve::delta(quad.a + 1, quad.b), 1);
  return w;
}

// Twist word of the vertex n of G_k, computed by applying one lantern
// substitution per flip along the given path from the fan (default: the
// lexicographically smallest flip sequence).  The word does not depend on
// the choice of path.
inline TwistWord word_for(const Int& p, const Int& q, const Tuple& n,
                          std::optional<std::vector<int>> path = std::nullopt,
                          int limit = kDefaultMaxK) {
  TwistWord w = initial_word(p, q);
  Tuple b = hj_expand(p, p - q);
  int k = w.k;
  if (static_cast<int>(n.size()) != k || !is_in_zk(n))
    throw NotInZk("word_for: tuple not in Z_k for this (p,q)");
  std::vector<int> flips;
  if (path) {
    flips = *path;
  } else {
    flips = lex_min_path(build_gk(k, limit), n);
  }
  Triangulation tri = initial_triangulation(k);
  for (int f : flips) {
    FlipResult fr = flip(tri, f);
    w = lantern_substitute(std::move(w), fr.quad, b, phi(fr.tri));
    tri = fr.tri;
  }
  if (phi(tri) != n)
    throw InvalidInput("word_for: path does not end at the given tuple");
  return w;
}

struct WordStats {
  bool positive = false;
  Entry length = 0;    // total twists, both signs
  Entry lanterns = 0;  // substitutions applied = height of the tuple
};

inline WordStats word_stats(const TwistWord& w, const Int& p, const Int& q,
                            const Tuple& n) {
  WordStats st;
  st.positive = w.positive();
  st.length = w.length();
  st.lanterns = height(n);
  return st;
}

}  // namespace rbd
