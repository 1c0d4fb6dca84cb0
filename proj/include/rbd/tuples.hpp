#pragma once

// Zero continued fractions Z_k and their blowup/blowdown calculus.
//
// Z_k is the set of admissible k-tuples of positive integers with
// continued-fraction value 0, plus the seed Z_1 = {(0)}.  |Z_k| is the
// Catalan number C_{k-1}, realised by the triangle-count bijection with
// triangulations of the (k+1)-gon.  The minimal symplectic fillings of the
// lens space L(p,q) correspond to the members bounded entrywise by the
// expansion of p/(p-q).

#include "rbd/contfrac.hpp"
#include "rbd/core.hpp"
#include "rbd/polygon.hpp"

#include <optional>

namespace rbd {

inline constexpr int kDefaultMaxK = 12;

struct BlowSite {
  enum Kind { kInitial, kInterior, kExterior } kind;
  int j = 0;  // interior position, 1 <= j <= size-1

  static BlowSite initial() { return {kInitial, 0}; }
  static BlowSite interior(int j) { return {kInterior, j}; }
  static BlowSite exterior() { return {kExterior, 0}; }
};

// (0) -> (1,1); interior at j bumps both neighbours of a new 1; exterior
// appends (..., n_s + 1, 1).  Every blowup adds 1 to the height grading.
inline Tuple blowup(const Tuple& t, BlowSite site) {
  if (t.empty()) throw InvalidSite("blowup: empty tuple");
  switch (site.kind) {
    case BlowSite::kInitial:
      if (t != Tuple{0}) throw InvalidSite("blowup: initial site needs (0)");
      return {1, 1};
    case BlowSite::kInterior: {
      int s = static_cast<int>(t.size());
      if (t == Tuple{0} || site.j < 1 || site.j >= s)
        throw InvalidSite("blowup: interior position out of range");
      Tuple out(t.begin(), t.begin() + site.j);
      ++out.back();
      out.push_back(1);
      out.push_back(t[site.j] + 1);
      out.insert(out.end(), t.begin() + site.j + 1, t.end());
      return out;
    }
    case BlowSite::kExterior: {
      if (t == Tuple{0}) throw InvalidSite("blowup: exterior site needs size >= 1");
      Tuple out = t;
      ++out.back();
      out.push_back(1);
      return out;
    }
  }
  throw InternalError("blowup: bad site kind");
}

// Reverse of a blowup at the 1 in position i (1-based).  Interior entries
// drop out with both neighbours decremented; a leading or trailing 1 drops
// with its single neighbour decremented (the ear of the triangulation at
// that vertex); (1,1) collapses to (0).
inline Tuple blowdown(const Tuple& t, int i) {
  int k = static_cast<int>(t.size());
  if (i < 1 || i > k) throw NotBlowdownSite("blowdown: position out of range");
  if (t[i - 1] != 1) throw NotBlowdownSite("blowdown: entry is not 1");
  if (k == 2 && t[0] == 1 && t[1] == 1) return {0};
  if (k < 2) throw NotBlowdownSite("blowdown: tuple too short");
  auto need_ge2 = [&](int pos) {
    if (t[pos - 1] < 2)
      throw NotBlowdownSite("blowdown: neighbour entry would drop below 1");
  };
  Tuple out;
  if (i == 1) {
    need_ge2(2);
    out.assign(t.begin() + 1, t.end());
    --out.front();
  } else if (i == k) {
    need_ge2(k - 1);
    out.assign(t.begin(), t.end() - 1);
    --out.back();
  } else {
    need_ge2(i - 1);
    need_ge2(i + 1);
    out.assign(t.begin(), t.end());
    out.erase(out.begin() + (i - 1));
    --out[i - 2];
    --out[i - 1];
  }
  return out;
}

inline bool is_in_zk(const Tuple& t) {
  if (t == Tuple{0}) return true;
  if (t.size() < 2) return false;
  for (Entry e : t)
    if (e < 1) return false;
  auto v = cf_eval(t);
  return v && *v == 0;
}

// Height |n| - 2(k-1): the number of blowups needed to build n from (0),
// equivalently the flip distance from the fan triangulation.
inline Entry height(const Tuple& n) {
  if (!is_in_zk(n)) throw NotInZk("height: tuple not in Z_k");
  if (n == Tuple{0}) return 0;
  return sum(n) - 2 * (static_cast<Entry>(n.size()) - 1);
}

// Number of interior entries equal to 1.
inline Entry depth(const Tuple& n) {
  if (!is_in_zk(n)) throw NotInZk("depth: tuple not in Z_k");
  Entry d = 0;
  for (std::size_t i = 1; i + 1 < n.size(); ++i)
    if (n[i] == 1) ++d;
  return d;
}

// Z_k sorted lexicographically, generated through the triangulation
// bijection.  The limit guards the Catalan blowup; raise it explicitly
// (CLI: RBD_MAX_K) for larger k.
inline std::vector<Tuple> enumerate_zk(int k, int limit = kDefaultMaxK) {
  if (k < 1) throw InvalidInput("enumerate_zk: need k >= 1");
  if (k > limit)
    throw LimitExceeded("enumerate_zk: k exceeds limit " +
                        std::to_string(limit));
  if (k == 1) return {Tuple{0}};
  std::vector<Tuple> out;
  for (const Triangulation& t : all_triangulations(k)) out.push_back(phi(t));
  std::sort(out.begin(), out.end());
  return out;
}

// Members of Z_k bounded entrywise by b; these index the minimal symplectic
// fillings of the lens space with surgery coefficients b.
inline std::vector<Tuple> fillings(const Tuple& b, int limit = kDefaultMaxK) {
  for (Entry e : b)
    if (e < 2) throw InvalidInput("fillings: entries of b must be >= 2");
  int k = static_cast<int>(b.size());
  std::vector<Tuple> out;
  for (const Tuple& n : enumerate_zk(k, limit)) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = k == 1 || n[i] <= b[i];
    if (ok) out.push_back(n);
  }
  return out;
}

inline bool is_filling(const Tuple& n, const Tuple& b) {
  if (n.size() != b.size()) return false;
  if (!is_in_zk(n)) return false;
  if (n == Tuple{0}) return true;
  for (std::size_t i = 0; i < n.size(); ++i)
    if (n[i] > b[i]) return false;
  return true;
}

// First Betti number of the Milnor fiber attached to the filling n of
// L(p,q): r + 2(k-1) - |n|, where r is the length of the expansion of p/q
// and k that of p/(p-q).  Equals r - height(n).
inline Entry betti(const Tuple& n, const Int& p, const Int& q) {
  if (q < 1 || p <= q || gcd(p, q) != 1)
    throw InvalidInput("betti: need coprime p > q >= 1");
  Tuple b = hj_expand(p, p - q);
  Tuple a = hj_expand(p, q);
  if (!is_filling(n, b)) throw NotAFilling("betti: not a filling for (p,q)");
  Entry r = static_cast<Entry>(a.size());
  if (n == Tuple{0}) return r;
  return r + 2 * (static_cast<Entry>(n.size()) - 1) - sum(n);
}

}  // namespace rbd
