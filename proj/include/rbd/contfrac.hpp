#pragma once

// Hirzebruch-Jung continued fractions and Riemenschneider duality.
//
// Throughout, [n_1, ..., n_k] denotes n_1 - 1/(n_2 - 1/(... - 1/n_k)).
// For coprime p > q >= 1 the expansion of p/q with all entries >= 2 is
// unique; the expansions of p/q and p/(p-q) are dual to each other.

#include "rbd/core.hpp"

#include <limits>
#include <optional>

namespace rbd {

// Unique expansion num/den = [b_1, ..., b_k] with every b_i >= 2.
// Requires coprime num > den >= 1.
inline Tuple hj_expand(Int num, Int den) {
  if (den < 1 || num <= den)
    throw InvalidInput("hj_expand: need num > den >= 1");
  if (gcd(num, den) != 1) throw InvalidInput("hj_expand: not coprime");
  Tuple out;
  while (den != 0) {
    Int b = (num + den - 1) / den;  // ceil, both positive
    if (b > std::numeric_limits<Entry>::max())
      throw LimitExceeded("hj_expand: entry does not fit 64 bits");
    out.push_back(static_cast<Entry>(b));
    Int next_den = b * den - num;  // 0 <= next_den < den
    num = den;
    den = next_den;
  }
  return out;
}

// Value of [t_1, ..., t_k] as an exact rational, evaluated through the
// tails u_k = t_k, u_i = t_i - 1/u_{i+1}.  The expansion is admissible
// exactly when every denominator u_i (i >= 2) is strictly positive; a zero
// or negative tail yields nullopt.
inline std::optional<Rat> cf_eval(const Tuple& t) {
  if (t.empty()) throw InvalidInput("cf_eval: empty tuple");
  // Track u_i = num/den with gcd 1; the update keeps it reduced since
  // gcd(t_i * num - den, num) = gcd(den, num).
  Int num = t.back(), den = 1;
  for (std::size_t i = t.size(); i-- > 1;) {
    if (num <= 0) return std::nullopt;  // tail u_{i+1} not positive
    Int next_num = Int(t[i - 1]) * num - den;
    den = num;
    num = next_num;
  }
  return Rat(num, den);
}

inline bool is_admissible(const Tuple& t) { return cf_eval(t).has_value(); }

// Dual expansion via the defining fraction pair: if [b_1..b_k] = p/(p-q)
// then the dual is the expansion of p/q.  Equivalent to transposing the
// staircase point diagram (rows of b_i - 1 dots, each row starting under
// the last dot of the previous one, columns read off as a_j - 1).
inline Tuple riemenschneider_dual(const Tuple& b) {
  for (Entry e : b)
    if (e < 2) throw InvalidInput("riemenschneider_dual: entries must be >= 2");
  Rat v = *cf_eval(b);  // entries >= 2 force admissibility and v > 1
  Int p = numerator(v);
  Int q = p - denominator(v);
  return hj_expand(p, q);
}

struct WahlParams {
  Int s;
  Int h;
  bool operator==(const WahlParams&) const = default;
};

// A weight tuple (w_1..w_m) with all w_i >= 2 belongs to the Wahl family
// exactly when [w_1..w_m] = s^2/(sh-1) for coprime 1 <= h < s.
inline std::optional<WahlParams> wahl_params(const Tuple& w) {
  if (w.empty()) throw InvalidInput("wahl_params: empty tuple");
  for (Entry e : w)
    if (e < 2) throw InvalidInput("wahl_params: entries must be >= 2");
  Rat v = *cf_eval(w);
  Int p = numerator(v), q = denominator(v);
  Int s = sqrt(p);
  if (s * s != p || s < 2) return std::nullopt;
  if ((q + 1) % s != 0) return std::nullopt;
  Int h = (q + 1) / s;
  if (h < 1 || h >= s || gcd(s, h) != 1) return std::nullopt;
  return WahlParams{s, h};
}

// Membership in the family generated from (4) by the two moves
//   (a) prepend 2 and increment the last entry,
//   (b) append 2 and increment the first entry.
// After either move exactly one end equals 2, so the reverse step is
// deterministic and a greedy descent decides membership.
inline bool is_wahl_family(const Tuple& w) {
  if (w.empty()) throw InvalidInput("is_wahl_family: empty tuple");
  Tuple cur = w;
  while (cur.size() > 1) {
    if (cur.front() == 2 && cur.back() >= 3) {
      cur.erase(cur.begin());
      --cur.back();
    } else if (cur.back() == 2 && cur.front() >= 3) {
      cur.pop_back();
      --cur.front();
    } else {
      return false;
    }
  }
  return cur[0] == 4;
}

}  // namespace rbd
