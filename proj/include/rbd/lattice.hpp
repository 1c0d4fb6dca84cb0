#pragma once

// Negative definite integral lattices: linear plumbing forms, short-vector
// enumeration and embeddings of weighted chains, all in exact arithmetic.

#include "rbd/core.hpp"

#include <fstream>
#include <map>
#include <optional>

namespace rbd {

struct IntForm {
  int dim = 0;
  std::vector<std::vector<Int>> m;  // symmetric dim x dim

  IntForm() = default;
  explicit IntForm(std::vector<std::vector<Int>> rows) {
    dim = static_cast<int>(rows.size());
    if (dim == 0) throw InvalidInput("form: empty matrix");
    for (const auto& r : rows)
      if (static_cast<int>(r.size()) != dim)
        throw InvalidInput("form: matrix is not square");
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (rows[i][j] != rows[j][i])
          throw InvalidInput("form: matrix is not symmetric");
    m = std::move(rows);
  }

  bool operator==(const IntForm&) const = default;

  Int dot(const std::vector<Int>& x, const std::vector<Int>& y) const {
    Int total = 0;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) total += x[i] * m[i][j] * y[j];
    return total;
  }
};

// Intersection form of a linear plumbing: -w_i on the diagonal, 1 off it.
inline IntForm plumbing_form(const Tuple& weights) {
  if (weights.empty()) throw InvalidInput("plumbing_form: empty weights");
  for (Entry w : weights)
    if (w < 2) throw InvalidInput("plumbing_form: weights must be >= 2");
  int n = static_cast<int>(weights.size());
  std::vector<std::vector<Int>> rows(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) {
    rows[i][i] = -Int(weights[i]);
    if (i + 1 < n) rows[i][i + 1] = rows[i + 1][i] = 1;
  }
  return IntForm(std::move(rows));
}

inline bool is_even(const IntForm& f) {
  for (int i = 0; i < f.dim; ++i)
    if (f.m[i][i] % 2 != 0) return false;
  return true;
}

namespace detail {

// LDL^T decomposition of a symmetric positive definite rational matrix;
// nullopt when a pivot fails to be positive.
struct Ldlt {
  std::vector<std::vector<Rat>> u;  // unit upper triangular
  std::vector<Rat> d;               // positive pivots
};

inline std::optional<Ldlt> ldlt_positive(const IntForm& q) {
  int n = q.dim;
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(q.m[i][j]);
  Ldlt out;
  out.u.assign(n, std::vector<Rat>(n, 0));
  out.d.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (a[i][i] <= 0) return std::nullopt;
    out.d[i] = a[i][i];
    out.u[i][i] = 1;
    for (int j = i + 1; j < n; ++j) out.u[i][j] = a[i][j] / a[i][i];
    for (int r = i + 1; r < n; ++r)
      for (int c = i + 1; c < n; ++c)
        a[r][c] -= a[r][i] * a[i][c] / a[i][i];
  }
  return out;
}

inline void canonical_sign(std::vector<Int>& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (Int& y : v) y = -y;
    break;
  }
}

// Row-style Hermite normal form: canonical basis of the row span over Z.
// Pivots positive, entries above a pivot reduced into [0, pivot).
inline std::vector<std::vector<Int>> row_hnf(std::vector<std::vector<Int>> m) {
  if (m.empty()) return m;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    while (true) {
      int pivot = -1;
      for (int i = r; i < rows; ++i)
        if (m[i][j] != 0 && (pivot < 0 || abs(m[i][j]) < abs(m[pivot][j])))
          pivot = i;
      if (pivot < 0) break;
      std::swap(m[r], m[pivot]);
      bool clear = true;
      for (int i = r + 1; i < rows; ++i) {
        if (m[i][j] == 0) continue;
        Int q = m[i][j] / m[r][j];
        for (int c = 0; c < cols; ++c) m[i][c] -= q * m[r][c];
        if (m[i][j] != 0) clear = false;
      }
      if (clear) break;
    }
    if (m[r][j] == 0) continue;
    if (m[r][j] < 0)
      for (int c = 0; c < cols; ++c) m[r][c] = -m[r][c];
    for (int i = 0; i < r; ++i) {
      // Floor division keeps the reduced entry in [0, pivot).
      Int q = m[i][j] / m[r][j];
      if (m[i][j] - q * m[r][j] < 0) --q;
      for (int c = 0; c < cols; ++c) m[i][c] -= q * m[r][c];
    }
    ++r;
  }
  return m;
}

}  // namespace detail

inline bool is_negative_definite(const IntForm& f) {
  IntForm q = f;
  for (auto& row : q.m)
    for (Int& x : row) x = -x;
  return detail::ldlt_positive(q).has_value();
}

// All v with v.v = c (c < 0), one representative per antipodal pair, with
// the first nonzero coefficient positive; sorted.  Exact Fincke-Pohst-style
// search down the LDL^T cone of -F.
inline std::vector<std::vector<Int>> vectors_of_square(const IntForm& f,
                                                       const Int& c) {
  if (c >= 0) throw InvalidInput("vectors_of_square: need c < 0");
  IntForm q = f;
  for (auto& row : q.m)
    for (Int& x : row) x = -x;
  auto ldlt = detail::ldlt_positive(q);
  if (!ldlt) throw NotNegativeDefinite("vectors_of_square: form not negative definite");
  int n = q.dim;
  Rat target(-c);
  std::vector<std::vector<Int>> out;
  std::vector<Int> v(n, 0);
  // At level i the remaining budget bounds D_i (v_i + t_i)^2 where
  // t_i = sum_{j>i} U_ij v_j.
  auto dfs = [&](auto&& self, int i, Rat remaining) -> void {
    if (i < 0) {
      if (remaining == 0) {
        std::vector<Int> w = v;
        detail::canonical_sign(w);
        if (w != std::vector<Int>(n, 0)) out.push_back(std::move(w));
      }
      return;
    }
    Rat t = 0;
    for (int j = i + 1; j < n; ++j) t += ldlt->u[i][j] * v[j];
    Rat bound = remaining / ldlt->d[i];  // (v_i + t)^2 <= bound
    // Loose integer radius, tightened by the exact per-candidate check.
    Int radius = sqrt(numerator(bound) / denominator(bound)) + 2;
    Int center_num = numerator(t), center_den = denominator(t);
    Int lo = -(center_num + radius * center_den) / center_den - 1;
    Int hi = (-center_num + radius * center_den) / center_den + 1;
    for (Int x = lo; x <= hi; ++x) {
      Rat term = (Rat(x) + t) * (Rat(x) + t) * ldlt->d[i];
      if (term > remaining) continue;
      v[i] = x;
      self(self, i - 1, remaining - term);
    }
    v[i] = 0;
  };
  dfs(dfs, n - 1, target);
  // Keep one vector per antipodal pair; both signs reach the search.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Evaluations of the adjunction class against the plumbing basis:
// c1(S_i) = 2 + S_i.S_i = 2 - w_i.
inline std::vector<Int> adjunction_c1(const Tuple& weights) {
  std::vector<Int> out;
  for (Entry w : weights) out.push_back(2 - Int(w));
  return out;
}

inline Int c1_eval(const std::vector<Int>& c1, const std::vector<Int>& v) {
  Int total = 0;
  for (std::size_t i = 0; i < c1.size(); ++i) total += c1[i] * v[i];
  return total;
}

// Embeddings of a chain v_1..v_m with prescribed squares, consecutive
// products 1 and distant products 0.  With c1 given, each class must also
// satisfy c1(v_i) = 2 + v_i.v_i.  Two chains spanning the same sublattice
// realise the same Gram matrix, hence differ by an automorphism of the
// chain form (simultaneous sign flip, reflection in an end class); such
// chains count as one embedding and the representative with the most
// positive leading coefficients, then lexicographically smallest, is kept.
inline std::vector<std::vector<std::vector<Int>>> chain_embeddings(
    const IntForm& f, const Tuple& squares,
    const std::optional<std::vector<Int>>& c1 = std::nullopt) {
  if (!is_negative_definite(f))
    throw NotNegativeDefinite("chain_embeddings: form not negative definite");
  if (c1 && static_cast<int>(c1->size()) != f.dim)
    throw InvalidInput("chain_embeddings: c1 length mismatch");
  std::vector<std::vector<std::vector<Int>>> result;
  if (squares.empty()) {
    result.push_back({});
    return result;
  }
  for (Entry s : squares)
    if (s >= 0) throw InvalidInput("chain_embeddings: squares must be negative");
  // Candidate classes per position, both signs.
  std::vector<std::vector<std::vector<Int>>> cands(squares.size());
  for (std::size_t i = 0; i < squares.size(); ++i) {
    for (const auto& v : vectors_of_square(f, Int(squares[i]))) {
      std::vector<Int> neg = v;
      for (Int& x : neg) x = -x;
      for (const auto& w : {v, neg}) {
        if (c1 && c1_eval(*c1, w) != 2 + Int(squares[i])) continue;
        cands[i].push_back(w);
      }
    }
  }
  std::vector<std::vector<Int>> chain;
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == squares.size()) {
      result.push_back(chain);
      return;
    }
    for (const auto& w : cands[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < chain.size() && ok; ++j) {
        Int want = j + 1 == i ? 1 : 0;
        ok = f.dot(chain[j], w) == want;
      }
      if (!ok) continue;
      chain.push_back(w);
      self(self, i + 1);
      chain.pop_back();
    }
  };
  dfs(dfs, 0);
  // One representative per image sublattice, keyed by Hermite normal form.
  auto preference = [](const std::vector<std::vector<Int>>& ch) {
    int lead_negative = 0;
    for (const auto& v : ch)
      for (const Int& x : v) {
        if (x == 0) continue;
        if (x < 0) ++lead_negative;
        break;
      }
    return lead_negative;
  };
  std::map<std::vector<std::vector<Int>>, std::vector<std::vector<Int>>> best;
  for (const auto& ch : result) {
    auto key = detail::row_hnf(ch);
    auto it = best.find(key);
    if (it == best.end()) {
      best.emplace(std::move(key), ch);
    } else if (std::pair(preference(ch), ch) <
               std::pair(preference(it->second), it->second)) {
      it->second = ch;
    }
  }
  std::vector<std::vector<std::vector<Int>>> kept;
  for (const auto& [key, ch] : best) kept.push_back(ch);
  std::sort(kept.begin(), kept.end());
  return kept;
}

// Named reference forms used by the verification suite and the CLI.  Each
// is the intersection form of a small symplectic filling; the text files
// under fixtures/ carry the same matrices.
inline const std::vector<std::pair<std::string, IntForm>>& builtin_forms() {
  auto make = [](std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Int>> m;
    for (auto& r : rows) m.emplace_back(r.begin(), r.end());
    return IntForm(std::move(m));
  };
  static const std::vector<std::pair<std::string, IntForm>> forms = {
      {"form_2132221", make({{-7, 2, 0, 0},
                             {2, -4, 1, 0},
                             {0, 1, -2, 1},
                             {0, 0, 1, -4}})},
      {"form_1231321", make({{-4, 1, 0, 0},
                             {1, -4, -4, -1},
                             {0, -4, -7, -2},
                             {0, -1, -2, -4}})},
      {"form_1222312", make({{-4, 1, 0, 0},
                             {1, -2, 1, 0},
                             {0, 1, -4, 2},
                             {0, 0, 2, -7}})},
      {"form_32132", make({{-2, 1}, {1, -5}})},
      {"form_31313", make({{-2, 1}, {1, -41}})},
  };
  return forms;
}

inline std::optional<IntForm> builtin_form(const std::string& name) {
  for (const auto& [n, f] : builtin_forms())
    if (n == name) return f;
  return std::nullopt;
}

// Plain-text fixture: one matrix row per line, space-separated integers.
inline IntForm read_form(std::istream& in) {
  std::vector<std::vector<Int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<Int> row;
    long long x;
    while (ls >> x) row.emplace_back(x);
    if (!ls.eof()) throw InvalidInput("form fixture: bad integer");
    rows.push_back(std::move(row));
  }
  return IntForm(std::move(rows));
}

inline IntForm read_form_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("form fixture: cannot open " + path);
  return read_form(in);
}

}  // namespace rbd
