#pragma once
// Brute-force reference implementations used only by the tests. They work
// on plain sorted integer vectors and deliberately share no code with the
// library beyond reading a matroid's basis list.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "matreg/matroid.hpp"

namespace oracle {

using Set = std::vector<int>;  // sorted, 1-based
using Family = std::set<Set>;

inline std::vector<Set> power_set(int n) {
  std::vector<Set> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    Set s;
    for (int i = 0; i < n; ++i) {
      if (m >> i & 1U) s.push_back(i + 1);
    }
    out.push_back(s);
  }
  return out;
}

inline bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

inline Set minus(const Set& a, const Set& b) {
  Set r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline Family bases_of(const matreg::Matroid& m) {
  Family f;
  for (auto b : m.bases()) f.insert(b.elements());
  return f;
}

inline bool independent(const Family& bases, const Set& s) {
  return std::any_of(bases.begin(), bases.end(), [&](const Set& b) { return subset(s, b); });
}

inline Family circuits(const Family& bases, int n) {
  Family out;
  for (const Set& s : power_set(n)) {
    if (independent(bases, s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      Set t = s;
      t.erase(t.begin() + static_cast<long>(i));
      minimal = independent(bases, t);
    }
    if (minimal) out.insert(s);
  }
  return out;
}

inline int rank(const Family& bases, const Set& a) {
  int r = 0;
  for (const Set& b : bases) {
    Set both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    r = std::max(r, static_cast<int>(both.size()));
  }
  return r;
}

/// Number of connected components of (vertices, edges) by DFS.
inline int components(int vertices, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices) + 1);
  for (auto [a, b] : edges) {
    adj[static_cast<std::size_t>(a)].push_back(b);
    adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::vector<char> seen(static_cast<std::size_t>(vertices) + 1, 0);
  int count = 0;
  for (int v = 1; v <= vertices; ++v) {
    if (seen[static_cast<std::size_t>(v)]) continue;
    ++count;
    std::vector<int> stack{v};
    seen[static_cast<std::size_t>(v)] = 1;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)]) {
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

/// Maximum spanning forests: acyclic edge sets (|F| = V - components(F)) of the largest size.
inline Family spanning_forests(const matreg::Graph& g) {
  const int e = g.edge_count();
  Family forests;
  std::size_t best = 0;
  for (const Set& s : power_set(e)) {
    std::vector<std::pair<int, int>> sub;
    for (int i : s) sub.push_back(g.edges[static_cast<std::size_t>(i - 1)]);
    if (static_cast<int>(s.size()) != g.vertex_count - components(g.vertex_count, sub)) continue;
    if (s.size() > best) {
      forests.clear();
      best = s.size();
    }
    if (s.size() == best) forests.insert(s);
  }
  return forests;
}

/// Minimal edge sets whose removal raises the component count.
inline Family bonds(const matreg::Graph& g) {
  const int e = g.edge_count();
  const int base = components(g.vertex_count, g.edges);
  auto is_cut = [&](const Set& s) {
    std::vector<std::pair<int, int>> rest;
    for (int i = 1; i <= e; ++i) {
      if (!std::binary_search(s.begin(), s.end(), i)) rest.push_back(g.edges[static_cast<std::size_t>(i - 1)]);
    }
    return components(g.vertex_count, rest) > base;
  };
  Family out;
  for (const Set& s : power_set(e)) {
    if (s.empty() || !is_cut(s)) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < s.size() && minimal; ++i) {
      Set t = s;
      t.erase(t.begin() + static_cast<long>(i));
      minimal = t.empty() || !is_cut(t);
    }
    if (minimal) out.insert(s);
  }
  return out;
}

/// Smallest k with k bases whose union is everything (union_mode) or whose
/// intersection is empty (otherwise). 0 when impossible.
inline int min_bases(const Family& bases, int n, bool union_mode) {
  const std::vector<Set> list(bases.begin(), bases.end());
  Set all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 1);
  for (std::size_t k = 1; k <= list.size(); ++k) {
    std::vector<int> pick(k, 0);
    std::function<bool(std::size_t, std::size_t, Set)> rec = [&](std::size_t depth, std::size_t from, Set acc) {
      if (depth == k) return union_mode ? acc == all : acc.empty();
      for (std::size_t i = from; i < list.size(); ++i) {
        Set next;
        if (depth == 0) {
          next = list[i];
        } else if (union_mode) {
          std::set_union(acc.begin(), acc.end(), list[i].begin(), list[i].end(), std::back_inserter(next));
        } else {
          std::set_intersection(acc.begin(), acc.end(), list[i].begin(), list[i].end(), std::back_inserter(next));
        }
        if (rec(depth + 1, i + 1, next)) return true;
      }
      return false;
    };
    if (rec(0, 0, {})) return static_cast<int>(k);
  }
  return 0;
}

/// max ceil(e_H / (n_H - 1)) over vertex subsets with at least two vertices.
inline int nash_williams(const matreg::Graph& g) {
  int best = 0;
  for (const Set& h : power_set(g.vertex_count)) {
    if (h.size() < 2) continue;
    int e = 0;
    for (auto [a, b] : g.edges) e += std::binary_search(h.begin(), h.end(), a) && std::binary_search(h.begin(), h.end(), b);
    const int d = static_cast<int>(h.size()) - 1;
    best = std::max(best, (e + d - 1) / d);
  }
  return best;
}

// ---- homology over GF(p), straight from the chain complex ----

inline int rank_mod(std::vector<std::vector<long long>> m, int p) {
  int r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(r)]);
    auto& pr = m[static_cast<std::size_t>(r)];
    // inverse by Fermat
    long long inv = 1, base = ((pr[c] % p) + p) % p;
    for (int e = p - 2; e > 0; e >>= 1, base = base * base % p) {
      if (e & 1) inv = inv * base % p;
    }
    for (auto& x : pr) x = ((x % p + p) % p) * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == static_cast<std::size_t>(r) || m[i][c] % p == 0) continue;
      const long long f = ((m[i][c] % p) + p) % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = ((m[i][j] - f * pr[j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// dims[k] = dim H~_{k-1}; the void complex (no facets) gives all zeros.
inline std::vector<int> reduced_homology(const std::vector<Set>& facets, int p) {
  Family faces;
  for (const Set& f : facets) {
    const int k = static_cast<int>(f.size());
    for (std::uint32_t m = 0; m < (1U << k); ++m) {
      Set s;
      for (int i = 0; i < k; ++i) {
        if (m >> i & 1U) s.push_back(f[static_cast<std::size_t>(i)]);
      }
      faces.insert(s);
    }
  }
  int top = -1;
  for (const Set& f : faces) top = std::max(top, static_cast<int>(f.size()));
  if (faces.empty()) return {0};
  std::vector<std::vector<Set>> by_size(static_cast<std::size_t>(top) + 2);
  for (const Set& f : faces) by_size[f.size()].push_back(f);
  // rank of the boundary from size k to size k-1
  auto boundary_rank = [&](std::size_t k) {
    if (k == 0 || k >= by_size.size() || by_size[k].empty()) return 0;
    std::map<Set, std::size_t> row;
    for (std::size_t i = 0; i < by_size[k - 1].size(); ++i) row[by_size[k - 1][i]] = i;
    std::vector<std::vector<long long>> mat(by_size[k - 1].size(), std::vector<long long>(by_size[k].size(), 0));
    for (std::size_t j = 0; j < by_size[k].size(); ++j) {
      const Set& f = by_size[k][j];
      for (std::size_t i = 0; i < f.size(); ++i) {
        Set g = f;
        g.erase(g.begin() + static_cast<long>(i));
        mat[row[g]][j] = (i % 2 == 0) ? 1 : p - 1;
      }
    }
    return rank_mod(mat, p);
  };
  std::vector<int> dims;
  for (std::size_t k = 0; k < by_size.size(); ++k) {
    const int chains = static_cast<int>(by_size[k].size());
    dims.push_back(chains - boundary_rank(k) - boundary_rank(k + 1));
  }
  while (dims.size() > 1 && dims.back() == 0) dims.pop_back();
  return dims;
}

// ---- symbolic powers and degree complexes by definition ----

using Vec = std::vector<int>;

/// x^a ∈ ∩_B P_{[n]\B}^t, each prime power tested directly.
inline bool in_symbolic_power(const Family& bases, const Vec& a, int t) {
  for (const Set& b : bases) {
    int s = 0;
    for (int i = 1; i <= static_cast<int>(a.size()); ++i) {
      if (!std::binary_search(b.begin(), b.end(), i)) s += a[static_cast<std::size_t>(i - 1)];
    }
    if (s < t) return false;
  }
  return true;
}

inline void for_each_in_box(const Vec& lo, const Vec& hi, const std::function<void(const Vec&)>& f) {
  Vec a = lo;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == a.size()) return f(a);
    for (int v = lo[k]; v <= hi[k]; ++v) {
      a[k] = v;
      rec(k + 1);
    }
  };
  rec(0);
}

/// Minimal generators of the t-th symbolic power by scanning [0,t]^n.
inline std::set<Vec> symbolic_generators(const Family& bases, int n, int t) {
  std::set<Vec> out;
  for_each_in_box(Vec(static_cast<std::size_t>(n), 0), Vec(static_cast<std::size_t>(n), t), [&](const Vec& a) {
    if (!in_symbolic_power(bases, a, t)) return;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      Vec b = a;
      --b[i];
      if (in_symbolic_power(bases, b, t)) return;
    }
    out.insert(a);
  });
  return out;
}

/// Δ_a(I) from the face definition: F \ G_a for G_a ⊆ F ⊆ [n] such that every
/// generator b has some i ∉ F with a_i < b_i. Returns the facets.
inline Family degree_complex(const std::set<Vec>& gens, const Vec& a) {
  const int n = static_cast<int>(a.size());
  Set g;
  for (int i = 1; i <= n; ++i) {
    if (a[static_cast<std::size_t>(i - 1)] < 0) g.push_back(i);
  }
  Family faces;
  for (const Set& f : power_set(n)) {
    if (!subset(g, f)) continue;
    bool ok = true;
    for (const Vec& b : gens) {
      bool escaped = false;
      for (int i = 1; i <= n && !escaped; ++i) {
        if (!std::binary_search(f.begin(), f.end(), i) && a[static_cast<std::size_t>(i - 1)] < b[static_cast<std::size_t>(i - 1)]) escaped = true;
      }
      ok = ok && escaped;
    }
    if (ok) faces.insert(minus(f, g));
  }
  Family facets;
  for (const Set& f : faces) {
    bool maximal = true;
    for (const Set& h : faces) {
      if (h.size() > f.size() && subset(f, h)) maximal = false;
    }
    if (maximal) facets.insert(f);
  }
  return facets;
}

/// Alternating Betti sums Σ_i (-1)^i β_{i,a}(I) from the Taylor complex:
/// Σ over nonempty generator subsets σ of (-1)^{|σ|+1} at lcm(σ).
inline std::map<Vec, long long> taylor_alternating(const std::vector<Vec>& gens) {
  std::map<Vec, long long> out;
  const std::size_t k = gens.size();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << k); ++m) {
    Vec l(gens[0].size(), 0);
    int bits = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!(m >> i & 1U)) continue;
      ++bits;
      for (std::size_t j = 0; j < l.size(); ++j) l[j] = std::max(l[j], gens[i][j]);
    }
    out[l] += (bits % 2 == 1) ? 1 : -1;
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// ---- matroid enumeration by the independence axioms ----

/// All matroids on [n] as basis families: downward-closed families of
/// subsets satisfying augmentation, reduced to their maximal members.
inline std::set<Family> all_matroids(int n) {
  const std::vector<Set> subsets = power_set(n);
  const std::uint32_t total = 1U << n;
  std::set<Family> out;
  // family as a bitmask over the 2^n subsets; the empty set is bit 0
  for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << total); fam += 2) {
    auto has = [&](std::uint32_t s) { return (fam >> s & 1U) != 0; };
    bool ok = true;
    for (std::uint32_t s = 0; s < total && ok; ++s) {
      if (!has(s)) continue;
      for (int i = 0; i < n && ok; ++i) {
        if (s >> i & 1U) ok = has(s & ~(1U << i));
      }
    }
    for (std::uint32_t x = 0; x < total && ok; ++x) {
      if (!has(x)) continue;
      for (std::uint32_t y = 0; y < total && ok; ++y) {
        if (!has(y) || __builtin_popcount(y) <= __builtin_popcount(x)) continue;
        bool aug = false;
        for (int i = 0; i < n && !aug; ++i) {
          if ((y >> i & 1U) && !(x >> i & 1U)) aug = has(x | (1U << i));
        }
        ok = aug;
      }
    }
    if (!ok) continue;
    Family bases;
    for (std::uint32_t s = 0; s < total; ++s) {
      if (!has(s)) continue;
      bool maximal = true;
      for (int i = 0; i < n && maximal; ++i) {
        if (!(s >> i & 1U) && has(s | (1U << i))) maximal = false;
      }
      if (maximal) bases.insert(subsets[s]);
    }
    out.insert(bases);
  }
  return out;
}

/// Augmentation axiom on the independent sets generated by an equicardinal family.
inline bool satisfies_augmentation(const Family& bases, int n) {
  std::vector<Set> ind;
  for (const Set& s : power_set(n)) {
    if (independent(bases, s)) ind.push_back(s);
  }
  for (const Set& x : ind) {
    for (const Set& y : ind) {
      if (y.size() <= x.size()) continue;
      bool aug = false;
      for (int e : minus(y, x)) {
        Set z = x;
        z.insert(std::upper_bound(z.begin(), z.end(), e), e);
        aug = aug || independent(bases, z);
      }
      if (!aug) return false;
    }
  }
  return true;
}

}  // namespace oracle
