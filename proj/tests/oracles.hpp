#pragma once

// Slow, independent reference implementations used to cross-check the
// library. They only read adjacency through Graph::adjacent and never call
// into the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "toughlab/graph.hpp"
#include "toughlab/rational.hpp"

namespace oracle {

using toughlab::Graph;
using toughlab::Rational;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

// Components of the graph restricted to vertices with removed[v] == false.
inline int components(const Matrix& m, const std::vector<bool>& removed) {
  const int n = static_cast<int>(m.size());
  std::vector<int> label(n, -1);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if (removed[s] || label[s] != -1) continue;
    std::vector<int> stack{s};
    label[s] = count;
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (m[x][y] && !removed[y] && label[y] == -1) {
          label[y] = count;
          stack.push_back(y);
        }
      }
    }
    ++count;
  }
  return count;
}

inline bool connected_between(const Matrix& m, const std::vector<bool>& removed, int u, int v) {
  const int n = static_cast<int>(m.size());
  std::vector<bool> seen(n, false);
  std::vector<int> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    if (x == v) return true;
    for (int y = 0; y < n; ++y) {
      if (m[x][y] && !removed[y] && !seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return false;
}

inline std::vector<bool> mask_to_removed(int n, std::uint64_t mask) {
  std::vector<bool> r(n);
  for (int i = 0; i < n; ++i) r[i] = (mask >> i) & 1U;
  return r;
}

// tau by scanning every vertex subset; nullopt encodes infinity.
inline std::optional<Rational> toughness(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix_of(g);
  std::optional<Rational> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int c = components(m, mask_to_removed(n, mask));
    if (c < 2) continue;
    const Rational r(std::popcount(mask), c);
    if (!best || r < *best) best = r;
  }
  return best;
}

// Menger: the smallest u-v vertex cut when u, v are non-adjacent; for an
// edge uv, one plus the value in G - uv.
inline int local_connectivity(const Graph& g, int u, int v) {
  const int n = g.order();
  Matrix m = matrix_of(g);
  int extra = 0;
  if (m[u][v]) {
    m[u][v] = m[v][u] = false;
    extra = 1;
  }
  int best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (((mask >> u) & 1U) || ((mask >> v) & 1U)) continue;
    const int size = std::popcount(mask);
    if (size >= best) continue;
    if (!connected_between(m, mask_to_removed(n, mask), u, v)) best = size;
  }
  return best + extra;
}

inline int connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const Matrix m = matrix_of(g);
  // Smallest set whose removal disconnects or leaves one vertex.
  for (int k = 0; k < n - 1; ++k) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      if (components(m, mask_to_removed(n, mask)) >= 2) return k;
    }
  }
  return n - 1;
}

// Maximum matching over all edges of g by exhaustive recursion.
inline int max_matching(const Graph& g, int from = 0, std::uint64_t used = 0) {
  const int n = g.order();
  int v = from;
  while (v < n && ((used >> v) & 1U)) ++v;
  if (v >= n) return 0;
  int best = max_matching(g, v + 1, used | (std::uint64_t{1} << v));
  for (int w = v + 1; w < n; ++w) {
    if (!((used >> w) & 1U) && g.adjacent(v, w)) {
      best = std::max(best, 1 + max_matching(g, v + 1, used | (std::uint64_t{1} << v) | (std::uint64_t{1} << w)));
    }
  }
  return best;
}

// Code of g under a labeling: upper-triangle bits, columns in order, first
// pair most significant.
inline std::uint64_t code_under(const Matrix& m, const std::vector<int>& perm) {
  const int n = static_cast<int>(m.size());
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) code = (code << 1) | (m[inv[i]][inv[j]] ? 1U : 0U);
  return code;
}

// Least code over all n! labelings.
inline std::uint64_t canonical_code(const Graph& g) {
  const Matrix m = matrix_of(g);
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, code_under(m, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph from_pair_mask(int n, std::uint64_t mask) {
  toughlab::GraphBuilder b(n);
  int idx = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++idx)
      if ((mask >> idx) & 1U) b.add_edge(i, j);
  return b.build();
}

// Number of isomorphism classes of graphs on n vertices, by labeled
// enumeration and brute-force canonical codes.
inline std::size_t count_isomorphism_classes(int n, bool connected_only) {
  const int pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = from_pair_mask(n, mask);
    if (connected_only && n > 0 && components(matrix_of(g), std::vector<bool>(n, false)) != 1) continue;
    seen.insert(canonical_code(g));
  }
  return seen.size();
}

inline Graph induced(const Graph& g, std::uint64_t mask) {
  std::vector<int> vs;
  for (int v = 0; v < g.order(); ++v)
    if ((mask >> v) & 1U) vs.push_back(v);
  toughlab::GraphBuilder b(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j])) b.add_edge(static_cast<int>(i), static_cast<int>(j));
  return b.build();
}

// Some vertex subset induces a connected 2-regular graph on >= min_length
// vertices.
inline bool has_induced_cycle(const Graph& g, int min_length) {
  const int n = g.order();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < min_length) continue;
    const Graph h = induced(g, mask);
    bool two_regular = true;
    for (int v = 0; v < h.order() && two_regular; ++v) {
      int d = 0;
      for (int w = 0; w < h.order(); ++w) d += h.adjacent(v, w);
      two_regular = d == 2;
    }
    if (two_regular && components(matrix_of(h), std::vector<bool>(h.order(), false)) == 1) return true;
  }
  return false;
}

inline Graph complement_of(const Graph& g) {
  toughlab::GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

// Some subset induces a graph isomorphic to pattern.
inline bool contains_induced(const Graph& g, const Graph& pattern) {
  const int n = g.order();
  const int k = pattern.order();
  const std::uint64_t target = canonical_code(pattern);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) == k && canonical_code(induced(g, mask)) == target) return true;
  }
  return false;
}

// Largest number of parts over all set partitions whose parts are singletons
// or induce disconnected subgraphs and whose cross pairs are all adjacent;
// also reports how many partitions reach that number.
inline std::pair<int, int> best_cograph_partitions(const Graph& g) {
  const int n = g.order();
  const Matrix m = matrix_of(g);
  std::vector<int> label(n, 0);
  int best = 0;
  int count = 0;
  auto valid = [&](int parts) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (label[u] != label[v] && !m[u][v]) return false;
    for (int p = 0; p < parts; ++p) {
      std::vector<bool> removed(n);
      int size = 0;
      for (int v = 0; v < n; ++v) {
        removed[v] = label[v] != p;
        size += label[v] == p;
      }
      if (size > 1 && components(m, removed) < 2) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int v, int parts) -> void {
    if (v == n) {
      if (!valid(parts)) return;
      if (parts > best) {
        best = parts;
        count = 1;
      } else if (parts == best) {
        ++count;
      }
      return;
    }
    for (int p = 0; p <= parts; ++p) {
      label[v] = p;
      self(self, v + 1, std::max(parts, p + 1));
    }
  };
  rec(rec, 0, 0);
  return {best, count};
}

}  // namespace oracle
