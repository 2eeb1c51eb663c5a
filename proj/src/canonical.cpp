#include "toughlab/canonical.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "toughlab/error.hpp"
#include "toughlab/graph6.hpp"

namespace toughlab {

namespace {

using Coloring = std::array<int, kMaxCanonicalOrder>;

// Upper-triangle code of g with vertex v placed at position pos[v].
std::uint64_t leaf_code(const Graph& g, const Coloring& pos) {
  const int n = g.order();
  std::array<int, kMaxCanonicalOrder> at{};
  for (int v = 0; v < n; ++v) at[pos[v]] = v;
  std::uint64_t code = 0;
  for (int j = 1; j < n; ++j) {
    const Word row = g.row(at[j]);
    for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> at[i]) & 1U);
  }
  return code;
}

// Renumbers colors 0..k-1 by sorting vertices on (color, counts of neighbours
// per color) until the partition is equitable. Ranks depend only on the
// previous colors, so the result is isomorphism-invariant.
int refine(const Graph& g, Coloring& color) {
  const int n = g.order();
  int cells = 0;
  {
    std::array<bool, kMaxCanonicalOrder> used{};
    for (int v = 0; v < n; ++v) used[color[v]] = true;
    for (int c = 0; c < n; ++c) cells += used[c];
  }
  using Key = std::array<int, kMaxCanonicalOrder + 1>;
  while (true) {
    std::array<Key, kMaxCanonicalOrder> key{};
    for (int v = 0; v < n; ++v) {
      key[v][0] = color[v];
      for (int w : Bits{g.row(v)}) key[v][1 + color[w]] += 1;
    }
    std::array<int, kMaxCanonicalOrder> order{};
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.begin() + n, [&](int a, int b) { return key[a] < key[b]; });
    Coloring next{};
    int rank = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) rank = i;
      next[order[i]] = rank;
    }
    int next_cells = 0;
    for (int i = 0; i < n; ++i) next_cells += (i == 0 || key[order[i]] != key[order[i - 1]]);
    color = next;
    if (next_cells == cells) return cells;
    cells = next_cells;
  }
}

struct Search {
  const Graph& g;
  std::uint64_t best = 0;
  Coloring best_pos{};
  bool have = false;

  void run(Coloring color) {
    const int n = g.order();
    if (refine(g, color) == n) {
      const std::uint64_t code = leaf_code(g, color);
      if (!have || code < best) {
        best = code;
        best_pos = color;
        have = true;
      }
      return;
    }
    // Target: the smallest non-singleton cell, earliest color on ties.
    std::array<int, kMaxCanonicalOrder> cell_size{};
    for (int v = 0; v < n; ++v) cell_size[color[v]] += 1;
    int target = -1;
    for (int c = 0; c < n; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }
    Word tried = 0;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      // Swapping two twins in the same cell is an automorphism fixing the
      // coloring, so their subtrees yield identical leaf codes.
      bool twin = false;
      for (int w : Bits{tried}) {
        if ((g.row(v) & ~bit(w)) == (g.row(w) & ~bit(v))) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried |= bit(v);
      Coloring child = color;
      for (int w = 0; w < n; ++w) {
        if (color[w] == target && w != v) child[w] = target + 1;
        else if (color[w] > target) child[w] = color[w] + 1;
      }
      // Colors may now exceed n-1 only transiently; compress them.
      std::array<int, kMaxCanonicalOrder + 1> remap{};
      remap.fill(-1);
      for (int w = 0; w < n; ++w) remap[child[w]] = 0;
      int k = 0;
      for (int c = 0; c <= n; ++c) {
        if (remap[c] == 0) remap[c] = k++;
      }
      for (int w = 0; w < n; ++w) child[w] = remap[child[w]];
      run(child);
    }
  }
};

void check_order(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw ArgumentError("canonical form supports order <= " + std::to_string(kMaxCanonicalOrder) +
                        ", got " + std::to_string(g.order()));
  }
}

Search canonical_search(const Graph& g) {
  check_order(g);
  Search s{g};
  Coloring start{};
  const int n = g.order();
  if (n == 0) {
    s.have = true;
    return s;
  }
  std::vector<int> degs = g.degrees();
  std::vector<int> sorted = degs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int v = 0; v < n; ++v) {
    start[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) - sorted.begin());
  }
  s.run(start);
  return s;
}

}  // namespace

std::string CanonicalCode::bytes() const { return write_graph6(from_code(*this)); }

CanonicalCode canonical_code(const Graph& g) {
  const Search s = canonical_search(g);
  return CanonicalCode(g.order(), s.best);
}

Graph canonical_form(const Graph& g) {
  const Search s = canonical_search(g);
  std::vector<int> perm(g.order());
  for (int v = 0; v < g.order(); ++v) perm[v] = s.best_pos[v];
  return relabel(g, perm);
}

Graph from_code(const CanonicalCode& code) {
  const int n = code.order();
  if (n < 0 || n > kMaxCanonicalOrder) throw ArgumentError("canonical code order out of range");
  GraphBuilder b(n);
  int k = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      --k;
      if ((code.bits() >> k) & 1U) b.add_edge(i, j);
    }
  }
  return b.build();
}

}  // namespace toughlab
