#include "toughlab/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "toughlab/error.hpp"

namespace toughlab {

Word reach(const Graph& g, Word alive, int start) {
  Word seen = bit(start);
  Word frontier = seen;
  while (frontier) {
    Word next = 0;
    for (int v : Bits{frontier}) next |= g.row(v);
    next &= alive & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

int count_components(const Graph& g, Word alive) {
  int count = 0;
  while (alive) {
    alive &= ~reach(g, alive, std::countr_zero(alive));
    ++count;
  }
  return count;
}

bool separated(const Graph& g, Word alive, int u, int v) { return !(reach(g, alive, u) & bit(v)); }

bool is_connected(const Graph& g) { return count_components(g, g.all()) <= 1; }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Word alive = g.all();
  while (alive) {
    const Word c = reach(g, alive, std::countr_zero(alive));
    out.emplace_back(g.order(), c);
    alive &= ~c;
  }
  return out;
}

int Hops::value() const {
  if (is_infinite()) throw ArgumentError("infinite distance has no value");
  return value_;
}

std::string Hops::to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

Hops DistanceTable::eccentricity(int u) const {
  Hops e(0);
  for (int v = 0; v < n_; ++v) e = std::max(e, at(u, v));
  return e;
}

Hops DistanceTable::diameter() const {
  Hops d(0);
  for (int u = 0; u < n_; ++u) d = std::max(d, eccentricity(u));
  return d;
}

DistanceTable distances(const Graph& g) {
  const int n = g.order();
  DistanceTable table(n);
  for (int s = 0; s < n; ++s) {
    Word seen = bit(s);
    Word frontier = seen;
    int depth = 0;
    while (frontier) {
      for (int v : Bits{frontier}) table.set(s, v, Hops(depth));
      Word next = 0;
      for (int v : Bits{frontier}) next |= g.row(v);
      next &= ~seen;
      seen |= next;
      frontier = next;
      ++depth;
    }
  }
  return table;
}

Hops distance(const Graph& g, int u, int v) { return distances(g).at(u, v); }

Hops diameter(const Graph& g) { return distances(g).diameter(); }

Hops co_diameter(const Graph& g) { return diameter(complement(g)); }

namespace {

// Residual network over 2n nodes: v_in = 2v, v_out = 2v + 1.
class SplitNetwork {
 public:
  explicit SplitNetwork(const Graph& g) : size_(2 * g.order()), cap_(size_ * size_, 0) {
    for (int v = 0; v < g.order(); ++v) {
      cap(in(v), out(v)) = 1;
      for (int w : Bits{g.row(v)}) cap(out(v), in(w)) = 1;
    }
  }

  static int in(int v) { return 2 * v; }
  static int out(int v) { return 2 * v + 1; }

  int max_flow(int source, int sink) {
    int flow = 0;
    std::vector<int> parent(size_);
    while (true) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[source] = source;
      std::deque<int> queue{source};
      while (!queue.empty() && parent[sink] < 0) {
        const int x = queue.front();
        queue.pop_front();
        for (int y = 0; y < size_; ++y) {
          if (parent[y] < 0 && cap(x, y) > 0) {
            parent[y] = x;
            queue.push_back(y);
          }
        }
      }
      if (parent[sink] < 0) return flow;
      for (int y = sink; y != source; y = parent[y]) {
        cap(parent[y], y) -= 1;
        cap(y, parent[y]) += 1;
      }
      ++flow;
    }
  }

 private:
  unsigned char& cap(int x, int y) { return cap_[static_cast<std::size_t>(x) * size_ + y]; }

  int size_;
  std::vector<unsigned char> cap_;
};

void check_pair(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order()) throw ArgumentError("vertex out of range");
  if (u == v) throw ArgumentError("local connectivity needs two distinct vertices");
}

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
  check_pair(g, u, v);
  if (g.adjacent(u, v)) {
    SplitNetwork net(delete_edge(g, u, v));
    return 1 + net.max_flow(SplitNetwork::out(u), SplitNetwork::in(v));
  }
  SplitNetwork net(g);
  return net.max_flow(SplitNetwork::out(u), SplitNetwork::in(v));
}

int connectivity(const Graph& g) {
  const int n = g.order();
  if (g.is_complete()) return std::max(0, n - 1);
  if (count_components(g, g.all()) > 1) return 0;
  int best = n - 1;
  for (int u = 0; u < n; ++u) {
    for (int v : Bits{~g.row(u) & g.all() & ~low_bits(u + 1)}) {
      best = std::min(best, local_connectivity(g, u, v));
    }
  }
  return best;
}

namespace {

bool augment(const Graph& g, Word b_side, int a, Word& visited, std::vector<int>& mate) {
  for (int y : Bits{g.row(a) & b_side & ~visited}) {
    visited |= bit(y);
    if (mate[y] < 0 || augment(g, b_side, mate[y], visited, mate)) {
      mate[y] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

Matching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order()) {
    throw ArgumentError("vertex set universe does not match graph");
  }
  if (a.intersects(b)) throw ArgumentError("matching sides overlap");
  std::vector<int> mate(g.order(), -1);  // b-vertex -> a-vertex
  for (int x : a) {
    Word visited = 0;
    augment(g, b.bits(), x, visited, mate);
  }
  Matching m;
  for (int y : b) {
    if (mate[y] >= 0) m.pairs.push_back({mate[y], y});
  }
  std::sort(m.pairs.begin(), m.pairs.end());
  return m;
}

Extension uv_extension(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.universe() != g.order() || b.universe() != g.order()) {
    throw ArgumentError("vertex set universe does not match graph");
  }
  if (a.intersects(b) || (a | b) != g.vertices()) throw ArgumentError("a and b must partition V(G)");
  for (const Edge& e : g.edges()) {
    if (a.contains(e.u) == a.contains(e.v)) {
      throw ArgumentError("edge " + to_string(e) + " does not run between a and b");
    }
  }
  const int n = g.order();
  if (n + 2 > kMaxVertices) throw ArgumentError("extension exceeds vertex cap");
  GraphBuilder builder(n + 2);
  for (const Edge& e : g.edges()) builder.add_edge(e.u, e.v);
  for (int x : a) builder.add_edge(n, x);
  for (int y : b) builder.add_edge(n + 1, y);
  return {builder.build(), n, n + 1};
}

}  // namespace toughlab
