#include "toughlab/graph.hpp"

#include <algorithm>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw ArgumentError("graph order " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxVertices) + "]");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw ArgumentError("vertex " + std::to_string(v) + " not in graph of order " +
                        std::to_string(g.order()));
  }
}

}  // namespace

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += popcount(adj_[v]);
  return twice / 2;
}

int Graph::min_degree() const {
  int d = n_;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

bool Graph::is_complete() const {
  for (int v = 0; v < n_; ++v) {
    if ((adj_[v] | bit(v)) != all()) return false;
  }
  return true;
}

bool Graph::is_edgeless() const {
  for (int v = 0; v < n_; ++v) {
    if (adj_[v] != 0) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : Bits{adj_[u] & ~low_bits(u + 1)}) out.push_back({u, v});
  }
  return out;
}

bool Graph::operator==(const Graph& o) const {
  return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(g_, u);
  check_vertex(g_, v);
  if (u == v) throw ArgumentError("loop at vertex " + std::to_string(u));
  g_.adj_[u] |= bit(v);
  g_.adj_[v] |= bit(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(g_, u);
  check_vertex(g_, v);
  g_.adj_[u] &= ~bit(v);
  g_.adj_[v] &= ~bit(u);
  return *this;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return b.build();
}

namespace {

GraphBuilder combine(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  if (n1 + g2.order() > kMaxVertices) {
    throw ArgumentError("combined order " + std::to_string(n1 + g2.order()) + " exceeds cap " +
                        std::to_string(kMaxVertices));
  }
  GraphBuilder b(n1 + g2.order());
  for (const Edge& e : g1.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : g2.edges()) b.add_edge(e.u + n1, e.v + n1);
  return b;
}

}  // namespace

Graph join(const Graph& g1, const Graph& g2) {
  GraphBuilder b = combine(g1, g2);
  for (int u = 0; u < g1.order(); ++u) {
    for (int v = 0; v < g2.order(); ++v) b.add_edge(u, g1.order() + v);
  }
  return b.build();
}

Graph disjoint_union(const Graph& g1, const Graph& g2) { return combine(g1, g2).build(); }

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ArgumentError("vertex set universe does not match graph");
  std::vector<int> index(g.order(), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  GraphBuilder b(next);
  for (int u : s) {
    for (int v : Bits{g.row(u) & s.bits()}) {
      if (u < v) b.add_edge(index[u], index[v]);
    }
  }
  return b.build();
}

Graph delete_edge(const Graph& g, int u, int v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.adjacent(u, v)) {
    throw ArgumentError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return GraphBuilder(g).remove_edge(u, v).build();
}

Graph delete_vertex(const Graph& g, int v) {
  check_vertex(g, v);
  return induced_subgraph(g, g.vertices().without(v));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw ArgumentError("permutation size mismatch");
  Word seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || (seen & bit(p))) throw ArgumentError("not a permutation");
    seen |= bit(p);
  }
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return b.build();
}

}  // namespace toughlab
