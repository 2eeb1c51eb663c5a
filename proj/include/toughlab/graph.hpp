#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "toughlab/vertex_set.hpp"

namespace toughlab {

struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

// Immutable simple undirected graph on vertices 0..n-1 with one adjacency
// word per vertex. adj[v] never contains v, adjacency is symmetric and bits
// at positions >= n are clear.
class Graph {
 public:
  Graph() = default;  // the null graph
  explicit Graph(int n);  // edgeless graph of order n

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return n_; }
  int size() const;  // number of edges

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(n_, adj_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(n_, adj_[v] | bit(v)); }
  Word row(int v) const { return adj_[v]; }
  Word all() const { return low_bits(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  int min_degree() const;
  int max_degree() const;
  std::vector<int> degrees() const;
  bool is_regular() const { return n_ == 0 || min_degree() == max_degree(); }

  bool is_complete() const;  // includes order 0 and 1
  bool is_edgeless() const;

  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& o) const;

 private:
  friend class GraphBuilder;

  int n_ = 0;
  std::array<Word, kMaxVertices> adj_{};
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  int order() const { return g_.n_; }
  Graph build() const { return g_; }

 private:
  Graph g_;
};

Graph complement(const Graph& g);
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(const Graph& g1, const Graph& g2);
// Vertices are renumbered in increasing order of the members of s.
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertex(const Graph& g, int v);
// Result has an edge (perm[u], perm[v]) for every edge (u, v) of g.
Graph relabel(const Graph& g, std::span<const int> perm);

}  // namespace toughlab
