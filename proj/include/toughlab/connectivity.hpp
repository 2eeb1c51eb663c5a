#pragma once

#include <compare>
#include <limits>
#include <string>
#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

// ---- bitset kernels over the vertices in `alive` ----

// Vertices of `alive` reachable from `start` (which must be alive).
Word reach(const Graph& g, Word alive, int start);
int count_components(const Graph& g, Word alive);
// Order 0 and 1 count as connected.
bool is_connected(const Graph& g);
// True when u and v lie in different components of g[alive].
bool separated(const Graph& g, Word alive, int u, int v);

// Components of g, each as a VertexSet, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

// A hop count, or infinity for vertices in different components.
class Hops {
 public:
  constexpr explicit Hops(int value) : value_(value) {}
  static constexpr Hops infinite() { return Hops(kInfinite, 0); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  int value() const;  // throws for infinity
  std::string to_string() const;

  constexpr auto operator<=>(const Hops& o) const {
    if (is_infinite() || o.is_infinite()) return is_infinite() <=> o.is_infinite();
    return value_ <=> o.value_;
  }
  constexpr bool operator==(const Hops&) const = default;

 private:
  static constexpr int kInfinite = -1;
  constexpr Hops(int value, int) : value_(value) {}
  int value_;
};

class DistanceTable {
 public:
  explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, Hops::infinite()) {}

  int order() const { return n_; }
  Hops at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, Hops h) { d_[static_cast<std::size_t>(u) * n_ + v] = h; }
  Hops eccentricity(int u) const;
  Hops diameter() const;  // 0 for graphs of order <= 1

 private:
  int n_;
  std::vector<Hops> d_;
};

DistanceTable distances(const Graph& g);
Hops distance(const Graph& g, int u, int v);
Hops diameter(const Graph& g);
// Diameter of the complement.
Hops co_diameter(const Graph& g);

// Maximum number of internally vertex-disjoint u-v paths; an edge uv counts
// as one path. Unit-capacity max-flow on the vertex-split network.
int local_connectivity(const Graph& g, int u, int v);

// kappa(K_n) = n - 1 (0 for the null graph), 0 when disconnected, otherwise
// the least local connectivity over non-adjacent pairs.
int connectivity(const Graph& g);

struct Matching {
  std::vector<Edge> pairs;  // (a-side vertex, b-side vertex)
  int size() const { return static_cast<int>(pairs.size()); }
};

// Maximum matching among the a-b edges of g (augmenting paths). a and b
// must be disjoint.
Matching max_bipartite_matching(const Graph& g, const VertexSet& a, const VertexSet& b);

struct Extension {
  Graph graph;
  int u;  // adjacent to exactly a
  int v;  // adjacent to exactly b
};

// Appends u (joined to all of a) and v (joined to all of b). (g, a, b) must be
// bipartite: a and b partition V(g) and every edge runs between them.
Extension uv_extension(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace toughlab
