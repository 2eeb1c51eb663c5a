#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toughlab/graph.hpp"

namespace toughlab {

struct ChordalityResult {
  bool chordal = false;
  // Perfect elimination ordering when chordal: each vertex's later
  // neighbors form a clique.
  std::vector<int> elimination_order;
  // An induced cycle of length >= 4, in cyclic order, when not chordal.
  std::vector<int> hole;
};

ChordalityResult chordality(const Graph& g);
bool is_chordal(const Graph& g);
bool is_co_chordal(const Graph& g);
bool is_forest(const Graph& g);
bool is_complement_of_forest(const Graph& g);
// Chordal and co-chordal.
bool is_split(const Graph& g);

VertexSet simplicial_vertices(const Graph& g);

// Vertices of g inducing a copy of pattern, or absent.
std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern);

bool is_P4_free(const Graph& g);
bool is_net_free(const Graph& g);
bool is_co_net_free(const Graph& g);

// An induced cycle of length at least min_length (>= 3), in cyclic order.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_length);

// No induced cycle of length >= 5 in g or its complement.
bool is_weakly_chordal(const Graph& g);

// No induced C4, C5, C6 or co-net.
bool is_hereditary_nbhd_helly(const Graph& g);

struct MultipartiteParts {
  std::vector<VertexSet> parts;  // ascending size, ties by least vertex
  std::vector<int> sizes() const;
};

std::optional<MultipartiteParts> is_complete_multipartite(const Graph& g);

struct CographPartition {
  // Each part is a singleton or induces a disconnected subgraph, and every
  // pair of vertices in different parts is adjacent. Ordered by least vertex.
  std::vector<VertexSet> parts;
};

// Components of the complement, checked against the partition conditions.
// Throws PreconditionError unless g is connected, P4-free and of order >= 2.
std::optional<CographPartition> cograph_partition(const Graph& g);

// Least pair (u, w) of simplicial vertices at distance d, or absent.
std::optional<std::pair<int, int>> simplicial_pair_at_distance(const Graph& h, int d);

struct SimplicialPairDecomposition {
  int u = 0;
  int w = 0;
  int co_diameter = 0;
  VertexSet U;  // neighbors of u in the complement
  VertexSet W;  // neighbors of w in the complement
  VertexSet X;  // everything else
  int matching = 0;  // maximum matching between U and W in g

  // |X| + m + 1.
  int predicted_local_connectivity() const { return X.size() + matching + 1; }
};

// Absent when the co-diameter is infinite or below 3. Throws
// PreconditionError for graphs that are not co-chordal.
std::optional<SimplicialPairDecomposition> simplicial_pair_decomposition(const Graph& g);

enum class GraphClass {
  Chordal,
  CoChordal,
  WeaklyChordal,
  P4Free,
  CompleteMultipartite,
  NetFree,
  CoNetFree,
  Forest,
  CoForest,
  Split,
  HereditaryNbhdHelly,
};

const std::vector<GraphClass>& all_graph_classes();
std::string to_string(GraphClass c);
// Throws ArgumentError for unknown names.
GraphClass parse_graph_class(std::string_view name);
bool in_class(const Graph& g, GraphClass c);

}  // namespace toughlab
