#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toughlab/family.hpp"
#include "toughlab/graph.hpp"
#include "toughlab/toughness.hpp"

namespace toughlab {

enum class MinToughStatus { TriviallyMinTough, NonTriviallyMinTough, NotMinTough };

std::string to_string(MinToughStatus s);

struct MinToughVerdict {
  MinToughStatus status = MinToughStatus::NotMinTough;
  ToughnessValue toughness = ToughnessValue::infinite();
  std::optional<Edge> failing_edge;  // set exactly when NotMinTough

  bool minimally_tough() const { return status != MinToughStatus::NotMinTough; }
  bool operator==(const MinToughVerdict&) const = default;
};

struct EdgeWitness {
  Edge edge;
  int local_connectivity = 0;  // kappa_G(u, v)
  bool cond1_holds = false;    // kappa_G(u, v) < 2t + 1
  bool cond2_holds = false;
  // Least separator S of G (by size, then bits) avoiding u and v, separating
  // u from v in G - uv, with |S| < t (c(G - S) + 1).
  std::optional<VertexSet> cond2_separator;

  bool satisfied() const { return cond1_holds || cond2_holds; }
};

struct CriterionResult {
  MinToughVerdict verdict;
  std::vector<EdgeWitness> witnesses;  // one per edge, lexicographic; empty for trivial graphs
};

// tau(G - e) < tau(G) for every edge. The failing edge is the
// lexicographically least edge whose deletion keeps the toughness.
MinToughVerdict is_minimally_tough_by_definition(const Graph& g);

// Edge-wise criterion: every edge uv must satisfy kappa_G(u, v) < 2t + 1 or
// have a separator S as described in EdgeWitness. Complete and edgeless graphs
// come back trivially minimally tough without witnesses.
CriterionResult is_minimally_tough_by_criterion(const Graph& g);

// Condition evaluation for one edge with t = tau(G) supplied by the caller.
EdgeWitness evaluate_edge(const Graph& g, const Rational& t, const Edge& e);

// All separators S of G with S n {u, v} empty that separate u from v in
// G - uv, ordered by size then bits.
std::vector<VertexSet> cond2_candidates(const Graph& g, const Edge& e);

struct DominatingEdgeReport {
  Edge edge;
  bool via_neighborhoods = false;  // N(u) u N(v) = V
  bool via_separators = false;     // every separator of G meets {u, v}
  bool via_co_distance = false;    // d in the complement is at least 3

  bool dominating() const { return via_neighborhoods; }
};

// One report per edge; the three routes are computed independently and a
// std::logic_error is thrown if they ever disagree.
std::vector<DominatingEdgeReport> dominating_edges(const Graph& g);

// Verdict from regularity alone when G is ceil(2 tau)-regular; absent
// otherwise, including for complete graphs.
std::optional<MinToughVerdict> check_2t_regular_shortcut(const Graph& g);

// Whether G has a vertex of degree ceil(2t). Throws PreconditionError unless
// G is minimally tough with finite positive toughness.
bool kriesell_check(const Graph& g);
bool kriesell_check(const Graph& g, const MinToughVerdict& verdict);

VertexSet universal_vertices(const Graph& g);

struct JoinConditionReport {
  Graph joined;
  MinToughVerdict verdict;               // for g1 * g2
  ToughnessValue t2 = ToughnessValue::infinite();  // tau(g2)
  bool g1_holds_max_degree = false;
  bool g2_regular_at_ceiling = false;    // g2 is ceil(2 t2)-regular
  bool ceiling_identity = false;         // ceil(2t) = ceil(2 t2) + |V(g1)|

  // G non-trivially minimally tough and g1 holds a vertex of maximum degree.
  bool applicable() const;
  // Not applicable, or both conclusions hold.
  bool consistent() const;
};

JoinConditionReport check_join_condition(const Graph& g1, const Graph& g2);

// Star or wheel tag for a minimally tough graph with a universal vertex and
// 0 < tau <= 3/2. Absent when the graph is neither, which would contradict
// the characterization. Throws PreconditionError outside that domain.
std::optional<FamilySpec> classify_universal_vertex_graph(const Graph& g);

// ceil(2t) for finite t.
int ceil_twice(const Rational& t);

}  // namespace toughlab
