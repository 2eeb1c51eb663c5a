#include "toughlab/mintough.hpp"

#include <stdexcept>

#include "toughlab/connectivity.hpp"
#include "toughlab/error.hpp"

namespace toughlab {

std::string to_string(MinToughStatus s) {
  switch (s) {
    case MinToughStatus::TriviallyMinTough: return "TriviallyMinTough";
    case MinToughStatus::NonTriviallyMinTough: return "NonTriviallyMinTough";
    case MinToughStatus::NotMinTough: return "NotMinTough";
  }
  return "?";
}

int ceil_twice(const Rational& t) { return static_cast<int>((t * Rational(2)).ceil()); }

namespace {

bool trivial(const Graph& g) { return g.is_complete() || g.is_edgeless(); }

struct Separator {
  Word set;
  int components;
};

std::vector<Separator> all_separators(const Graph& g) {
  std::vector<Separator> out;
  for_each_separator(g, [&](const VertexSet& s, int c) {
    out.push_back({s.bits(), c});
    return true;
  });
  return out;
}

EdgeWitness evaluate(const Graph& g, const Rational& t, const Edge& e, const std::vector<Separator>& seps) {
  EdgeWitness w;
  w.edge = e;
  w.local_connectivity = local_connectivity(g, e.u, e.v);
  w.cond1_holds = Rational(w.local_connectivity) < t * Rational(2) + Rational(1);

  const int n = g.order();
  const Graph cut = delete_edge(g, e.u, e.v);
  const Word ends = bit(e.u) | bit(e.v);
  for (const Separator& s : seps) {
    const int k = popcount(s.set);
    // c(G - S) <= n - k bounds every later separator as well.
    if (Rational(k) >= t * Rational(n - k + 1)) break;
    if (s.set & ends) continue;
    if (!(Rational(k) < t * Rational(s.components + 1))) continue;
    if (separated(cut, g.all() & ~s.set, e.u, e.v)) {
      w.cond2_holds = true;
      w.cond2_separator = VertexSet(n, s.set);
      break;
    }
  }
  return w;
}

}  // namespace

MinToughVerdict is_minimally_tough_by_definition(const Graph& g) {
  MinToughVerdict v;
  v.toughness = toughness(g);
  if (trivial(g)) {
    v.status = MinToughStatus::TriviallyMinTough;
    return v;
  }
  const Rational t = v.toughness.value();
  for (const Edge& e : g.edges()) {
    if (!has_separator_below(delete_edge(g, e.u, e.v), t)) {
      v.status = MinToughStatus::NotMinTough;
      v.failing_edge = e;
      return v;
    }
  }
  v.status = MinToughStatus::NonTriviallyMinTough;
  return v;
}

EdgeWitness evaluate_edge(const Graph& g, const Rational& t, const Edge& e) {
  if (!g.adjacent(e.u, e.v)) throw ArgumentError("no edge " + to_string(e));
  return evaluate(g, t, e, all_separators(g));
}

CriterionResult is_minimally_tough_by_criterion(const Graph& g) {
  CriterionResult r;
  r.verdict.toughness = toughness(g);
  if (trivial(g)) {
    r.verdict.status = MinToughStatus::TriviallyMinTough;
    return r;
  }
  const Rational t = r.verdict.toughness.value();
  const auto seps = all_separators(g);
  for (const Edge& e : g.edges()) {
    r.witnesses.push_back(evaluate(g, t, e, seps));
    if (!r.witnesses.back().satisfied() && !r.verdict.failing_edge) r.verdict.failing_edge = e;
  }
  r.verdict.status = r.verdict.failing_edge ? MinToughStatus::NotMinTough : MinToughStatus::NonTriviallyMinTough;
  return r;
}

std::vector<VertexSet> cond2_candidates(const Graph& g, const Edge& e) {
  if (!g.adjacent(e.u, e.v)) throw ArgumentError("no edge " + to_string(e));
  const Graph cut = delete_edge(g, e.u, e.v);
  const Word ends = bit(e.u) | bit(e.v);
  std::vector<VertexSet> out;
  for_each_separator(g, [&](const VertexSet& s, int) {
    if (!(s.bits() & ends) && separated(cut, g.all() & ~s.bits(), e.u, e.v)) out.push_back(s);
    return true;
  });
  return out;
}

std::vector<DominatingEdgeReport> dominating_edges(const Graph& g) {
  const DistanceTable co = distances(complement(g));
  std::vector<DominatingEdgeReport> out;
  for (const Edge& e : g.edges()) {
    DominatingEdgeReport r;
    r.edge = e;
    r.via_neighborhoods = (g.row(e.u) | g.row(e.v)) == g.all();
    bool meets_all = true;
    for_each_separator(g, [&](const VertexSet& s, int) {
      if (!s.contains(e.u) && !s.contains(e.v)) meets_all = false;
      return meets_all;
    });
    r.via_separators = meets_all;
    r.via_co_distance = co.at(e.u, e.v) >= Hops(3);
    if (r.via_neighborhoods != r.via_separators || r.via_neighborhoods != r.via_co_distance) {
      throw std::logic_error("dominating-edge characterizations disagree on " + to_string(e));
    }
    out.push_back(r);
  }
  return out;
}

std::optional<MinToughVerdict> check_2t_regular_shortcut(const Graph& g) {
  const ToughnessValue tau = toughness(g);
  if (tau.is_infinite() || !g.is_regular() || g.order() == 0) return std::nullopt;
  if (g.min_degree() != ceil_twice(tau.value())) return std::nullopt;
  MinToughVerdict v;
  v.toughness = tau;
  v.status = g.is_edgeless() ? MinToughStatus::TriviallyMinTough : MinToughStatus::NonTriviallyMinTough;
  return v;
}

bool kriesell_check(const Graph& g, const MinToughVerdict& verdict) {
  if (!verdict.minimally_tough() || verdict.toughness.is_infinite() || verdict.toughness.is_zero()) {
    throw PreconditionError("degree check needs a minimally tough graph with finite positive toughness");
  }
  const int target = ceil_twice(verdict.toughness.value());
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == target) return true;
  }
  return false;
}

bool kriesell_check(const Graph& g) { return kriesell_check(g, is_minimally_tough_by_definition(g)); }

VertexSet universal_vertices(const Graph& g) {
  Word w = 0;
  for (int v = 0; v < g.order(); ++v) {
    if ((g.row(v) | bit(v)) == g.all()) w |= bit(v);
  }
  return VertexSet(g.order(), w);
}

bool JoinConditionReport::applicable() const {
  return verdict.status == MinToughStatus::NonTriviallyMinTough && g1_holds_max_degree;
}

bool JoinConditionReport::consistent() const {
  return !applicable() || (g2_regular_at_ceiling && ceiling_identity);
}

JoinConditionReport check_join_condition(const Graph& g1, const Graph& g2) {
  JoinConditionReport r;
  r.joined = join(g1, g2);
  r.verdict = is_minimally_tough_by_definition(r.joined);
  r.t2 = toughness(g2);
  const int delta = r.joined.max_degree();
  for (int v = 0; v < g1.order(); ++v) {
    if (r.joined.degree(v) == delta) r.g1_holds_max_degree = true;
  }
  if (!r.t2.is_infinite()) {
    const int c2 = ceil_twice(r.t2.value());
    r.g2_regular_at_ceiling = g2.order() > 0 && g2.is_regular() && g2.min_degree() == c2;
    if (!r.verdict.toughness.is_infinite()) {
      r.ceiling_identity = ceil_twice(r.verdict.toughness.value()) == c2 + g1.order();
    }
  }
  return r;
}

std::optional<FamilySpec> classify_universal_vertex_graph(const Graph& g) {
  const MinToughVerdict v = is_minimally_tough_by_definition(g);
  const VertexSet hubs = universal_vertices(g);
  if (!v.minimally_tough() || hubs.empty() || v.toughness.is_infinite() || v.toughness.is_zero() ||
      v.toughness > Rational(3, 2)) {
    throw PreconditionError("expected a minimally tough graph with a universal vertex and 0 < tau <= 3/2");
  }
  const int n = g.order();
  const int hub = hubs.first();
  const Graph rim = delete_vertex(g, hub);
  if (rim.is_edgeless()) return FamilySpec{Family::Star, {n - 1}};
  if (n >= 5 && rim.is_regular() && rim.min_degree() == 2 && is_connected(rim)) {
    return FamilySpec{Family::Wheel, {n}};
  }
  return std::nullopt;
}

}  // namespace toughlab
