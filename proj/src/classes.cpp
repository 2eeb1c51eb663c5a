#include "toughlab/classes.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "toughlab/connectivity.hpp"
#include "toughlab/error.hpp"
#include "toughlab/family.hpp"

namespace toughlab {

namespace {

bool is_clique(const Graph& g, Word s) {
  for (int v : Bits{s}) {
    if ((s & ~bit(v) & ~g.row(v)) != 0) return false;
  }
  return true;
}

// Maximum cardinality search; returns vertices in visiting order.
std::vector<int> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  Word numbered = 0;
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v : Bits{g.all() & ~numbered}) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    order.push_back(best);
    numbered |= bit(best);
    for (int w : Bits{g.row(best) & ~numbered}) ++weight[w];
  }
  return order;
}

// b with two non-adjacent neighbors a, c joined by a path outside N[b]: the
// shortest such path closes an induced cycle through b.
std::vector<int> find_hole(const Graph& g) {
  const int n = g.order();
  for (int b = 0; b < n; ++b) {
    for (int a : g.neighbors(b)) {
      for (int c : g.neighbors(b)) {
        if (c <= a || g.adjacent(a, c)) continue;
        const Word allowed = (g.all() & ~(g.row(b) | bit(b))) | bit(a) | bit(c);
        std::vector<int> parent(n, -1);
        Word seen = bit(a);
        std::vector<int> queue{a};
        for (std::size_t i = 0; i < queue.size() && !(seen & bit(c)); ++i) {
          const int x = queue[i];
          for (int y : Bits{g.row(x) & allowed & ~seen}) {
            seen |= bit(y);
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (!(seen & bit(c))) continue;
        std::vector<int> path;
        for (int x = c; x != -1; x = parent[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        std::vector<int> hole{b};
        hole.insert(hole.end(), path.begin(), path.end());
        return hole;
      }
    }
  }
  return {};
}

bool induced_cycle_from(const Graph& g, int s, std::vector<int>& path, Word inner, int min_length) {
  const int last = path.back();
  const Word above = g.all() & ~low_bits(s + 1);
  Word cand = g.row(last) & above;
  for (int x : path) cand &= ~bit(x);
  for (int x : Bits{cand}) {
    if (g.row(x) & inner) continue;
    if (path.size() >= 2 && g.adjacent(x, s)) {
      if (static_cast<int>(path.size()) + 1 >= min_length) {
        path.push_back(x);
        return true;
      }
      continue;
    }
    const Word next_inner = path.size() >= 2 ? inner | bit(last) : inner;
    path.push_back(x);
    if (induced_cycle_from(g, s, path, next_inner, min_length)) return true;
    path.pop_back();
  }
  return false;
}

const Graph& pattern_p4() {
  static const Graph g = path_graph(4);
  return g;
}

const Graph& pattern_net() {
  static const Graph g = make_named("net");
  return g;
}

const Graph& pattern_conet() {
  static const Graph g = make_named("conet");
  return g;
}

struct ClassName {
  GraphClass cls;
  const char* name;
};

constexpr std::array<ClassName, 11> kClassNames{{
    {GraphClass::Chordal, "chordal"},
    {GraphClass::CoChordal, "co-chordal"},
    {GraphClass::WeaklyChordal, "weakly-chordal"},
    {GraphClass::P4Free, "p4-free"},
    {GraphClass::CompleteMultipartite, "complete-multipartite"},
    {GraphClass::NetFree, "net-free"},
    {GraphClass::CoNetFree, "co-net-free"},
    {GraphClass::Forest, "forest"},
    {GraphClass::CoForest, "co-forest"},
    {GraphClass::Split, "split"},
    {GraphClass::HereditaryNbhdHelly, "hcn-helly"},
}};

}  // namespace

ChordalityResult chordality(const Graph& g) {
  ChordalityResult r;
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  Word later = g.all();
  for (int v : order) {
    later &= ~bit(v);
    if (!is_clique(g, g.row(v) & later)) {
      r.hole = find_hole(g);
      if (r.hole.empty()) throw std::logic_error("elimination check failed but no hole was found");
      return r;
    }
  }
  r.chordal = true;
  r.elimination_order = std::move(order);
  return r;
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }
bool is_co_chordal(const Graph& g) { return is_chordal(complement(g)); }
bool is_forest(const Graph& g) { return g.size() == g.order() - count_components(g, g.all()); }
bool is_complement_of_forest(const Graph& g) { return is_forest(complement(g)); }
bool is_split(const Graph& g) { return is_chordal(g) && is_co_chordal(g); }

VertexSet simplicial_vertices(const Graph& g) {
  Word w = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (is_clique(g, g.row(v))) w |= bit(v);
  }
  return VertexSet(g.order(), w);
}

std::optional<VertexSet> contains_induced(const Graph& g, const Graph& pattern) {
  const int k = pattern.order();
  const int n = g.order();
  if (k > n) return std::nullopt;
  if (k == 0) return VertexSet::empty_of(n);

  // Pattern vertices in an order that keeps each one attached to earlier ones
  // where possible, starting from the highest degree.
  std::vector<int> order;
  Word placed = 0;
  while (static_cast<int>(order.size()) < k) {
    int best = -1;
    int best_links = -1;
    for (int v : Bits{pattern.all() & ~placed}) {
      const int links = popcount(pattern.row(v) & placed);
      if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }

  std::vector<Word> degree_ok(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < n; ++x) {
      if (g.degree(x) >= pattern.degree(order[i])) degree_ok[i] |= bit(x);
    }
  }

  std::vector<int> image(k, -1);
  Word used = 0;
  auto search = [&](auto&& self, int i) -> bool {
    if (i == k) return true;
    Word cand = degree_ok[i] & ~used;
    for (int j = 0; j < i; ++j) {
      cand &= pattern.adjacent(order[i], order[j]) ? g.row(image[j]) : ~g.row(image[j]);
    }
    for (int x : Bits{cand}) {
      image[i] = x;
      used |= bit(x);
      if (self(self, i + 1)) return true;
      used &= ~bit(x);
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return VertexSet(n, used);
}

bool is_P4_free(const Graph& g) { return !contains_induced(g, pattern_p4()); }
bool is_net_free(const Graph& g) { return !contains_induced(g, pattern_net()); }
bool is_co_net_free(const Graph& g) { return !contains_induced(g, pattern_conet()); }

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_length) {
  if (min_length < 3) throw ArgumentError("induced cycles have length at least 3");
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    if (induced_cycle_from(g, s, path, 0, min_length)) return path;
  }
  return std::nullopt;
}

bool is_weakly_chordal(const Graph& g) {
  return !find_induced_cycle(g, 5) && !find_induced_cycle(complement(g), 5);
}

bool is_hereditary_nbhd_helly(const Graph& g) {
  static const std::array<Graph, 3> cycles{cycle_graph(4), cycle_graph(5), cycle_graph(6)};
  for (const Graph& c : cycles) {
    if (contains_induced(g, c)) return false;
  }
  return is_co_net_free(g);
}

std::vector<int> MultipartiteParts::sizes() const {
  std::vector<int> out;
  for (const VertexSet& p : parts) out.push_back(p.size());
  return out;
}

std::optional<MultipartiteParts> is_complete_multipartite(const Graph& g) {
  MultipartiteParts r;
  for (const VertexSet& part : components(complement(g))) {
    for (int v : part) {
      if (g.row(v) & part.bits()) return std::nullopt;
    }
    r.parts.push_back(part);
  }
  std::stable_sort(r.parts.begin(), r.parts.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  return r;
}

std::optional<CographPartition> cograph_partition(const Graph& g) {
  if (g.order() < 2 || !is_connected(g) || !is_P4_free(g)) {
    throw PreconditionError("cograph partition needs a connected P4-free graph on at least 2 vertices");
  }
  CographPartition r;
  for (const VertexSet& part : components(complement(g))) {
    if (part.size() > 1 && count_components(g, part.bits()) < 2) return std::nullopt;
    r.parts.push_back(part);
  }
  return r;
}

std::optional<std::pair<int, int>> simplicial_pair_at_distance(const Graph& h, int d) {
  const VertexSet simp = simplicial_vertices(h);
  const DistanceTable dist = distances(h);
  for (int u : simp) {
    for (int w : simp) {
      if (w > u && dist.at(u, w) == Hops(d)) return std::pair{u, w};
    }
  }
  return std::nullopt;
}

std::optional<SimplicialPairDecomposition> simplicial_pair_decomposition(const Graph& g) {
  const Graph h = complement(g);
  if (!is_chordal(h)) throw PreconditionError("graph is not co-chordal");
  const Hops d = diameter(h);
  if (d.is_infinite() || d < Hops(3)) return std::nullopt;
  const auto pair = simplicial_pair_at_distance(h, d.value());
  if (!pair) throw std::logic_error("chordal complement has no simplicial pair at its diameter");
  SimplicialPairDecomposition r;
  r.u = pair->first;
  r.w = pair->second;
  r.co_diameter = d.value();
  r.U = h.neighbors(r.u);
  r.W = h.neighbors(r.w);
  r.X = (r.U | r.W).with(r.u).with(r.w).complement();
  r.matching = max_bipartite_matching(g, r.U, r.W).size();
  return r;
}

const std::vector<GraphClass>& all_graph_classes() {
  static const std::vector<GraphClass> all = [] {
    std::vector<GraphClass> v;
    for (const auto& c : kClassNames) v.push_back(c.cls);
    return v;
  }();
  return all;
}

std::string to_string(GraphClass c) {
  for (const auto& e : kClassNames) {
    if (e.cls == c) return e.name;
  }
  return "?";
}

GraphClass parse_graph_class(std::string_view name) {
  for (const auto& e : kClassNames) {
    if (name == e.name) return e.cls;
  }
  throw ArgumentError("unknown graph class '" + std::string(name) + "'");
}

bool in_class(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::Chordal: return is_chordal(g);
    case GraphClass::CoChordal: return is_co_chordal(g);
    case GraphClass::WeaklyChordal: return is_weakly_chordal(g);
    case GraphClass::P4Free: return is_P4_free(g);
    case GraphClass::CompleteMultipartite: return is_complete_multipartite(g).has_value();
    case GraphClass::NetFree: return is_net_free(g);
    case GraphClass::CoNetFree: return is_co_net_free(g);
    case GraphClass::Forest: return is_forest(g);
    case GraphClass::CoForest: return is_complement_of_forest(g);
    case GraphClass::Split: return is_split(g);
    case GraphClass::HereditaryNbhdHelly: return is_hereditary_nbhd_helly(g);
  }
  return false;
}

}  // namespace toughlab
