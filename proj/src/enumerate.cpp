#include "toughlab/enumerate.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_set>

#include "toughlab/connectivity.hpp"
#include "toughlab/error.hpp"

namespace toughlab {

namespace {

void check_range(int n) {
  if (n < 0 || n > kMaxEnumerationOrder) {
    throw ArgumentError("enumeration order " + std::to_string(n) + " outside [0, " +
                        std::to_string(kMaxEnumerationOrder) + "]");
  }
}

}  // namespace

GraphCatalog::GraphCatalog() { levels_.push_back({Graph(0)}); }

const std::vector<Graph>& GraphCatalog::level(int n) {
  check_range(n);
  while (static_cast<int>(levels_.size()) <= n) {
    const int m = static_cast<int>(levels_.size());
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    for (const Graph& base : levels_.back()) {
      for (Word nbhd = 0; nbhd <= low_bits(m - 1); ++nbhd) {
        GraphBuilder b(m);
        for (const Edge& e : base.edges()) b.add_edge(e.u, e.v);
        for (int v : Bits{nbhd}) b.add_edge(v, m - 1);
        seen.insert(canonical_code(b.build()));
        if (m == 1) break;
      }
    }
    std::vector<CanonicalCode> codes(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
    std::vector<Graph> next;
    next.reserve(codes.size());
    for (const auto& c : codes) next.push_back(from_code(c));
    levels_.push_back(std::move(next));
  }
  return levels_[n];
}

std::vector<Graph> enumerate_graphs(int n, bool connected_only) {
  check_range(n);
  static GraphCatalog catalog;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  std::vector<Graph> out;
  for (const Graph& g : catalog.level(n)) {
    if (!connected_only || is_connected(g)) out.push_back(g);
  }
  return out;
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit) {
  for (const Graph& g : enumerate_graphs(n, connected_only)) visit(g);
}

}  // namespace toughlab
