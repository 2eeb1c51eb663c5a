#pragma once

#include <functional>
#include <vector>

#include "toughlab/canonical.hpp"
#include "toughlab/graph.hpp"

namespace toughlab {

// Order 10 alone has about twelve million classes; enumeration stops at 9.
inline constexpr int kMaxEnumerationOrder = 9;

// Isomorph-free generation by vertex augmentation with canonical-code
// deduplication. Levels are built on demand and cached, so asking for order 8
// after order 7 only extends the last level.
class GraphCatalog {
 public:
  GraphCatalog();

  // One representative (the canonical form) per isomorphism class of the
  // given order, in ascending canonical-code order.
  const std::vector<Graph>& level(int n);

 private:
  std::vector<std::vector<Graph>> levels_;
};

// Uses a process-wide catalog. Throws ArgumentError unless
// 0 <= n <= kMaxEnumerationOrder.
std::vector<Graph> enumerate_graphs(int n, bool connected_only = false);
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

}  // namespace toughlab
