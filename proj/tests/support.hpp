#pragma once

#include <random>

#include "toughlab/graph.hpp"

namespace testing_support {

// Erdos-Renyi G(n, p) with a caller-owned generator.
inline toughlab::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  toughlab::GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

}  // namespace testing_support
