#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "toughlab/graph.hpp"

namespace toughlab {

// Largest order supported by canonical_code and enumerate_graphs.
inline constexpr int kMaxCanonicalOrder = 10;

// Identifies an isomorphism class: the order plus the upper-triangle
// adjacency bits of the canonically labeled graph, first pair most significant.
class CanonicalCode {
 public:
  CanonicalCode() = default;
  CanonicalCode(int order, std::uint64_t bits) : order_(order), bits_(bits) {}

  int order() const { return order_; }
  std::uint64_t bits() const { return bits_; }
  // The code as a byte string: graph6 of the canonical labeling.
  std::string bytes() const;

  auto operator<=>(const CanonicalCode&) const = default;

 private:
  int order_ = 0;
  std::uint64_t bits_ = 0;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits() * 31 + static_cast<std::uint64_t>(c.order()));
  }
};

// Throws ArgumentError above kMaxCanonicalOrder.
CanonicalCode canonical_code(const Graph& g);
// The representative of g's isomorphism class whose code is canonical_code(g).
Graph canonical_form(const Graph& g);
Graph from_code(const CanonicalCode& code);

}  // namespace toughlab
