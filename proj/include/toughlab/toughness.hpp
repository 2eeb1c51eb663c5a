#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "toughlab/graph.hpp"
#include "toughlab/rational.hpp"

namespace toughlab {

// tau(G): a finite non-negative rational, or infinity for complete graphs.
class ToughnessValue {
 public:
  static ToughnessValue infinite() { return ToughnessValue(true, Rational(0)); }
  static ToughnessValue finite(Rational r) { return ToughnessValue(false, r); }

  bool is_infinite() const { return infinite_; }
  bool is_zero() const { return !infinite_ && value_ == Rational(0); }
  // Throws PreconditionError for infinity.
  const Rational& value() const;

  // "inf", "0", "2", "2/3".
  std::string to_string() const;
  static ToughnessValue parse(const std::string& text);

  // Infinity is the maximum.
  std::strong_ordering operator<=>(const ToughnessValue& o) const;
  bool operator==(const ToughnessValue& o) const { return (*this <=> o) == 0; }
  std::strong_ordering operator<=>(const Rational& r) const { return *this <=> finite(r); }
  bool operator==(const Rational& r) const { return *this == finite(r); }

 private:
  ToughnessValue(bool inf, Rational r) : infinite_(inf), value_(r) {}

  bool infinite_;
  Rational value_;
};

struct ToughWitness {
  VertexSet separator;
  int components_after = 0;
  Rational ratio;
};

// Calls visit(S, c(G - S)) for every S with c(G - S) >= 2, ordered by size and
// then by bit pattern; visit returns false to stop.
void for_each_separator(const Graph& g, const std::function<bool(const VertexSet&, int)>& visit);
std::vector<VertexSet> separators(const Graph& g);

// Minimum of |S| / c(G - S) over all separators (exact); infinity for
// complete graphs, including orders 0 and 1.
ToughnessValue toughness(const Graph& g);

// True when some separator has |S| / c(G - S) < t, i.e. tau(G) < t.
bool has_separator_below(const Graph& g, const Rational& t);

// Every separator attaining tau(G), ordered by (size, bits). Throws
// PreconditionError for complete graphs.
std::vector<ToughWitness> tough_separators(const Graph& g);

// t <= tau(G).
bool is_t_tough(const Graph& g, const Rational& t);

// Closed form for K_{n_1,...,n_k}: infinity when every part has size 1, zero
// for one part of size > 1, otherwise n / n_k - 1. parts must be ascending.
ToughnessValue toughness_complete_multipartite(std::span<const int> parts);

// 1 / max degree for a tree on at least 3 vertices; throws PreconditionError
// otherwise.
ToughnessValue toughness_tree(const Graph& g);

bool is_tree(const Graph& g);

}  // namespace toughlab
