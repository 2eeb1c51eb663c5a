#include "toughlab/toughness.hpp"

#include <algorithm>
#include <numeric>

#include "toughlab/connectivity.hpp"
#include "toughlab/error.hpp"

namespace toughlab {

const Rational& ToughnessValue::value() const {
  if (infinite_) throw PreconditionError("toughness is infinite");
  return value_;
}

std::string ToughnessValue::to_string() const { return infinite_ ? "inf" : value_.to_string(); }

ToughnessValue ToughnessValue::parse(const std::string& text) {
  if (text == "inf") return infinite();
  return finite(Rational::parse(text));
}

std::strong_ordering ToughnessValue::operator<=>(const ToughnessValue& o) const {
  if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
  return value_ <=> o.value_;
}

namespace {

// Subsets of `universe` with exactly k members in ascending numeric order
// (Gosper's hack over the compressed index space).
template <typename Fn>
bool for_each_subset_of_size(Word universe, int k, Fn&& fn) {
  std::vector<int> members(Bits{universe}.begin(), Bits{universe}.end());
  const int m = static_cast<int>(members.size());
  if (k > m) return true;
  auto expand = [&](std::uint64_t idx) {
    Word w = 0;
    for (int i = 0; i < m; ++i) {
      if ((idx >> i) & 1U) w |= bit(members[i]);
    }
    return w;
  };
  if (k == 0) return fn(Word{0});
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t idx = (std::uint64_t{1} << k) - 1;
  while (idx < limit) {
    if (!fn(expand(idx))) return false;
    const std::uint64_t c = idx & (~idx + 1);
    const std::uint64_t r = idx + c;
    idx = (((r ^ idx) >> 2) / c) | r;
  }
  return true;
}

// Lower bound on |S| / c(G - S) for any S of size k: c(G - S) <= n - k.
bool cannot_beat(int k, int n, const Rational& best) { return Rational(k) >= best * Rational(n - k); }

}  // namespace

void for_each_separator(const Graph& g, const std::function<bool(const VertexSet&, int)>& visit) {
  const int n = g.order();
  const Word all = g.all();
  for (int k = 0; k <= n; ++k) {
    const bool more = for_each_subset_of_size(all, k, [&](Word s) {
      const int c = count_components(g, all & ~s);
      if (c >= 2) return visit(VertexSet(n, s), c);
      return true;
    });
    if (!more) return;
  }
}

std::vector<VertexSet> separators(const Graph& g) {
  std::vector<VertexSet> out;
  for_each_separator(g, [&](const VertexSet& s, int) {
    out.push_back(s);
    return true;
  });
  return out;
}

ToughnessValue toughness(const Graph& g) {
  if (g.is_complete()) return ToughnessValue::infinite();
  const int n = g.order();
  const Word all = g.all();
  // The non-complete graph has a separator of size n - 2, so best is set
  // before the loop can end.
  bool have = false;
  Rational best;
  for (int k = 0; k <= n - 2; ++k) {
    if (have && cannot_beat(k, n, best)) break;
    for_each_subset_of_size(all, k, [&](Word s) {
      const int c = count_components(g, all & ~s);
      if (c >= 2) {
        const Rational r(k, c);
        if (!have || r < best) {
          best = r;
          have = true;
        }
      }
      return true;
    });
  }
  return ToughnessValue::finite(best);
}

bool has_separator_below(const Graph& g, const Rational& t) {
  const int n = g.order();
  const Word all = g.all();
  bool found = false;
  for (int k = 0; k <= n - 2 && !found; ++k) {
    if (cannot_beat(k, n, t)) break;
    for_each_subset_of_size(all, k, [&](Word s) {
      const int c = count_components(g, all & ~s);
      if (c >= 2 && Rational(k) < t * Rational(c)) found = true;
      return !found;
    });
  }
  return found;
}

std::vector<ToughWitness> tough_separators(const Graph& g) {
  if (g.is_complete()) throw PreconditionError("complete graphs have no separators");
  const Rational tau = toughness(g).value();
  std::vector<ToughWitness> out;
  for_each_separator(g, [&](const VertexSet& s, int c) {
    const Rational r(s.size(), c);
    if (r == tau) out.push_back({s, c, r});
    return true;
  });
  return out;
}

bool is_t_tough(const Graph& g, const Rational& t) { return toughness(g) >= t; }

ToughnessValue toughness_complete_multipartite(std::span<const int> parts) {
  if (parts.empty()) throw ArgumentError("complete multipartite graph needs at least one part");
  if (!std::is_sorted(parts.begin(), parts.end()) || parts.front() < 1) {
    throw ArgumentError("part sizes must be positive and ascending");
  }
  const int largest = parts.back();
  if (largest == 1) return ToughnessValue::infinite();
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  return ToughnessValue::finite(Rational(n, largest) - Rational(1));
}

bool is_tree(const Graph& g) { return g.order() >= 1 && g.size() == g.order() - 1 && count_components(g, g.all()) == 1; }

ToughnessValue toughness_tree(const Graph& g) {
  if (!is_tree(g)) throw PreconditionError("graph is not a tree");
  if (g.is_complete()) throw PreconditionError("tree is complete (order <= 2)");
  return ToughnessValue::finite(Rational(1, g.max_degree()));
}

}  // namespace toughlab
