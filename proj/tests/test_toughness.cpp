#include <functional>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "support.hpp"
#include "toughlab/enumerate.hpp"
#include "toughlab/error.hpp"
#include "toughlab/family.hpp"
#include "toughlab/toughness.hpp"

using namespace toughlab;

namespace {

ToughnessValue from_oracle(const Graph& g) {
  const auto t = oracle::toughness(g);
  return t ? ToughnessValue::finite(*t) : ToughnessValue::infinite();
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 5).den() == 1);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(4).ceil() == 4);
  CHECK(Rational(5, 3).to_string() == "5/3");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), OverflowError);
}

TEST_CASE("toughness value ordering and text") {
  CHECK(ToughnessValue::infinite() > ToughnessValue::finite(Rational(1000)));
  CHECK(ToughnessValue::infinite().to_string() == "inf");
  CHECK(ToughnessValue::finite(Rational(2, 3)).to_string() == "2/3");
  CHECK(ToughnessValue::parse("inf").is_infinite());
  CHECK(ToughnessValue::parse("3/2") == Rational(3, 2));
  CHECK_THROWS_AS(ToughnessValue::infinite().value(), PreconditionError);
}

TEST_CASE("toughness of small named graphs") {
  CHECK(toughness(Graph(0)).is_infinite());
  CHECK(toughness(Graph(1)).is_infinite());
  CHECK(toughness(complete_graph(6)).is_infinite());
  CHECK(toughness(Graph(2)).is_zero());
  CHECK(toughness(disjoint_union(cycle_graph(4), Graph(1))).is_zero());
  CHECK(toughness(path_graph(4)) == Rational(1, 2));
  CHECK(toughness(cycle_graph(7)) == Rational(1));
  CHECK(toughness(make_named("K:2,3")) == Rational(2, 3));
  CHECK(toughness(make_named("net")) == Rational(1, 2));
  CHECK(toughness(star_graph(5)) == Rational(1, 5));
  CHECK(toughness(double_star(2, 4)) == Rational(1, 5));
}

TEST_CASE("toughness agrees with the exhaustive oracle") {
  for (int n = 0; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      CHECK(toughness(g) == from_oracle(g));
    }
  }
}

TEST_CASE("toughness on random graphs of order 10") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing_support::random_graph(rng, 10, 0.3 + 0.05 * (trial % 8));
    CHECK(toughness(g) == from_oracle(g));
  }
}

TEST_CASE("separators and witnesses") {
  const Graph p4 = path_graph(4);
  const auto seps = separators(p4);
  CHECK(seps.front() == VertexSet::of(4, {1}));
  for (std::size_t i = 1; i < seps.size(); ++i) CHECK(seps[i - 1] < seps[i]);
  const auto ws = tough_separators(p4);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].separator == VertexSet::of(4, {1}));
  CHECK(ws[0].components_after == 2);
  CHECK(ws[0].ratio == Rational(1, 2));
  CHECK(ws[1].separator == VertexSet::of(4, {2}));
  CHECK_THROWS_AS(tough_separators(complete_graph(3)), PreconditionError);

  const auto disconnected = separators(Graph(2));
  CHECK(disconnected.front().empty());

  CHECK(is_t_tough(cycle_graph(5), Rational(1)));
  CHECK_FALSE(is_t_tough(cycle_graph(5), Rational(3, 2)));
  CHECK(has_separator_below(path_graph(4), Rational(2, 3)));
  CHECK_FALSE(has_separator_below(path_graph(4), Rational(1, 2)));
}

TEST_CASE("closed form for complete multipartite graphs") {
  const std::vector<int> ones{1, 1, 1};
  CHECK(toughness_complete_multipartite(ones).is_infinite());
  const std::vector<int> single{4};
  CHECK(toughness_complete_multipartite(single).is_zero());
  CHECK_THROWS_AS(toughness_complete_multipartite(std::vector<int>{}), ArgumentError);
  CHECK_THROWS_AS(toughness_complete_multipartite(std::vector<int>{3, 1}), ArgumentError);

  // Every ascending partition with total at most 9.
  std::vector<int> parts;
  std::function<void(int, int)> grow = [&](int remaining, int min_part) {
    if (!parts.empty()) {
      const Graph g = complete_multipartite(parts);
      CHECK(toughness_complete_multipartite(parts) == toughness(g));
    }
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      grow(remaining - p, p);
      parts.pop_back();
    }
  };
  grow(9, 1);
}

TEST_CASE("closed form for trees") {
  CHECK(toughness_tree(path_graph(5)) == Rational(1, 2));
  CHECK(toughness_tree(star_graph(4)) == Rational(1, 4));
  CHECK_THROWS_AS(toughness_tree(complete_graph(2)), PreconditionError);
  CHECK_THROWS_AS(toughness_tree(cycle_graph(4)), PreconditionError);
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      if (!is_tree(g)) continue;
      CHECK(toughness_tree(g) == toughness(g));
    }
  }
}
