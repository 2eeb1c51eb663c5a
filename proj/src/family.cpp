#include "toughlab/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "toughlab/error.hpp"

namespace toughlab {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;  // -1: one or more parameters
};

constexpr FamilyInfo kFamilies[] = {
    {Family::Complete, "complete", 1},
    {Family::Path, "path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Star, "star", 1},
    {Family::DoubleStar, "doublestar", 2},
    {Family::TripleStar, "triplestar", 3},
    {Family::CompleteMultipartite, "K", -1},
    {Family::Turan, "turan", 2},
    {Family::Wheel, "wheel", 1},
    {Family::Net, "net", 0},
    {Family::CoNet, "conet", 0},
};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw ArgumentError("unknown family");
}

void require(bool ok, const FamilySpec& spec, const char* why) {
  if (!ok) throw ArgumentError("invalid family spec " + to_string(spec) + ": " + why);
}

long long spec_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Complete:
    case Family::Path:
    case Family::Cycle:
    case Family::Wheel:
      return p[0];
    case Family::Star:
      return 1LL + p[0];
    case Family::DoubleStar:
      return 2LL + p[0] + p[1];
    case Family::TripleStar:
      return 3LL + p[0] + p[1] + p[2];
    case Family::CompleteMultipartite:
      return std::accumulate(p.begin(), p.end(), 0LL);
    case Family::Turan:
      return p[0];
    case Family::Net:
    case Family::CoNet:
      return 6;
  }
  return 0;
}

Graph build_unchecked(const FamilySpec& spec);

}  // namespace

std::string to_string(const FamilySpec& spec) {
  std::string s(info(spec.family).name);
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    s += (i == 0 ? ':' : ',');
    s += std::to_string(spec.params[i]);
  }
  return s;
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  FamilySpec spec;
  bool found = false;
  for (const auto& fi : kFamilies) {
    if (fi.name == name) {
      spec.family = fi.family;
      found = true;
    }
  }
  if (!found) throw ParseError("unknown family '" + std::string(name) + "'", 0);
  if (colon != std::string_view::npos) {
    std::size_t pos = colon + 1;
    while (true) {
      int value = 0;
      const char* begin = text.data() + pos;
      const char* end = text.data() + text.size();
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr == begin) throw ParseError("expected integer parameter", pos);
      spec.params.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
      if (pos == text.size()) break;
      if (text[pos] != ',') throw ParseError("expected ',' between parameters", pos);
      ++pos;
    }
  }
  validate(spec);
  return spec;
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  const int arity = info(spec.family).arity;
  if (arity >= 0) {
    require(static_cast<int>(p.size()) == arity, spec, "wrong number of parameters");
  } else {
    require(!p.empty(), spec, "at least one part required");
  }
  switch (spec.family) {
    case Family::Complete:
      require(p[0] >= 0, spec, "n >= 0");
      break;
    case Family::Path:
      require(p[0] >= 1, spec, "n >= 1");
      break;
    case Family::Cycle:
      require(p[0] >= 3, spec, "n >= 3");
      break;
    case Family::Star:
      require(p[0] >= 1, spec, "l >= 1");
      break;
    case Family::DoubleStar:
    case Family::TripleStar:
      require(std::all_of(p.begin(), p.end(), [](int x) { return x >= 1; }), spec,
              "leaf counts >= 1");
      break;
    case Family::CompleteMultipartite:
      require(std::all_of(p.begin(), p.end(), [](int x) { return x >= 1; }), spec, "parts >= 1");
      require(std::is_sorted(p.begin(), p.end()), spec, "parts must be ascending");
      break;
    case Family::Turan:
      require(p[1] >= 1 && p[0] >= p[1], spec, "n >= k >= 1");
      break;
    case Family::Wheel:
      require(p[0] >= 5, spec, "l >= 5");
      break;
    case Family::Net:
    case Family::CoNet:
      break;
  }
  require(spec_order(spec) <= kMaxVertices, spec, "order exceeds vertex cap");
}

Graph make_named(const FamilySpec& spec) {
  validate(spec);
  return build_unchecked(spec);
}

Graph make_named(std::string_view text) { return make_named(parse_family_spec(text)); }

std::vector<int> turan_parts(int n, int k) {
  std::vector<int> parts(k, n / k);
  for (int i = 0; i < n % k; ++i) parts[k - 1 - i] += 1;
  return parts;
}

Graph complete_graph(int n) { return make_named({Family::Complete, {n}}); }
Graph path_graph(int n) { return make_named({Family::Path, {n}}); }
Graph cycle_graph(int n) { return make_named({Family::Cycle, {n}}); }
Graph star_graph(int leaves) { return make_named({Family::Star, {leaves}}); }
Graph double_star(int a, int b) { return make_named({Family::DoubleStar, {a, b}}); }
Graph triple_star(int a, int b, int c) { return make_named({Family::TripleStar, {a, b, c}}); }
Graph complete_multipartite(const std::vector<int>& parts) {
  return make_named({Family::CompleteMultipartite, parts});
}
Graph turan_graph(int n, int k) { return make_named({Family::Turan, {n, k}}); }
Graph wheel_graph(int l) { return make_named({Family::Wheel, {l}}); }

namespace {

// Centers are 0..centers.size()-1; leaves follow, grouped by center.
Graph stars_on_clique(const std::vector<int>& leaves) {
  const int centers = static_cast<int>(leaves.size());
  GraphBuilder b(centers + std::accumulate(leaves.begin(), leaves.end(), 0));
  for (int i = 0; i < centers; ++i) {
    for (int j = i + 1; j < centers; ++j) b.add_edge(i, j);
  }
  int next = centers;
  for (int i = 0; i < centers; ++i) {
    for (int k = 0; k < leaves[i]; ++k) b.add_edge(i, next++);
  }
  return b.build();
}

Graph multipartite(const std::vector<int>& parts) {
  const int n = std::accumulate(parts.begin(), parts.end(), 0);
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[u] != part_of[v]) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph build_unchecked(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::Complete:
      return complement(Graph(p[0]));
    case Family::Path: {
      GraphBuilder b(p[0]);
      for (int v = 0; v + 1 < p[0]; ++v) b.add_edge(v, v + 1);
      return b.build();
    }
    case Family::Cycle: {
      GraphBuilder b(p[0]);
      for (int v = 0; v < p[0]; ++v) b.add_edge(v, (v + 1) % p[0]);
      return b.build();
    }
    case Family::Star:
      return join(Graph(1), Graph(p[0]));
    case Family::DoubleStar:
      return stars_on_clique({p[0], p[1]});
    case Family::TripleStar:
      return stars_on_clique({p[0], p[1], p[2]});
    case Family::CompleteMultipartite:
      return multipartite(p);
    case Family::Turan:
      return multipartite(turan_parts(p[0], p[1]));
    case Family::Wheel:
      return join(Graph(1), build_unchecked({Family::Cycle, {p[0] - 1}}));
    case Family::Net:
      return stars_on_clique({1, 1, 1});
    case Family::CoNet:
      return complement(stars_on_clique({1, 1, 1}));
  }
  throw ArgumentError("unknown family");
}

}  // namespace

}  // namespace toughlab
