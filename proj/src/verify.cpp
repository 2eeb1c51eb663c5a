#include "toughlab/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "toughlab/canonical.hpp"
#include "toughlab/classes.hpp"
#include "toughlab/connectivity.hpp"
#include "toughlab/enumerate.hpp"
#include "toughlab/error.hpp"
#include "toughlab/graph6.hpp"
#include "toughlab/mintough.hpp"
#include "toughlab/parallel.hpp"

namespace toughlab {

namespace {

using CodeSet = std::unordered_set<CanonicalCode, CanonicalCodeHash>;

struct Instance {
  FamilySpec spec;
  CanonicalCode code;
};

void ascending_partitions(int remaining, int min_part, std::vector<int>& parts,
                          const std::function<void(const std::vector<int>&)>& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    parts.push_back(p);
    ascending_partitions(remaining - p, p, parts, visit);
    parts.pop_back();
  }
}

// Family instances of order n in identification precedence.
std::vector<Instance> build_instances(int n) {
  std::vector<FamilySpec> specs;
  if (n >= 2) specs.push_back({Family::Star, {n - 1}});
  if (n == 5) specs.push_back({Family::CompleteMultipartite, {2, 3}});
  if (n == 4) specs.push_back({Family::Path, {4}});
  for (int a = 1; 2 * a + 2 <= n; ++a) specs.push_back({Family::DoubleStar, {a, n - 2 - a}});
  for (int a = 1; 3 * a + 3 <= n; ++a) {
    for (int b = a; a + 2 * b + 3 <= n; ++b) specs.push_back({Family::TripleStar, {a, b, n - 3 - a - b}});
  }
  if (n >= 4 && n % 2 == 0) specs.push_back({Family::Turan, {n, n / 2}});
  if (n >= 3 && n % 2 == 1) specs.push_back({Family::Turan, {n, (n + 1) / 2}});
  if (n >= 5) specs.push_back({Family::Wheel, {n}});
  specs.push_back({Family::Complete, {n}});
  if (n >= 1) specs.push_back({Family::Path, {n}});
  if (n >= 3) specs.push_back({Family::Cycle, {n}});
  if (n == 6) specs.push_back({Family::CoNet, {}});
  for (int k = 1; k <= n; ++k) specs.push_back({Family::Turan, {n, k}});
  std::vector<int> parts;
  if (n >= 1) ascending_partitions(n, 1, parts, [&](const std::vector<int>& p) {
    specs.push_back({Family::CompleteMultipartite, p});
  });

  std::vector<Instance> out;
  for (const FamilySpec& s : specs) out.push_back({s, canonical_code(make_named(s))});
  return out;
}

const std::vector<Instance>& instances(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Instance>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_instances(n)).first;
  return it->second;
}

enum FamilyBits : unsigned {
  kStars = 1,         // K_{1,l}, l >= 2
  kK23 = 2,
  kTurans = 4,        // T_{2l,l}, T_{2l-1,l}, l >= 2
  kP4 = 8,
  kDoubleStars = 16,  // S_{k,l}, k, l >= 1
  kWheels = 32,
};

bool matches(const FamilySpec& s, unsigned families) {
  switch (s.family) {
    case Family::Star: return (families & kStars) && s.params[0] >= 2;
    case Family::CompleteMultipartite: return (families & kK23) && s.params == std::vector<int>{2, 3};
    case Family::Turan: {
      const int n = s.params[0];
      const int k = s.params[1];
      return (families & kTurans) && k >= 2 && (n == 2 * k || n == 2 * k - 1);
    }
    case Family::Path: return (families & kP4) && s.params[0] == 4;
    case Family::DoubleStar: return families & kDoubleStars;
    case Family::Wheel: return families & kWheels;
    default: return false;
  }
}

// Canonical codes of every member of the union of the given families.
CodeSet predicted_codes(int n, unsigned families) {
  CodeSet out;
  if (n > kMaxCanonicalOrder) return out;
  for (const Instance& inst : instances(n)) {
    if (matches(inst.spec, families)) out.insert(inst.code);
  }
  return out;
}

struct Outcome {
  int n = 0;
  bool in_class = false;
  bool counted = false;    // minimally tough in the sense the check uses
  bool predicted = false;
  std::optional<ReportMember> member;
  std::vector<std::string> reasons;
  std::vector<std::string> evidence;  // report-only findings
};

ReportMember member_of(const Graph& g, const ToughnessValue& t) {
  const auto tag = identify_family(g);
  return {write_graph6(g), t.to_string(), tag ? to_string(*tag) : ""};
}

void check_options(const VerifyOptions& opts) {
  if (opts.input) return;
  if (opts.n_max < 1 || opts.n_max > kMaxEnumerationOrder) {
    throw ArgumentError("n_max must lie in [1, " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  if (opts.n_max > kDefaultMaxOrder && !opts.allow_large) {
    throw ArgumentError("n_max above " + std::to_string(kDefaultMaxOrder) + " needs an explicit override");
  }
}

std::vector<Graph> sweep_graphs(const VerifyOptions& opts) {
  if (opts.input) return *opts.input;
  std::vector<Graph> out;
  for (int n = 1; n <= opts.n_max; ++n) {
    const auto level = enumerate_graphs(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

// Evaluates every graph (in parallel) and folds the outcomes in input order.
Report sweep(Report r, const VerifyOptions& opts, const std::function<Outcome(const Graph&)>& eval) {
  check_options(opts);
  const std::vector<Graph> graphs = sweep_graphs(opts);
  const auto outcomes = parallel_map<Outcome>(graphs.size(), opts.jobs, [&](std::size_t i) {
    Outcome o = eval(graphs[i]);
    o.n = graphs[i].order();
    return o;
  });
  std::map<int, LevelCounts> levels;
  if (!opts.input) {
    for (int n = 1; n <= opts.n_max; ++n) levels[n].n = n;
  }
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Outcome& o = outcomes[i];
    LevelCounts& lc = levels[o.n];
    lc.n = o.n;
    lc.class_size += o.in_class;
    lc.mintough_found += o.counted;
    lc.predicted += o.predicted;
    if (o.member) r.members.push_back(*o.member);
    const std::string g6 = write_graph6(graphs[i]);
    for (const auto& why : o.reasons) r.discrepancies.push_back({g6, why});
    for (const auto& why : o.evidence) r.counterexamples.push_back({g6, why});
  }
  for (const auto& [n, lc] : levels) r.levels.push_back(lc);
  return r;
}

std::string theorem_description(TheoremId id) {
  switch (id) {
    case TheoremId::P4Free:
      return "P4-free graphs: non-trivially minimally tough iff K_{1,l}, K_{2,3}, T_{2l,l} or T_{2l-1,l} (l >= 2), "
             "iff complete multipartite with n - n_2 < 2n/n_k - 1";
    case TheoremId::Multipartite:
      return "complete multipartite graphs: non-trivially minimally tough iff K_{1,l}, K_{2,3}, T_{2l,l} or "
             "T_{2l-1,l} (l >= 2)";
    case TheoremId::CoChordalGe3:
      return "co-chordal graphs with co-diameter at least 3: non-trivially minimally tough iff P_4, K_{2,3}, "
             "K_{1,l}, S_{k,l}, T_{2l,l} or T_{2l-1,l}";
    case TheoremId::NetFreeCoChordal:
      return "net-free co-chordal graphs: non-trivially minimally tough iff P_4, K_{2,3}, K_{1,l}, S_{k,l}, "
             "T_{2l,l} or T_{2l-1,l}";
    case TheoremId::CoForest:
      return "complements of forests: non-trivially minimally tough iff P_4, T_{2l,l} or T_{2l-1,l}";
    case TheoremId::UniversalLe32:
      return "graphs with a universal vertex and toughness at most 3/2: minimally tough iff K_{1,l} "
             "(t <= 1/2) or W_l (t > 1)";
  }
  return "";
}

unsigned theorem_families(TheoremId id) {
  switch (id) {
    case TheoremId::P4Free:
    case TheoremId::Multipartite: return kStars | kK23 | kTurans;
    case TheoremId::CoChordalGe3:
    case TheoremId::NetFreeCoChordal: return kStars | kK23 | kTurans | kP4 | kDoubleStars;
    case TheoremId::CoForest: return kP4 | kTurans;
    case TheoremId::UniversalLe32: return kStars | kWheels;
  }
  return 0;
}

bool co_diameter_at_least_3(const Graph& g) { return co_diameter(g) >= Hops(3); }

bool in_theorem_class(TheoremId id, const Graph& g) {
  switch (id) {
    case TheoremId::P4Free: return is_P4_free(g);
    case TheoremId::Multipartite: return is_complete_multipartite(g).has_value();
    case TheoremId::CoChordalGe3: return is_co_chordal(g) && co_diameter_at_least_3(g);
    case TheoremId::NetFreeCoChordal: return is_net_free(g) && is_co_chordal(g);
    case TheoremId::CoForest: return is_complement_of_forest(g);
    case TheoremId::UniversalLe32: return !g.is_complete() && !universal_vertices(g).empty();
  }
  return false;
}

bool in_scan_class(ScanClass c, const Graph& g) {
  switch (c) {
    case ScanClass::P4Free: return is_P4_free(g);
    case ScanClass::CoChordalGe3: return is_co_chordal(g) && co_diameter_at_least_3(g);
    case ScanClass::NetFreeCoChordal: return is_net_free(g) && is_co_chordal(g);
    case ScanClass::CoForest: return is_complement_of_forest(g);
    case ScanClass::All: return true;
  }
  return false;
}

// Predicted-family code sets for orders 0..n_max, built once per sweep.
class Predictions {
 public:
  Predictions(unsigned families, int n_max) {
    for (int n = 0; n <= std::min(n_max, kMaxCanonicalOrder); ++n) sets_.push_back(predicted_codes(n, families));
  }

  bool contains(const Graph& g) const {
    const int n = g.order();
    return n < static_cast<int>(sets_.size()) && sets_[n].contains(canonical_code(g));
  }

 private:
  std::vector<CodeSet> sets_;
};

int sweep_max_order(const VerifyOptions& opts) {
  if (!opts.input) return opts.n_max;
  int m = 0;
  for (const Graph& g : *opts.input) m = std::max(m, g.order());
  return m;
}

}  // namespace

std::optional<FamilyTag> identify_family(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) return std::nullopt;
  const CanonicalCode code = canonical_code(g);
  for (const Instance& inst : instances(g.order())) {
    if (inst.code == code) return inst.spec;
  }
  return std::nullopt;
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> all{TheoremId::P4Free,           TheoremId::Multipartite,
                                          TheoremId::CoChordalGe3,     TheoremId::NetFreeCoChordal,
                                          TheoremId::CoForest,         TheoremId::UniversalLe32};
  return all;
}

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::P4Free: return "P4FREE";
    case TheoremId::Multipartite: return "MULTIPARTITE";
    case TheoremId::CoChordalGe3: return "COCHORDAL_GE3";
    case TheoremId::NetFreeCoChordal: return "NETFREE_COCHORDAL";
    case TheoremId::CoForest: return "COFOREST";
    case TheoremId::UniversalLe32: return "UNIVERSAL_LE_3_2";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem_id(std::string_view text) {
  for (TheoremId id : all_theorems()) {
    if (text == to_string(id)) return id;
  }
  return std::nullopt;
}

const std::vector<ScanClass>& all_scan_classes() {
  static const std::vector<ScanClass> all{ScanClass::P4Free, ScanClass::CoChordalGe3, ScanClass::NetFreeCoChordal,
                                          ScanClass::CoForest, ScanClass::All};
  return all;
}

std::string to_string(ScanClass c) {
  switch (c) {
    case ScanClass::P4Free: return "p4-free";
    case ScanClass::CoChordalGe3: return "co-chordal-ge3";
    case ScanClass::NetFreeCoChordal: return "net-free-co-chordal";
    case ScanClass::CoForest: return "co-forest";
    case ScanClass::All: return "all";
  }
  return "?";
}

std::optional<ScanClass> parse_scan_class(std::string_view text) {
  for (ScanClass c : all_scan_classes()) {
    if (text == to_string(c)) return c;
  }
  return std::nullopt;
}

bool multipartite_inequality_holds(const Graph& g) {
  const auto parts = is_complete_multipartite(g);
  if (!parts || parts->parts.size() < 2) return false;
  const auto sizes = parts->sizes();
  const std::int64_t n = g.order();
  const std::int64_t n2 = sizes[1];
  const std::int64_t nk = sizes.back();
  if (nk < 2) return false;
  // n - n_2 < 2n/n_k - 1, multiplied through by n_k.
  return (n - n2 + 1) * nk < 2 * n;
}

Report verify_theorem(TheoremId id, const VerifyOptions& opts) {
  Report r;
  r.id = to_string(id);
  r.description = theorem_description(id);
  if (id == TheoremId::P4Free) {
    r.notes.push_back(
        "the inequality is evaluated on non-complete graphs only; every K_n with n >= 2 satisfies it literally");
  }
  const Predictions predicted(theorem_families(id), sweep_max_order(opts));
  return sweep(std::move(r), opts, [&](const Graph& g) {
    Outcome o;
    o.in_class = in_theorem_class(id, g);
    if (!o.in_class) return o;
    const MinToughVerdict v = is_minimally_tough_by_definition(g);
    const bool mt = v.status == MinToughStatus::NonTriviallyMinTough;
    o.counted = mt;
    o.predicted = predicted.contains(g);
    if (id == TheoremId::UniversalLe32) {
      o.counted = mt && v.toughness <= Rational(3, 2);
      if (mt && v.toughness > Rational(1, 2) && v.toughness <= Rational(1)) {
        o.reasons.push_back("minimally tough with a universal vertex and toughness in (1/2, 1]");
      }
      if (o.counted) {
        const auto tag = classify_universal_vertex_graph(g);
        const bool ok = tag && ((tag->family == Family::Star && v.toughness <= Rational(1, 2)) ||
                                (tag->family == Family::Wheel && v.toughness > Rational(1)));
        if (!ok) o.reasons.push_back("universal-vertex classification does not match the toughness range");
      }
    }
    if (o.counted) o.member = member_of(g, v.toughness);
    if (o.counted && !o.predicted) o.reasons.push_back("minimally tough but outside the predicted families");
    if (!o.counted && o.predicted) o.reasons.push_back("predicted family member is not minimally tough");
    if (id == TheoremId::P4Free) {
      const bool ineq = multipartite_inequality_holds(g);
      if (ineq != mt) o.reasons.push_back("multipartite inequality disagrees with the minimal toughness verdict");
      if (ineq != o.predicted) o.reasons.push_back("multipartite inequality disagrees with family membership");
    }
    return o;
  });
}

Report verify_table1(int l_max) {
  if (l_max < 2) throw ArgumentError("l_max must be at least 2");
  Report r;
  r.id = "TABLE1";
  r.description = "toughness of P_4, K_{2,3}, K_{1,l}, S_{k,l}, T_{2l,l}, T_{2l-1,l} for 1 <= k <= l, 2 <= l <= " +
                  std::to_string(l_max);
  auto check = [&](const FamilySpec& spec, const Rational& expected) {
    const Graph g = make_named(spec);
    const ToughnessValue t = toughness(g);
    r.members.push_back({write_graph6(g), t.to_string(), to_string(spec)});
    if (t != expected) {
      r.discrepancies.push_back(
          {write_graph6(g), to_string(spec) + ": expected " + expected.to_string() + ", got " + t.to_string()});
    }
  };
  check({Family::Path, {4}}, Rational(1, 2));
  check({Family::CompleteMultipartite, {2, 3}}, Rational(2, 3));
  for (int l = 2; l <= l_max; ++l) {
    check({Family::Star, {l}}, Rational(1, l));
    for (int k = 1; k <= l; ++k) check({Family::DoubleStar, {k, l}}, Rational(1, l + 1));
    check({Family::Turan, {2 * l, l}}, Rational(l - 1));
    check({Family::Turan, {2 * l - 1, l}}, Rational(2 * l - 3, 2));
  }
  return r;
}

Report verify_wheels(int l_max) {
  if (l_max < 5) throw ArgumentError("l_max must be at least 5");
  Report r;
  r.id = "WHEELS";
  r.description = "W_l is minimally tough with toughness 1 + 2/(l-1) for odd l and 1 + 2/l for even l, 5 <= l <= " +
                  std::to_string(l_max);
  bool rim_form_holds = true;
  bool cycle_index_holds = true;
  for (int l = 5; l <= l_max; ++l) {
    const Graph g = wheel_graph(l);
    const MinToughVerdict v = is_minimally_tough_by_definition(g);
    const Rational expected = Rational(1) + Rational(2, l % 2 == 1 ? l - 1 : l);
    r.members.push_back({write_graph6(g), v.toughness.to_string(), "wheel:" + std::to_string(l)});
    if (v.status != MinToughStatus::NonTriviallyMinTough) {
      r.discrepancies.push_back({write_graph6(g), "wheel:" + std::to_string(l) + " is not minimally tough"});
    }
    if (v.toughness != expected) {
      r.discrepancies.push_back({write_graph6(g), "wheel:" + std::to_string(l) + ": expected " +
                                                      expected.to_string() + ", got " + v.toughness.to_string()});
    }
    // Rim-based closed form, and the stated formula read with the rim length.
    if (v.toughness != Rational(1) + Rational(1, (l - 1) / 2)) rim_form_holds = false;
    if (toughness(join(Graph(1), cycle_graph(l))) != expected) cycle_index_holds = false;
  }
  r.notes.push_back(std::string("toughness equals 1 + 1/floor((l-1)/2) for every wheel checked: ") +
                    (rim_form_holds ? "yes" : "no"));
  r.notes.push_back(std::string("stated values match K_1 * C_l (rim of l vertices) for every l checked: ") +
                    (cycle_index_holds ? "yes" : "no"));
  return r;
}

Report kriesell_scan(ScanClass c, const VerifyOptions& opts) {
  Report r;
  r.id = "KRIESELL:" + to_string(c);
  r.description = "non-trivially minimally tough graphs (" + to_string(c) + ") have a vertex of degree ceil(2t)";
  r.report_only = c == ScanClass::All;
  return sweep(std::move(r), opts, [&](const Graph& g) {
    Outcome o;
    o.in_class = in_scan_class(c, g);
    if (!o.in_class) return o;
    const MinToughVerdict v = is_minimally_tough_by_definition(g);
    if (v.status != MinToughStatus::NonTriviallyMinTough) return o;
    o.counted = true;
    o.member = member_of(g, v.toughness);
    if (kriesell_check(g, v)) {
      o.predicted = true;
    } else {
      const std::string why = "no vertex of degree ceil(2t) = " + std::to_string(ceil_twice(v.toughness.value()));
      (c == ScanClass::All ? o.evidence : o.reasons).push_back(why);
    }
    return o;
  });
}

Report probe_conjecture_cochordal_diam2(const VerifyOptions& opts) {
  Report r;
  r.id = "PROBE:COCHORDAL_DIAM2";
  r.description = "co-chordal graphs with co-diameter 2: non-trivially minimally tough ones versus S_{l,l,l}";
  r.report_only = true;
  const int max_order = sweep_max_order(opts);
  CodeSet balanced;
  for (int l = 1; 3 * l + 3 <= std::min(max_order, kMaxCanonicalOrder); ++l) {
    balanced.insert(canonical_code(triple_star(l, l, l)));
  }
  r = sweep(std::move(r), opts, [&](const Graph& g) {
    Outcome o;
    o.in_class = is_co_chordal(g) && co_diameter(g) == Hops(2);
    if (!o.in_class) return o;
    const MinToughVerdict v = is_minimally_tough_by_definition(g);
    if (v.status != MinToughStatus::NonTriviallyMinTough) return o;
    o.counted = true;
    o.member = member_of(g, v.toughness);
    o.predicted = g.order() <= kMaxCanonicalOrder && balanced.contains(canonical_code(g));
    if (!o.predicted) o.evidence.push_back("minimally tough but not a balanced triple star");
    return o;
  });
  std::optional<ToughnessValue> best;
  bool net_found = false;
  const std::string net = write_graph6(canonical_form(triple_star(1, 1, 1)));
  for (const ReportMember& m : r.members) {
    const ToughnessValue t = ToughnessValue::parse(m.toughness);
    if (!best || t > *best) best = t;
    if (write_graph6(canonical_form(parse_graph6(m.graph6))) == net) net_found = true;
  }
  r.notes.push_back("maximum toughness among hits: " + (best ? best->to_string() : std::string("none")));
  r.notes.push_back(std::string("net (triplestar:1,1,1) minimally tough: ") + (net_found ? "yes" : "not found"));
  return r;
}

Report verify_codiam_exclusions(const VerifyOptions& opts) {
  Report r;
  r.id = "CODIAM";
  r.description =
      "co-chordal graphs with connected complement: co-diameter >= 4 is never minimally tough; co-diameter 3 is "
      "minimally tough iff a double star";
  const Predictions double_stars(kDoubleStars, sweep_max_order(opts));
  return sweep(std::move(r), opts, [&](const Graph& g) {
    Outcome o;
    const Hops d = co_diameter(g);
    if (d.is_infinite() || d < Hops(3) || !is_co_chordal(g)) return o;
    o.in_class = true;
    const MinToughVerdict v = is_minimally_tough_by_definition(g);
    o.counted = v.minimally_tough();
    if (o.counted) o.member = member_of(g, v.toughness);
    if (d >= Hops(4)) {
      if (o.counted) o.reasons.push_back("minimally tough with co-diameter " + d.to_string());
      return o;
    }
    o.predicted = double_stars.contains(g);
    if (o.counted != o.predicted) {
      o.reasons.push_back(o.counted ? "co-diameter 3, minimally tough, not a double star"
                                    : "double star with co-diameter 3 is not minimally tough");
    }
    return o;
  });
}

std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["report_only"] = r.report_only;
  j["verified"] = r.verified();
  j["levels"] = nlohmann::ordered_json::array();
  for (const LevelCounts& lc : r.levels) {
    j["levels"].push_back({{"n", lc.n},
                           {"class_size", lc.class_size},
                           {"mintough_found", lc.mintough_found},
                           {"predicted", lc.predicted}});
  }
  j["members"] = nlohmann::ordered_json::array();
  for (const ReportMember& m : r.members) {
    j["members"].push_back({{"graph6", m.graph6}, {"toughness", m.toughness}, {"family", m.family}});
  }
  auto list = [](const std::vector<Discrepancy>& ds) {
    auto a = nlohmann::ordered_json::array();
    for (const Discrepancy& d : ds) a.push_back({{"graph6", d.graph6}, {"reason", d.reason}});
    return a;
  };
  j["discrepancies"] = list(r.discrepancies);
  j["counterexamples"] = list(r.counterexamples);
  j["notes"] = r.notes;
  return j.dump();
}

std::string report_text(const Report& r) {
  std::ostringstream out;
  out << r.id << ": " << r.description << "\n";
  if (!r.levels.empty()) {
    out << "   n      class   mintough  predicted\n";
    for (const LevelCounts& lc : r.levels) {
      char line[96];
      std::snprintf(line, sizeof line, "  %2d %10lld %10lld %10lld\n", lc.n, static_cast<long long>(lc.class_size),
                    static_cast<long long>(lc.mintough_found), static_cast<long long>(lc.predicted));
      out << line;
    }
  }
  if (!r.members.empty()) {
    out << "  graphs:\n";
    for (const ReportMember& m : r.members) {
      out << "    " << m.graph6 << "  t=" << m.toughness;
      if (!m.family.empty()) out << "  " << m.family;
      out << "\n";
    }
  }
  for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  for (const Discrepancy& d : r.counterexamples) out << "  COUNTEREXAMPLE " << d.graph6 << ": " << d.reason << "\n";
  for (const Discrepancy& d : r.discrepancies) out << "  DISCREPANCY " << d.graph6 << ": " << d.reason << "\n";
  if (r.report_only) {
    out << "  report only: " << r.counterexamples.size() << " counterexample(s)\n";
  } else {
    out << "  " << (r.verified() ? "verified" : "FAILED") << " (" << r.discrepancies.size() << " discrepancies)\n";
  }
  return out.str();
}

}  // namespace toughlab
