#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "toughlab/family.hpp"
#include "toughlab/graph.hpp"

namespace toughlab {

// A named family instance, e.g. {Star, {4}} for K_{1,4}. Its label is the
// family spec string accepted by make_named.
using FamilyTag = FamilySpec;

// Matches g by canonical code against the family instances of its order, in
// the order star, K_{2,3}, P_4, double star, triple star, Turan T_{2l,l} and
// T_{2l-1,l}, wheel; then complete, path, cycle, co-net, other Turan graphs
// and other complete multipartite graphs. Absent for orders above the
// canonical-form cap.
std::optional<FamilyTag> identify_family(const Graph& g);

enum class TheoremId { P4Free, Multipartite, CoChordalGe3, NetFreeCoChordal, CoForest, UniversalLe32 };

const std::vector<TheoremId>& all_theorems();
std::string to_string(TheoremId id);  // "P4FREE", "MULTIPARTITE", ...
std::optional<TheoremId> parse_theorem_id(std::string_view text);

// Graph classes with a proven degree result, plus the unrestricted scan.
enum class ScanClass { P4Free, CoChordalGe3, NetFreeCoChordal, CoForest, All };

const std::vector<ScanClass>& all_scan_classes();
std::string to_string(ScanClass c);  // "p4-free", "co-chordal-ge3", ..., "all"
std::optional<ScanClass> parse_scan_class(std::string_view text);

struct VerifyOptions {
  int n_max = 8;
  int jobs = 1;
  // Orders above 8 take minutes to hours and must be requested explicitly.
  bool allow_large = false;
  // When set, these graphs are checked instead of the enumeration.
  const std::vector<Graph>* input = nullptr;
};

inline constexpr int kDefaultMaxOrder = 8;

struct LevelCounts {
  int n = 0;
  std::int64_t class_size = 0;
  std::int64_t mintough_found = 0;
  std::int64_t predicted = 0;
};

struct ReportMember {
  std::string graph6;
  std::string toughness;
  std::string family;  // label, or empty when no family matched
};

struct Discrepancy {
  std::string graph6;
  std::string reason;
};

struct Report {
  std::string id;
  std::string description;
  bool report_only = false;
  std::vector<LevelCounts> levels;
  std::vector<ReportMember> members;  // non-trivially minimally tough graphs found
  std::vector<Discrepancy> discrepancies;
  // Report-only runs list evidence against an open conjecture here instead
  // of failing.
  std::vector<Discrepancy> counterexamples;
  std::vector<std::string> notes;

  bool verified() const { return discrepancies.empty(); }
};

std::string report_json(const Report& r);
std::string report_text(const Report& r);

Report verify_theorem(TheoremId id, const VerifyOptions& opts = {});
// Table of toughness values for P_4, K_{2,3}, K_{1,l}, S_{k,l}, T_{2l,l} and
// T_{2l-1,l}, 1 <= k <= l, 2 <= l <= l_max.
Report verify_table1(int l_max);
// W_l is minimally tough with toughness 1 + 2/(l-1) (l odd) or 1 + 2/l (l even).
Report verify_wheels(int l_max);
// Every non-trivially minimally tough graph in the class has a vertex of
// degree ceil(2t). The unrestricted scan only reports.
Report kriesell_scan(ScanClass c, const VerifyOptions& opts = {});
// Co-chordal graphs with co-diameter 2: lists the non-trivially minimally
// tough ones and whether each is a balanced triple star. Report only.
Report probe_conjecture_cochordal_diam2(const VerifyOptions& opts = {});
// Co-chordal graphs: connected complement with co-diameter >= 4 is never
// minimally tough; with co-diameter 3 minimally tough means double star.
Report verify_codiam_exclusions(const VerifyOptions& opts = {});

// n - n_2 < 2n / n_k - 1 for a non-complete complete multipartite graph with
// at least two parts; false for anything else.
bool multipartite_inequality_holds(const Graph& g);

}  // namespace toughlab
