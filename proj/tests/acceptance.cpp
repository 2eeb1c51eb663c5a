// Runs the ten acceptance criteria and prints one PASS/FAIL line per
// criterion. All value comparisons are exact rationals (tolerance 0); each
// criterion also has a wall-clock budget. Pass criterion numbers as arguments
// to run a subset.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "support.hpp"
#include "toughlab/classes.hpp"
#include "toughlab/connectivity.hpp"
#include "toughlab/enumerate.hpp"
#include "toughlab/family.hpp"
#include "toughlab/graph6.hpp"
#include "toughlab/mintough.hpp"
#include "toughlab/toughness.hpp"
#include "toughlab/verify.hpp"

using namespace toughlab;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;  // printed under the criterion line
  bool report_only_hits = false;

  void fail(const std::string& why) {
    pass = false;
    details.push_back(why);
  }
  void note(const std::string& what) { details.push_back(what); }
};

struct Criterion {
  int id;
  const char* title;
  double budget_s;
  std::function<Outcome()> run;
};

std::string str(const std::optional<Rational>& t) { return t ? t->to_string() : "inf"; }

// tau by exhaustive subset scan.
std::optional<Rational> brute_tau(const Graph& g) { return oracle::toughness(g); }

bool brute_minimally_tough(const Graph& g) {
  const auto t = brute_tau(g);
  for (const Edge& e : g.edges()) {
    const auto te = brute_tau(delete_edge(g, e.u, e.v));
    if (t && te && *te < *t) continue;
    if (!t && te) continue;
    return false;
  }
  return true;
}

void expect_tau(Outcome& o, const std::string& label, const Graph& g, const Rational& want) {
  const auto got = brute_tau(g);
  if (!got || *got != want) o.fail(label + ": expected " + want.to_string() + ", brute force " + str(got));
}

// ---- 1 ----
Outcome table1() {
  Outcome o;
  int values = 0;
  expect_tau(o, "P_4", path_graph(4), Rational(1, 2));
  expect_tau(o, "K_{2,3}", complete_multipartite({2, 3}), Rational(2, 3));
  values += 2;
  for (int l = 2; l <= 5; ++l) {
    const std::string ls = std::to_string(l);
    expect_tau(o, "K_{1," + ls + "}", star_graph(l), Rational(1, l));
    for (int k = 1; k <= l; ++k) {
      expect_tau(o, "S_{" + std::to_string(k) + "," + ls + "}", double_star(k, l), Rational(1, l + 1));
      ++values;
    }
    expect_tau(o, "T_{2l,l} l=" + ls, turan_graph(2 * l, l), Rational(l - 1));
    expect_tau(o, "T_{2l-1,l} l=" + ls, turan_graph(2 * l - 1, l), Rational(2 * l - 3, 2));
    values += 3;
  }
  const Report r = verify_table1(5);
  if (!r.verified()) o.fail("table1 report lists " + std::to_string(r.discrepancies.size()) + " discrepancies");
  o.note(std::to_string(values) + " values compared exactly");
  return o;
}

// ---- 2 ----
void partitions(int remaining, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    cur.push_back(p);
    partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

Outcome multipartite() {
  Outcome o;
  std::vector<std::vector<int>> lists;
  for (int n = 1; n <= 9; ++n) {
    std::vector<int> cur;
    partitions(n, 1, cur, lists);
  }
  for (const auto& parts : lists) {
    int n = 0;
    for (int p : parts) n += p;
    const int largest = parts.back();
    const auto brute = brute_tau(complete_multipartite(parts));
    const ToughnessValue lib = toughness_complete_multipartite(parts);
    std::string label = "K_{";
    for (std::size_t i = 0; i < parts.size(); ++i) label += (i ? "," : "") + std::to_string(parts[i]);
    label += "}";
    if (largest == 1) {
      if (brute || !lib.is_infinite()) o.fail(label + ": complete graph should be inf, got " + str(brute));
      continue;
    }
    const Rational formula = Rational(n, largest) - Rational(1);
    if (!brute || *brute != formula) o.fail(label + ": formula " + formula.to_string() + ", brute force " + str(brute));
    if (lib != formula) o.fail(label + ": closed form returned " + lib.to_string());
  }
  o.note(std::to_string(lists.size()) + " part lists with total <= 9");
  return o;
}

// ---- 3 ----
Outcome bipartite() {
  Outcome o;
  int count = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int m = 1; m <= n; ++m) {
      expect_tau(o, "K_{" + std::to_string(m) + "," + std::to_string(n) + "}", complete_multipartite({m, n}),
                 Rational(m, n));
      ++count;
    }
  }
  o.note(std::to_string(count) + " complete bipartite graphs");
  return o;
}

// ---- 4 ----
Graph hub_and_rim(int rim) {
  GraphBuilder b(rim + 1);
  for (int i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, i == rim ? 1 : i + 1);
  }
  return b.build();
}

Outcome wheels() {
  Outcome o;
  int rim_matches = 0;
  for (int l = 5; l <= 9; ++l) {
    const Graph w = wheel_graph(l);
    if (!(w == hub_and_rim(l - 1))) o.fail("W_" + std::to_string(l) + " is not K_1 * C_" + std::to_string(l - 1));
    const Rational want = l % 2 ? Rational(1) + Rational(2, l - 1) : Rational(1) + Rational(2, l);
    const auto got = brute_tau(w);
    const bool minimal = brute_minimally_tough(w);
    if (!got || *got != want || !minimal) {
      o.fail("W_" + std::to_string(l) + " = K_1 * C_" + std::to_string(l - 1) + ": expected " + want.to_string() +
             ", brute force " + str(got) + (minimal ? ", minimally tough" : ", NOT minimally tough"));
    }
    // The same formula evaluated on K_1 * C_l.
    if (brute_tau(hub_and_rim(l)) == std::optional<Rational>(want)) ++rim_matches;
  }
  if (!o.pass) {
    o.note("diagnostic: the stated values hold for K_1 * C_l at " + std::to_string(rim_matches) +
           "/5 orders; K_1 * C_{l-1} has toughness 1 + 1/floor((l-1)/2)");
  }
  return o;
}

// ---- 5 ----
Outcome deciders() {
  Outcome o;
  std::size_t total = 0, at7 = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n, true)) {
      ++total;
      if (n == 7) ++at7;
      const MinToughVerdict a = is_minimally_tough_by_definition(g);
      const MinToughVerdict b = is_minimally_tough_by_criterion(g).verdict;
      if (a != b) {
        o.fail(write_graph6(g) + ": definition " + to_string(a.status) + ", criterion " + to_string(b.status));
      }
    }
  }
  if (at7 != 853) o.fail("expected 853 connected classes at n=7, got " + std::to_string(at7));
  o.note(std::to_string(total) + " connected graphs, 853 at n=7");
  return o;
}

// ---- 6 ----
Outcome theorems() {
  Outcome o;
  VerifyOptions opts;
  opts.n_max = 8;
  std::vector<Report> reports;
  for (TheoremId id : all_theorems()) reports.push_back(verify_theorem(id, opts));
  reports.push_back(verify_codiam_exclusions(opts));
  for (const Report& r : reports) {
    std::int64_t found = 0;
    for (const auto& lv : r.levels) found += lv.mintough_found;
    o.note(r.id + ": " + std::to_string(r.discrepancies.size()) + " discrepancies, " + std::to_string(found) +
           " minimally tough class members");
    for (const auto& d : r.discrepancies) o.fail(r.id + " " + d.graph6 + ": " + d.reason);
  }
  return o;
}

// ---- 7 ----
struct LemmaTally {
  std::string name;
  std::int64_t checked = 0;
  std::int64_t failed = 0;
  std::string first;
  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
};

Outcome lemmas() {
  LemmaTally sandwich{"Menger sandwich"}, matching{"matching-extension equality"}, join_k{"join local connectivity"},
      dom{"dominating-edge equivalence"}, vacuity{"cond2 vacuity on dominating edges"},
      dom_kappa{"kappa = kappa(u,v) = ceil(2t) on dominating edges"}, universal{"at most one universal vertex"},
      regular{"ceil(2t)-regular shortcut"}, chordal{"regular chordal is complete"},
      cochordal{"co-chordal kappa formula (n <= 8)"}, join_k1{"join-with-K_1 biconditional (n <= 6)"};

  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const std::string g6 = write_graph6(g);
      const int kappa = connectivity(g);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const int k = local_connectivity(g, u, v);
          sandwich.check(kappa <= k && k <= std::min(g.degree(u), g.degree(v)), g6);
        }
      }

      const MinToughVerdict verdict = is_minimally_tough_by_definition(g);
      const ToughnessValue t = verdict.toughness;
      // Dominating edges from the adjacency matrix alone.
      const auto m = oracle::matrix_of(g);
      for (const auto& rep : dominating_edges(g)) {
        const int u = rep.edge.u, v = rep.edge.v;
        bool covers = true;
        for (int x = 0; x < n; ++x) covers = covers && (x == u || x == v || m[u][x] || m[v][x]);
        dom.check(rep.via_neighborhoods == covers && rep.via_separators == covers && rep.via_co_distance == covers,
                  g6);
        if (!covers) continue;
        vacuity.check(cond2_candidates(g, rep.edge).empty(), g6);
        if (!t.is_infinite() && !t.is_zero()) vacuity.check(!evaluate_edge(g, t.value(), rep.edge).cond2_holds, g6);
        if (verdict.status == MinToughStatus::NonTriviallyMinTough) {
          const int c = ceil_twice(t.value());
          dom_kappa.check(kappa == c && local_connectivity(g, u, v) == c, g6);
        }
      }

      if (!g.is_complete() && verdict.minimally_tough()) universal.check(universal_vertices(g).size() <= 1, g6);

      if (const auto shortcut = check_2t_regular_shortcut(g)) {
        regular.check(*shortcut == verdict, g6);
        if (!t.is_infinite() && !t.is_zero() && g.is_regular() && g.min_degree() == ceil_twice(t.value())) {
          regular.check(verdict.minimally_tough(), g6);
        }
      }

      if (is_connected(g) && is_chordal(g) && g.is_regular() && g.min_degree() >= 1) {
        chordal.check(g.is_complete(), g6);
      }
    }
  }

  // Bipartite (G, A, B) with |V| <= 5, so extensions have order <= 7.
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (Word a = 0; a <= low_bits(n); ++a) {
        const VertexSet A(n, a), B = A.complement();
        bool bipartite = true;
        for (const Edge& e : g.edges()) bipartite = bipartite && (A.contains(e.u) != A.contains(e.v));
        if (!bipartite) continue;
        const Extension ext = uv_extension(g, A, B);
        const int mm = oracle::max_matching(g);
        matching.check(local_connectivity(ext.graph, ext.u, ext.v) == mm &&
                           max_bipartite_matching(g, A, B).size() == mm,
                       write_graph6(g));
      }
    }
  }

  for (int n1 = 1; n1 <= 6; ++n1) {
    for (int n2 = 1; n1 + n2 <= 7; ++n2) {
      for (const Graph& g1 : enumerate_graphs(n1)) {
        for (const Graph& g2 : enumerate_graphs(n2)) {
          const Graph g = join(g1, g2);
          for (int u = 0; u < n1; ++u) {
            for (int v = n1; v < n1 + n2; ++v) {
              join_k.check(local_connectivity(g, u, v) == std::min(g.degree(u), g.degree(v)),
                           write_graph6(g1) + " * " + write_graph6(g2));
            }
          }
        }
      }
    }
  }

  for (int n = 4; n <= 8; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_co_chordal(g)) continue;
      const auto dec = simplicial_pair_decomposition(g);
      if (!dec) continue;
      const Graph h = complement(g);
      const VertexSet simplicial = simplicial_vertices(h);
      const bool simplicial_u = simplicial.contains(dec->u), simplicial_w = simplicial.contains(dec->w);
      const bool far = distance(h, dec->u, dec->w) == co_diameter(g) && co_diameter(g) >= Hops(3);
      const int x = static_cast<int>(dec->X.size());
      const Graph uw = induced_subgraph(g, dec->U | dec->W);
      cochordal.check(simplicial_u && simplicial_w && far &&
                          oracle::local_connectivity(g, dec->u, dec->w) == x + oracle::max_matching(uw) + 1,
                      write_graph6(g));
    }
  }

  for (int n = 1; n <= 6; ++n) {
    for (const Graph& h : enumerate_graphs(n)) {
      const auto r = check_join_condition(Graph(1), h);
      if (r.joined.is_complete()) continue;
      join_k1.check(r.consistent() && r.verdict.minimally_tough() == (r.g2_regular_at_ceiling && r.ceiling_identity),
                    write_graph6(h));
    }
  }

  Outcome o;
  for (const LemmaTally* l : {&sandwich, &matching, &join_k, &dom, &vacuity, &dom_kappa, &universal, &regular,
                              &chordal, &cochordal, &join_k1}) {
    o.note(l->name + ": " + std::to_string(l->checked) + " instances, " + std::to_string(l->failed) + " failures");
    if (l->checked == 0) o.fail(l->name + ": no instances checked");
    if (l->failed) o.fail(l->name + " fails on " + l->first);
  }
  return o;
}

// ---- 8 ----
Outcome degree_scans() {
  Outcome o;
  VerifyOptions opts;
  opts.n_max = 8;
  for (ScanClass c : all_scan_classes()) {
    const Report r = kriesell_scan(c, opts);
    std::int64_t found = 0;
    for (const auto& lv : r.levels) found += lv.mintough_found;
    if (r.report_only) {
      o.note(r.id + " (report only): " + std::to_string(found) + " graphs, " +
             std::to_string(r.counterexamples.size()) + " without a vertex of degree ceil(2t)");
      continue;
    }
    o.note(r.id + ": " + std::to_string(found) + " graphs, " + std::to_string(r.discrepancies.size()) +
           " discrepancies");
    for (const auto& d : r.discrepancies) o.fail(r.id + " " + d.graph6 + ": " + d.reason);
  }
  return o;
}

// ---- 9 ----
Outcome probe() {
  Outcome o;
  VerifyOptions opts;
  opts.n_max = 8;
  const Report r = probe_conjecture_cochordal_diam2(opts);
  std::set<std::uint64_t> balanced;
  for (int l = 1; 3 * l + 3 <= 8; ++l) balanced.insert(oracle::canonical_code(triple_star(l, l, l)));
  const std::uint64_t net = oracle::canonical_code(triple_star(1, 1, 1));
  bool net_hit = false;
  for (const ReportMember& m : r.members) {
    const Graph g = parse_graph6(m.graph6);
    const std::uint64_t code = oracle::canonical_code(g);
    if (code == net) net_hit = true;
    if (!balanced.contains(code)) {
      o.report_only_hits = true;
      o.note("counterexample: " + m.graph6 + " t=" + m.toughness);
    }
  }
  const Graph n = triple_star(1, 1, 1);
  if (!brute_minimally_tough(n) || brute_tau(n) != std::optional<Rational>(Rational(1, 2))) {
    o.fail("net is not minimally tough with t = 1/2 by brute force");
  }
  if (!net_hit) o.fail("probe did not list the net");
  o.note(std::to_string(r.members.size()) + " hits, all balanced triple stars: " +
         (o.report_only_hits ? "no" : "yes"));
  return o;
}

// ---- 10 ----
std::string cli_output(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return std::to_string(code) + "\n" + out.str() + err.str();
}

Outcome infrastructure() {
  Outcome o;
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> order(0, 10);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  int bad = 0;
  for (int i = 0; i < 100000; ++i) {
    const Graph g = testing_support::random_graph(rng, order(rng), density(rng));
    const std::string s = write_graph6(g);
    const Graph back = parse_graph6(s);
    if (!(back == g) || write_graph6(back) != s) {
      if (bad++ == 0) o.fail("graph6 round trip fails on " + s);
    }
  }
  o.note("100000 graph6 round trips, " + std::to_string(bad) + " failures");

  for (int n = 0; n <= 6; ++n) {
    for (bool conn : {false, true}) {
      const std::size_t got = enumerate_graphs(n, conn).size();
      const std::size_t want = oracle::count_isomorphism_classes(n, conn);
      if (got != want) {
        o.fail("n=" + std::to_string(n) + (conn ? " connected" : "") + ": enumerated " + std::to_string(got) +
               ", oracle " + std::to_string(want));
      }
    }
  }
  o.note("enumeration counts match the labeled oracle for n <= 6");

  int compared = 0;
  auto same = [&](const std::string& label, const std::string& a, const std::string& b) {
    ++compared;
    if (a != b) o.fail("output differs across worker counts: " + label);
  };
  for (int jobs : {2, 4}) {
    VerifyOptions one, many;
    one.n_max = many.n_max = 7;
    many.jobs = jobs;
    same("P4FREE", report_json(verify_theorem(TheoremId::P4Free, one)),
         report_json(verify_theorem(TheoremId::P4Free, many)));
    same("kriesell all", report_json(kriesell_scan(ScanClass::All, one)),
         report_json(kriesell_scan(ScanClass::All, many)));
    same("probe", report_json(probe_conjecture_cochordal_diam2(one)),
         report_json(probe_conjecture_cochordal_diam2(many)));
    same("codiam", report_json(verify_codiam_exclusions(one)), report_json(verify_codiam_exclusions(many)));
  }
  std::string six;
  for (const Graph& g : enumerate_graphs(6)) six += write_graph6(g) + "\n";
  for (const char* cmd : {"tough", "mintough", "classify"}) {
    const std::string base = cli_output({cmd, "--format", "json", "--jobs", "1"}, six);
    for (const char* jobs : {"2", "4", "0"}) {
      same(std::string("cli ") + cmd, base, cli_output({cmd, "--format", "json", "--jobs", jobs}, six));
    }
  }
  o.note(std::to_string(compared) + " outputs identical across --jobs settings");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "toughness table (P_4, K_{2,3}, stars, double stars, Turan graphs), 2 <= l <= 5, exact", 10, table1},
      {2, "complete multipartite formula, totals <= 9, exact", 60, multipartite},
      {3, "tau(K_{m,n}) = m/n, 1 <= m <= n <= 6, exact", 60, bipartite},
      {4, "wheels W_5..W_9 minimally tough with stated toughness, exact", 60, wheels},
      {5, "definition and criterion deciders agree, connected n <= 7", 300, deciders},
      {6, "theorem and co-diameter reports, n <= 8, zero discrepancies", 1800, theorems},
      {7, "structural lemma suites, n <= 7", 600, lemmas},
      {8, "degree scans of the four characterized classes, n <= 8", 1800, degree_scans},
      {9, "co-diameter 2 co-chordal probe, n <= 8 (report only)", 600, probe},
      {10, "graph6 round trip, enumeration counts, determinism", 600, infrastructure},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.fail("over the time budget");
    if (!o.pass) ++failures;
    std::printf("%s criterion %2d: %s [%.2f s, budget %.0f s, tolerance 0]\n", o.pass ? "PASS" : "FAIL", c.id,
                c.title, secs, c.budget_s);
    for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
