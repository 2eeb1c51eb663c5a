#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "toughlab/classes.hpp"
#include "toughlab/enumerate.hpp"
#include "toughlab/error.hpp"
#include "toughlab/family.hpp"
#include "toughlab/graph6.hpp"
#include "toughlab/mintough.hpp"
#include "toughlab/parallel.hpp"
#include "toughlab/toughness.hpp"
#include "toughlab/verify.hpp"

namespace toughlab::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kChunkLines = 1024;
constexpr const char* kOverrideEnv = "TOUGHLAB_NMAX_OVERRIDE";

struct Common {
  std::string format = "table";
  int jobs = 1;
  std::string input;   // path, or empty for the input stream
  std::string family;  // family spec used instead of a graph stream
};

struct LineResult {
  std::string out;
  std::string err;
  int code = kOk;
};

using Handler = std::function<LineResult(const Graph&, const std::string&)>;

void add_common(CLI::App* sub, Common& c, bool graph_source) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"table", "json", "tsv"}));
  sub->add_option("--jobs", c.jobs, "Worker threads (0 = one per hardware thread)")->check(CLI::NonNegativeNumber);
  if (graph_source) {
    auto* in = sub->add_option("--input", c.input, "Read graph6 lines from this file instead of stdin");
    auto* fam = sub->add_option("--family", c.family, "Use the named family graph instead of a graph6 stream");
    in->excludes(fam);
  }
}

// Reads graph6 lines in chunks, handles each chunk in parallel, and writes the
// results in input order. Returns the largest per-line exit code.
int stream_graphs(const Common& c, std::istream& in, std::ostream& out, std::ostream& err, const Handler& handle) {
  if (!c.family.empty()) {
    const Graph g = make_named(c.family);
    const LineResult r = handle(g, write_graph6(g));
    out << r.out;
    err << r.err;
    return r.code;
  }
  std::ifstream file;
  std::istream* src = &in;
  if (!c.input.empty() && c.input != "-") {
    file.open(c.input);
    if (!file) {
      err << "cannot open " << c.input << "\n";
      return kBadInput;
    }
    src = &file;
  }

  int code = kOk;
  std::size_t line_no = 0;
  std::vector<std::pair<std::size_t, std::string>> chunk;
  std::string line;
  auto flush = [&] {
    const auto results = parallel_map<LineResult>(chunk.size(), c.jobs, [&](std::size_t i) {
      const auto& [no, text] = chunk[i];
      LineResult r;
      try {
        const Graph g = parse_graph6(text);
        return handle(g, write_graph6(g));
      } catch (const Error& e) {
        r.err = "line " + std::to_string(no) + ": " + e.what() + "\n";
        r.code = kBadInput;
      }
      return r;
    });
    for (const LineResult& r : results) {
      out << r.out;
      err << r.err;
      code = std::max(code, r.code);
    }
    out.flush();
    chunk.clear();
  };
  while (std::getline(*src, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    chunk.emplace_back(line_no, line);
    if (chunk.size() == kChunkLines) flush();
  }
  if (!chunk.empty()) flush();
  return code;
}

LineResult tough_line(const Common& c, const Graph& g, const std::string& g6) {
  const std::string t = toughness(g).to_string();
  LineResult r;
  if (c.format == "json") {
    r.out = Json{{"graph6", g6}, {"toughness", t}}.dump() + "\n";
  } else if (c.format == "tsv") {
    r.out = g6 + "\t" + t + "\n";
  } else {
    r.out = t + "\n";
  }
  return r;
}

Json witness_json(const EdgeWitness& w) {
  Json j{{"edge", to_string(w.edge)},
         {"kappa", w.local_connectivity},
         {"cond1", w.cond1_holds},
         {"cond2", w.cond2_holds}};
  if (w.cond2_separator) j["separator"] = w.cond2_separator->members();
  return j;
}

LineResult mintough_line(const Common& c, const std::string& method, const Graph& g, const std::string& g6) {
  LineResult r;
  std::optional<MinToughVerdict> by_def;
  std::optional<CriterionResult> by_crit;
  if (method != "criterion") by_def = is_minimally_tough_by_definition(g);
  if (method != "definition") by_crit = is_minimally_tough_by_criterion(g);
  if (by_def && by_crit && *by_def != by_crit->verdict) {
    r.err = g6 + ": definition and criterion disagree (" + to_string(by_def->status) + " vs " +
            to_string(by_crit->verdict.status) + ")\n";
    r.code = kDiscrepancy;
  }
  const MinToughVerdict& v = by_def ? *by_def : by_crit->verdict;
  const std::string status = to_string(v.status);
  const std::string t = v.toughness.to_string();
  const std::string edge = v.failing_edge ? to_string(*v.failing_edge) : "";
  if (c.format == "json") {
    Json j{{"graph6", g6}, {"status", status}, {"toughness", t}};
    if (v.failing_edge) j["failing_edge"] = edge;
    j["witnesses"] = Json::array();
    if (by_crit) {
      for (const EdgeWitness& w : by_crit->witnesses) j["witnesses"].push_back(witness_json(w));
    }
    r.out = j.dump() + "\n";
  } else if (c.format == "tsv") {
    r.out = g6 + "\t" + status + "\t" + t + "\t" + (edge.empty() ? "-" : edge) + "\n";
  } else {
    r.out = g6 + "  " + status + "  t=" + t + (edge.empty() ? "" : "  failing edge " + edge) + "\n";
  }
  return r;
}

LineResult classify_line(const Common& c, const std::optional<GraphClass>& filter, const Graph& g,
                         const std::string& g6) {
  LineResult r;
  if (filter) {
    if (in_class(g, *filter)) r.out = g6 + "\n";
    return r;
  }
  std::vector<std::pair<std::string, bool>> member;
  for (GraphClass cls : all_graph_classes()) member.emplace_back(to_string(cls), in_class(g, cls));
  if (c.format == "json") {
    Json classes = Json::object();
    for (const auto& [name, yes] : member) classes[name] = yes;
    r.out = Json{{"graph6", g6}, {"classes", classes}}.dump() + "\n";
  } else if (c.format == "tsv") {
    r.out = g6;
    for (const auto& [name, yes] : member) r.out += yes ? "\t1" : "\t0";
    r.out += "\n";
  } else {
    r.out = g6 + " ";
    bool any = false;
    for (const auto& [name, yes] : member) {
      if (!yes) continue;
      r.out += " " + name;
      any = true;
    }
    if (!any) r.out += " -";
    r.out += "\n";
  }
  return r;
}

// Applies the gate for sweeps above the default order.
std::optional<int> check_nmax(int nmax, VerifyOptions& opts, std::ostream& err) {
  opts.n_max = nmax;
  if (nmax <= kDefaultMaxOrder) return std::nullopt;
  const char* env = std::getenv(kOverrideEnv);
  if (env == nullptr || std::string(env).empty() || std::string(env) == "0") {
    err << "--nmax above " << kDefaultMaxOrder << " requires " << kOverrideEnv << "=1\n";
    return kBadInput;
  }
  err << "warning: order " << nmax << " sweeps cover hundreds of thousands of graphs and may take a long time\n";
  opts.allow_large = true;
  return std::nullopt;
}

int emit_reports(const std::vector<Report>& reports, const std::string& format, std::ostream& out) {
  int code = kOk;
  for (const Report& r : reports) {
    if (!r.report_only && !r.verified()) code = kDiscrepancy;
  }
  if (format == "json") {
    if (reports.size() == 1) {
      out << report_json(reports.front()) << "\n";
    } else {
      out << "[";
      for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "," : "") << report_json(reports[i]);
      out << "]\n";
    }
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) out << (i ? "\n" : "") << report_text(reports[i]);
  }
  return code;
}

std::optional<std::vector<Graph>> read_graph_file(const std::string& path, std::istream& in, std::ostream& err) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) {
      err << "cannot open " << path << "\n";
      return std::nullopt;
    }
    src = &file;
  }
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*src, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      err << "line " << line_no << ": " << e.what() << "\n";
      return std::nullopt;
    }
  }
  return graphs;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact toughness and minimal toughness of small graphs", "toughlab");
  app.require_subcommand(1);

  Common common;

  auto* tough = app.add_subcommand("tough", "Toughness of each input graph");
  add_common(tough, common, true);

  std::string method = "both";
  auto* mintough = app.add_subcommand("mintough", "Minimal toughness verdict for each input graph");
  add_common(mintough, common, true);
  mintough->add_option("--method", method, "Decider to use")->check(CLI::IsMember({"definition", "criterion", "both"}));

  std::string filter;
  auto* classify = app.add_subcommand("classify", "Graph class memberships of each input graph");
  add_common(classify, common, true);
  classify->add_option("--filter", filter, "Only echo the graphs in this class");

  std::string spec;
  auto* named = app.add_subcommand("named", "Print the graph6 encoding of a family graph");
  add_common(named, common, false);
  named->add_option("spec", spec, "Family spec such as turan:6,3 or doublestar:1,2")->required();

  std::string target;
  int nmax = kDefaultMaxOrder;
  std::optional<int> lmax;
  std::string scan = "";
  std::string verify_input;
  auto* verify = app.add_subcommand("verify", "Run theorem checks over enumerated or supplied graphs");
  add_common(verify, common, false);
  verify
      ->add_option("target", target,
                   "P4FREE, MULTIPARTITE, COCHORDAL_GE3, NETFREE_COCHORDAL, COFOREST, UNIVERSAL_LE_3_2, table1, "
                   "wheels, kriesell, codiam, probe or all")
      ->required();
  verify->add_option("--nmax", nmax, "Largest order to enumerate");
  verify->add_option("--lmax", lmax, "Largest parameter for table1 (default 5) and wheels (default 9)");
  verify->add_option("--class", scan, "Class for the kriesell scan (default: every class)");
  verify->add_option("--input", verify_input, "Check the graphs in this graph6 file ('-' for stdin)");

  auto* probe = app.add_subcommand("probe", "Search co-chordal graphs of co-diameter 2 for minimally tough ones");
  add_common(probe, common, false);
  probe->add_option("--nmax", nmax, "Largest order to enumerate");

  int order = 0;
  bool connected = false;
  auto* enumerate = app.add_subcommand("enumerate", "Print one graph6 line per isomorphism class");
  enumerate->add_option("n", order, "Order")->required();
  enumerate->add_flag("--connected", connected, "Connected graphs only");

  std::vector<const char*> argv{"toughlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kBadInput;
  }

  try {
    if (*tough) {
      return stream_graphs(common, in, out, err,
                           [&](const Graph& g, const std::string& g6) { return tough_line(common, g, g6); });
    }
    if (*mintough) {
      return stream_graphs(common, in, out, err, [&](const Graph& g, const std::string& g6) {
        return mintough_line(common, method, g, g6);
      });
    }
    if (*classify) {
      std::optional<GraphClass> cls;
      if (!filter.empty()) cls = parse_graph_class(filter);
      if (!cls && common.format == "tsv") {
        out << "graph6";
        for (GraphClass c : all_graph_classes()) out << "\t" << to_string(c);
        out << "\n";
      }
      return stream_graphs(common, in, out, err, [&](const Graph& g, const std::string& g6) {
        return classify_line(common, cls, g, g6);
      });
    }
    if (*named) {
      const std::string g6 = write_graph6(make_named(spec));
      if (common.format == "json") {
        out << Json{{"family", spec}, {"graph6", g6}}.dump() << "\n";
      } else {
        out << g6 << "\n";
      }
      return kOk;
    }
    if (*enumerate) {
      for (const Graph& g : enumerate_graphs(order, connected)) out << write_graph6(g) << "\n";
      return kOk;
    }

    VerifyOptions opts;
    opts.jobs = common.jobs;
    if (auto code = check_nmax(nmax, opts, err)) return *code;
    if (*probe) return emit_reports({probe_conjecture_cochordal_diam2(opts)}, common.format, out);

    std::optional<std::vector<Graph>> external;
    if (!verify_input.empty()) {
      external = read_graph_file(verify_input, in, err);
      if (!external) return kBadInput;
      opts.input = &*external;
    }
    std::vector<ScanClass> scans = all_scan_classes();
    if (!scan.empty()) {
      const auto c = parse_scan_class(scan);
      if (!c) {
        err << "unknown scan class '" << scan << "'\n";
        return kBadInput;
      }
      scans = {*c};
    }
    std::vector<Report> reports;
    const bool all = target == "all";
    for (TheoremId id : all_theorems()) {
      if (all || target == to_string(id)) reports.push_back(verify_theorem(id, opts));
    }
    if (all || target == "table1") reports.push_back(verify_table1(lmax.value_or(5)));
    if (all || target == "wheels") reports.push_back(verify_wheels(lmax.value_or(9)));
    if (all || target == "kriesell") {
      for (ScanClass c : scans) reports.push_back(kriesell_scan(c, opts));
    }
    if (all || target == "codiam") reports.push_back(verify_codiam_exclusions(opts));
    if (all || target == "probe") reports.push_back(probe_conjecture_cochordal_diam2(opts));
    if (reports.empty()) {
      err << "unknown verify target '" << target << "'\n";
      return kBadInput;
    }
    return emit_reports(reports, common.format, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const std::logic_error& e) {
    err << "internal consistency check failed: " << e.what() << "\n";
    return kDiscrepancy;
  }
}

}  // namespace toughlab::cli
