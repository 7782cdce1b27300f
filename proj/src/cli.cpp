#include "modgraph/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "modgraph/convergence.hpp"
#include "modgraph/errors.hpp"
#include "modgraph/graph_io.hpp"
#include "modgraph/report.hpp"
#include "modgraph/selftest.hpp"

namespace modgraph {

namespace {

struct AnalyzeArgs {
  std::vector<std::string> paths;
  bool probe = false;
  std::string format = "json";
  int max_edges = 20;
  std::string probe_csv;
};

struct ProbeArgs {
  std::string path;
  double s = 0;
  std::string method = "mc";
  std::size_t samples = 100000;
  std::vector<double> grid;
  std::string format = "json";
};

struct SearchArgs {
  int genus = 0;
  int max_edges = SearchLimits::kMaxEdges;
  std::string target;
};

struct FamilyArgs {
  std::optional<int> ngon;
  std::optional<int> doubled;
};

struct SelftestArgs {
  bool quick = false;
  int inject_fault = 0;
};

/// MODGRAPH_SEED, when set, replaces the probe seed.
std::uint64_t probe_seed() {
  const char* env = std::getenv("MODGRAPH_SEED");
  if (!env || !*env) return ProbeConfig{}.seed;
  std::size_t used = 0;
  unsigned long long seed = 0;
  try {
    seed = std::stoull(env, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(env).size()) throw GraphError("MODGRAPH_SEED must be a non-negative integer");
  return seed;
}

bool report_consistent(const ConvergenceReport& r) {
  return r.psi_routes_agree && (!r.has_cycles || r.contraction_verified);
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Multigraph> graphs;
  for (const std::string& path : a.paths) {
    try {
      graphs.push_back(read_graph_file(path));
    } catch (const ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kExitUsage;
    }
  }

  AnalyzeOptions options;
  options.with_probe = a.probe;
  options.max_edges = a.max_edges;
  options.probe.seed = probe_seed();

  std::ostringstream buffer, probes;
  bool consistent = true;
  if (a.format == "csv") buffer << report_csv_header() << '\n';
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    std::optional<ConvergenceReport> report;
    try {
      report = analyze(graphs[i], options);
    } catch (const GuardError& e) {
      err << "error: " << a.paths[i] << ": " << e.what() << '\n';
      return kExitUsage;
    } catch (const InternalError& e) {
      err << "check failed: " << a.paths[i] << ": " << e.what() << '\n';
      return kExitCheckFailed;
    }
    const ConvergenceReport& r = *report;
    if (!report_consistent(r)) {
      consistent = false;
      err << "check failed: " << a.paths[i] << ": "
          << (r.psi_routes_agree ? "optimality recheck: " + r.contraction_error : "Kirchhoff routes disagree") << '\n';
    }
    if (a.format == "csv") {
      buffer << report_csv_row(r, a.paths[i]) << '\n';
    } else if (graphs.size() == 1) {
      buffer << report_to_json(r, a.paths[i]).dump(2) << '\n';
    } else {
      buffer << report_to_json(r, a.paths[i]).dump() << '\n';
    }
    if (!a.probe_csv.empty()) {
      std::string rows = probe_csv(r, a.paths[i]);
      probes << (i == 0 ? rows : rows.substr(rows.find('\n') + 1));
    }
  }
  if (!a.probe_csv.empty()) {
    std::ofstream file(a.probe_csv);
    file << probes.str();
    if (!file) {
      err << "error: cannot write " << a.probe_csv << '\n';
      return kExitUsage;
    }
  }
  out << buffer.str();
  return consistent ? kExitOk : kExitCheckFailed;
}

int cmd_probe(const ProbeArgs& a, std::ostream& out, std::ostream& err) {
  Multigraph g = read_graph_file(a.path);
  const BridgeReduction reduction = contract_bridges(g);
  if (reduction.core.edge_count() == 0) {
    err << "error: " << a.path << ": graph has no cycles; nothing to probe\n";
    return kExitUsage;
  }
  ProbeConfig cfg;
  cfg.s = a.s;
  cfg.samples = a.samples;
  cfg.seed = probe_seed();
  cfg.method = a.method == "quad" ? ProbeMethod::tensor_quadrature : ProbeMethod::monte_carlo;
  if (!a.grid.empty()) cfg.r_grid = a.grid;
  const GrowthVerdict v = truncated_J(reduction.core, cfg);

  std::ostringstream buffer;
  if (a.format == "csv") {
    buffer << "R,F,stderr\n";
    buffer.precision(17);
    for (std::size_t k = 0; k < v.r_grid.size(); ++k)
      buffer << v.r_grid[k] << ',' << v.values[k] << ',' << v.stderrs[k] << '\n';
  } else {
    nlohmann::ordered_json doc;
    doc["schema"] = kReportSchema;
    doc["input"] = a.path;
    doc["core_edges"] = reduction.core.edge_count();
    doc["seed"] = cfg.seed;
    doc["samples"] = cfg.samples;
    const nlohmann::ordered_json growth = growth_json(v, a.s);
    for (const auto& [key, value] : growth.items()) doc[key] = value;
    buffer << doc.dump(2) << '\n';
  }
  out << buffer.str();
  return kExitOk;
}

int cmd_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  mpq_class target;
  if (target.set_str(a.target, 10) != 0 || target.get_den() == 0) {
    err << "error: --target must be a rational such as 5 or 3/2\n";
    return kExitUsage;
  }
  target.canonicalize();
  const auto hits = search_divergent(a.genus, a.max_edges, target);
  std::ostringstream buffer;
  for (const SearchHit& hit : hits) buffer << search_hit_json(hit).dump() << '\n';
  out << buffer.str();
  if (hits.empty()) {
    err << "no graphs found\n";
    return kExitNoHits;
  }
  return kExitOk;
}

int cmd_families(const FamilyArgs& a, std::ostream& out) {
  const Multigraph g = a.ngon ? make_ngon(*a.ngon) : make_doubled_2ngon(*a.doubled);
  out << graph_to_json(g).dump(2) << '\n';
  return kExitOk;
}

int cmd_selftest(const SelftestArgs& a, std::ostream& out) {
  SelftestOptions options;
  options.quick = a.quick;
  options.inject_fault = a.inject_fault;
  options.probe_seed = probe_seed();
  const auto results = run_selftest(options, &out);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return !r.pass; });
  out << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << '\n';
  return failed ? kExitCheckFailed : kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convergence thresholds of graph integrals from Kirchhoff polynomials", "modgraph"};
  app.require_subcommand(1);

  AnalyzeArgs analyze_args;
  auto* analyze = app.add_subcommand("analyze", "Threshold, certificates and optimal contraction of graph files");
  analyze->add_option("paths", analyze_args.paths, "Graph files (JSON or edge list)")->required();
  analyze->add_flag("--probe", analyze_args.probe, "Run the numeric probe at s = c and s = c + 1/2");
  analyze->add_option("--format", analyze_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  analyze->add_option("--max-edges", analyze_args.max_edges, "Refuse graphs with more edges")
      ->check(CLI::Range(1, 20));
  analyze->add_option("--probe-csv", analyze_args.probe_csv, "Also write (R, F, stderr) rows to this file");

  ProbeArgs probe_args;
  auto* probe = app.add_subcommand("probe", "Growth of the truncated integral for one s");
  probe->add_option("path", probe_args.path, "Graph file")->required();
  probe->add_option("--s", probe_args.s, "Real exponent")->required();
  probe->add_option("--method", probe_args.method, "mc or quad")->check(CLI::IsMember({"mc", "quad"}));
  probe->add_option("--samples", probe_args.samples, "Samples per shell (Monte Carlo)")
      ->check(CLI::Range(std::size_t{1000}, std::size_t{100000000}));
  probe->add_option("--grid", probe_args.grid, "Box sizes R_k")->delimiter(',');
  probe->add_option("--format", probe_args.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Stable bridgeless graphs of a genus with large threshold");
  search->add_option("--genus", search_args.genus, "Betti number, 2..7")->required();
  search->add_option("--max-edges", search_args.max_edges, "At most 15");
  search->add_option("--target", search_args.target, "Minimum threshold, e.g. 5 or 3/2")->required();

  FamilyArgs family_args;
  auto* families = app.add_subcommand("families", "Emit a graph of a standard family");
  auto* ngon = families->add_option("--ngon", family_args.ngon, "Cycle on N vertices");
  auto* doubled = families->add_option("--doubled", family_args.doubled, "2N-gon with every other side doubled");
  ngon->excludes(doubled);
  families->require_option(1);

  SelftestArgs selftest_args;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks");
  selftest->add_flag("--quick", selftest_args.quick, "Skip the numeric probes");
  selftest->add_option("--inject-fault", selftest_args.inject_fault, "Corrupt one criterion on purpose")
      ->check(CLI::Range(0, 11));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_args, out, err);
    if (*probe) return cmd_probe(probe_args, out, err);
    if (*search) return cmd_search(search_args, out, err);
    if (*families) return cmd_families(family_args, out);
    if (*selftest) return cmd_selftest(selftest_args, out);
  } catch (const InternalError& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace modgraph
