#include "domgraph/cli.hpp"

#include "domgraph/domination.hpp"
#include "domgraph/errors.hpp"
#include "domgraph/reconfig.hpp"
#include "domgraph/theorems.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

namespace domgraph {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int parse_k(const std::string& text, int n) {
  if (text == "max") return n;
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("--k expects an integer or 'max'");
  return k;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n expects <a>..<b>");
  }
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw UsageError("expected u,v");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw UsageError("expected u,v");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// ----------------------------------------------------------------- analyze

struct AnalyzeArgs {
  std::string graph;
  std::string k;
  bool json = false;
  std::string dot;
  bool circuit = false;
  std::string labels = "set";
};

int run_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const FamilySpec spec = parse_graph_spec(a.graph);
  const SeedGraph g = make_family(spec);
  const int k = parse_k(a.k, g.order());
  const LabelStyle style = a.labels == "bits" ? LabelStyle::bits : LabelStyle::set;

  const DominationProfile profile = domination_profile(g);
  const ReconfigGraph r = build_reconfig(g, k);
  const EulerReport rep = eulerian_report(r);
  const auto histogram = degree_histogram(r);
  const std::optional<bool> expected = try_expected_eulerian(spec, k);
  std::optional<std::vector<std::size_t>> circuit;
  if (a.circuit && rep.is_eulerian && rep.edge_count > 0) circuit = euler_circuit(r);

  std::ostringstream text;
  if (a.json) {
    json doc;
    doc["seed"] = {{"spec", spec.to_string()},
                   {"n", g.order()},
                   {"edges", g.edge_count()},
                   {"gamma", profile.gamma},
                   {"upper_gamma", profile.upper_gamma},
                   {"well_dominated", profile.well_dominated},
                   {"universal_threshold", profile.universal_threshold},
                   {"dominating_set_count", profile.total_count}};
    doc["k"] = k;
    json hist = json::array();
    for (std::size_t d = 0; d < histogram.size(); ++d)
      if (histogram[d]) hist.push_back({{"degree", d}, {"count", histogram[d]}});
    doc["reconfig"] = {{"nodes", rep.node_count}, {"edges", rep.edge_count}, {"degree_histogram", hist}};
    json witnesses = json::array();
    for (std::size_t i : rep.odd_degree_nodes)
      witnesses.push_back({{"node", r.node_label(i, style)}, {"degree", r.degree(i)}});
    doc["euler"] = {{"is_eulerian", rep.is_eulerian},
                    {"is_connected", rep.is_connected},
                    {"odd_degree_count", rep.odd_degree_count},
                    {"odd_degree_witnesses", witnesses},
                    {"isolated_count", rep.isolated_count},
                    {"component_count", rep.component_count},
                    {"nontrivial_component_count", rep.nontrivial_component_count}};
    if (expected) {
      doc["expected"] = *expected;
      doc["match"] = *expected == rep.is_eulerian;
    }
    if (circuit) {
      json walk = json::array();
      for (std::size_t i : *circuit) walk.push_back(r.node_label(i, style));
      doc["circuit"] = walk;
    }
    text << doc.dump(2) << '\n';
  } else {
    text << "seed        " << spec.to_string() << "  (n=" << g.order() << ", edges=" << g.edge_count()
         << ")\n";
    text << "domination  gamma=" << profile.gamma << " Gamma=" << profile.upper_gamma
         << " well_dominated=" << (profile.well_dominated ? "yes" : "no")
         << " universal_threshold=" << profile.universal_threshold
         << " dominating_sets=" << profile.total_count << '\n';
    text << "D_" << k << "       nodes=" << rep.node_count << " edges=" << rep.edge_count
         << " components=" << rep.component_count << " nontrivial=" << rep.nontrivial_component_count
         << " isolated=" << rep.isolated_count << '\n';
    text << "degrees    ";
    for (std::size_t d = 0; d < histogram.size(); ++d)
      if (histogram[d]) text << ' ' << d << ':' << histogram[d];
    text << '\n';
    text << "odd nodes   " << rep.odd_degree_count;
    for (std::size_t i : rep.odd_degree_nodes)
      text << ' ' << r.node_label(i, style) << "(deg " << r.degree(i) << ')';
    text << '\n';
    text << "eulerian    " << (rep.is_eulerian ? "yes" : "no") << '\n';
    if (expected)
      text << "expected    " << (*expected ? "yes" : "no") << (*expected == rep.is_eulerian ? " (match)" : " (MISMATCH)")
           << '\n';
    if (circuit) {
      text << "circuit    ";
      for (std::size_t i : *circuit) text << ' ' << r.node_label(i, style);
      text << '\n';
    } else if (a.circuit) {
      text << "circuit     none (" << (rep.is_eulerian ? "no edges" : "not eulerian") << ")\n";
    }
  }

  if (!a.dot.empty()) write_file(a.dot, to_dot(r, style));
  out << text.str();
  return expected && *expected != rep.is_eulerian ? kExitClaimFailed : kExitOk;
}

// -------------------------------------------------------------------- scan

struct ScanArgs {
  std::string family;
  std::string n;
  std::string k = "range";
  std::string filter;
  std::string csv;
  int jobs = 1;
};

struct ScanRow {
  std::string line;
  bool eulerian = false;
  bool mismatch = false;
};

std::vector<FamilySpec> scan_instances(const std::string& family, int lo, int hi) {
  std::vector<FamilySpec> specs;
  for (int n = std::max(lo, 1); n <= hi; ++n) {
    if (family == "path") specs.push_back(FamilySpec::path(n));
    else if (family == "cycle" && n >= 3) specs.push_back(FamilySpec::cycle(n));
    else if (family == "complete" || family == "complete_k") specs.push_back(FamilySpec::complete(n));
    else if (family == "biclique")
      for (int m = 1; m <= n; ++m) specs.push_back(FamilySpec::complete_bipartite(m, n));
    else if (family == "cocktail" && n >= 4 && n % 2 == 0) specs.push_back(FamilySpec::cocktail(n));
    else if (family == "corona" && n >= 2)
      for (const SeedGraph& inner : enumerate_labeled_graphs(n, false))
        specs.push_back(FamilySpec::corona(FamilySpec::explicit_graph(inner)));
  }
  return specs;
}

int run_scan(const ScanArgs& a, std::ostream& out) {
  const auto [lo, hi] = parse_range(a.n);
  if (a.k != "range" && a.k != "all") throw UsageError("--k accepts only 'all'");
  if (!a.filter.empty() && a.filter != "eulerian") throw UsageError("--filter accepts only 'eulerian'");
  if (a.family == "corona" && hi > kMaxEnumerationOrder)
    throw Error(ErrorCode::BoundExceeded, "corona scans enumerate inner graphs up to n = 7");

  struct Case {
    FamilySpec spec;
    int k;
    int gamma;
  };
  std::vector<Case> cases;
  for (const FamilySpec& spec : scan_instances(a.family, lo, hi)) {
    const int n = family_order(spec);
    const int gamma = domination_profile(make_family(spec)).gamma;
    const int first = a.k == "all" ? gamma : gamma + 1;
    const int last = a.k == "all" ? n : n - 1;
    for (int k = first; k <= last; ++k) cases.push_back({spec, k, gamma});
  }

  std::vector<ScanRow> rows(cases.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Case& c = cases[i];
      const SeedGraph g = make_family(c.spec);
      const EulerReport rep = eulerian_report(build_reconfig(g, c.k));
      const std::optional<bool> expected = try_expected_eulerian(c.spec, c.k);
      std::ostringstream line;
      line << c.spec.to_string() << ',' << g.order() << ',' << c.k << ',' << c.gamma << ','
           << rep.node_count << ',' << rep.edge_count << ',' << rep.odd_degree_count << ','
           << rep.nontrivial_component_count << ',' << (rep.is_eulerian ? "true" : "false") << ',';
      if (expected)
        line << (*expected ? "true" : "false") << ',' << (*expected == rep.is_eulerian ? "true" : "false");
      else
        line << ',';
      rows[i] = {line.str(), rep.is_eulerian, expected && *expected != rep.is_eulerian};
    }
  };
  const std::size_t jobs = static_cast<std::size_t>(std::clamp(a.jobs, 1, 256));
  if (jobs == 1) {
    work(0, rows.size());
  } else {
    std::vector<std::thread> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.emplace_back(work, rows.size() * w / jobs, rows.size() * (w + 1) / jobs);
    for (auto& t : workers) t.join();
  }

  std::ostringstream csv;
  csv << "family,n,k,gamma,nodes,edges,odd_degree_count,nontrivial_components,is_eulerian,expected,match\n";
  bool mismatch = false;
  for (const ScanRow& row : rows) {
    mismatch |= row.mismatch;
    if (a.filter == "eulerian" && !row.eulerian) continue;
    csv << row.line << '\n';
  }
  if (a.csv.empty()) out << csv.str();
  else write_file(a.csv, csv.str());
  return mismatch ? kExitClaimFailed : kExitOk;
}

// ------------------------------------------------------------------ verify

struct VerifyArgs {
  std::string claim;
  int max_n = 0;
  int jobs = 1;
  bool json = false;
  bool audit = false;
  std::string plant_seed;
  std::string plant_toggle;
};

json report_json(const TheoremReport& r) {
  json bad = json::array();
  for (const auto& c : r.counterexamples) {
    json entry = {{"seed", c.seed}, {"expected", c.expected}, {"computed", c.computed}};
    entry["k"] = c.k ? json(*c.k) : json(nullptr);
    bad.push_back(entry);
  }
  json found = json::array();
  for (const auto& i : r.eulerian_instances) found.push_back({{"seed", i.seed}, {"k", i.k}});
  return {{"claim", std::string(to_string(r.claim))},
          {"bounds", r.bounds},
          {"instances_checked", r.instances_checked},
          {"instances_skipped", r.instances_skipped},
          {"passed", r.passed},
          {"counterexamples", bad},
          {"counterexample_total", r.counterexample_total},
          {"eulerian_instances", found},
          {"eulerian_total", r.eulerian_total},
          {"graphs_audited", r.graphs_audited},
          {"pairwise_audited", r.pairwise_audited}};
}

void report_text(const TheoremReport& r, std::ostream& text) {
  text << (r.passed ? "PASS " : "FAIL ") << to_string(r.claim) << "  instances=" << r.instances_checked;
  if (r.instances_skipped) text << " skipped=" << r.instances_skipped;
  if (r.graphs_audited) text << " audited=" << r.graphs_audited;
  text << "  eulerian=" << r.eulerian_total << "  (" << r.bounds << ")  " << std::fixed
       << std::setprecision(2) << r.elapsed.count() << "s\n";
  std::size_t shown = 0;
  for (const auto& i : r.eulerian_instances) {
    if (++shown > 8) {
      text << "    ...\n";
      break;
    }
    text << "    eulerian: " << i.seed << " k=" << i.k << '\n';
  }
  for (const auto& c : r.counterexamples)
    text << "    counterexample: " << c.seed << (c.k ? " k=" + std::to_string(*c.k) : std::string())
         << "  expected " << c.expected << ", computed " << c.computed << '\n';
  if (r.counterexample_total > r.counterexamples.size())
    text << "    (" << r.counterexample_total << " counterexamples in total)\n";
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<ClaimId> claims;
  if (a.claim == "all") claims = all_claims();
  else claims.push_back(parse_claim(a.claim));

  VerifyOptions options;
  options.jobs = std::max(1, a.jobs);
  options.audit = a.audit;
  if (!a.plant_seed.empty() || !a.plant_toggle.empty()) {
    if (a.plant_seed.empty() || a.plant_toggle.empty())
      throw UsageError("--plant-seed and --plant-toggle go together");
    const auto [u, v] = parse_pair(a.plant_toggle);
    options.plant = PlantedMutation{make_family(parse_graph_spec(a.plant_seed)), u, v};
    SeedGraph probe = options.plant->target;
    probe.toggle_edge(u, v);  // validates the endpoints up front
  }

  std::ostringstream text;
  json docs = json::array();
  bool failed = false;
  for (ClaimId claim : claims) {
    VerifyOptions o = options;
    if (a.max_n > 0) o.max_n = claims.size() > 1 ? std::min(a.max_n, hard_max_n(claim)) : a.max_n;
    const TheoremReport report = verify_claim(claim, o);
    failed |= !report.passed;
    if (a.json) docs.push_back(report_json(report));
    else report_text(report, text);
  }
  if (a.json) out << docs.dump(2) << '\n';
  else out << text.str();
  return failed ? kExitClaimFailed : kExitOk;
}

// ------------------------------------------------------------------ export

struct ExportArgs {
  std::string graph;
  std::string k;
  std::string format;
  std::string labels = "set";
  std::string out;
};

int run_export(const ExportArgs& a, std::ostream& out) {
  const SeedGraph g = make_family(parse_graph_spec(a.graph));
  std::string text;
  if (a.format == "g6") {
    text = to_graph6(g) + "\n";
  } else {
    if (a.k.empty()) throw UsageError("--k is required for dot and csv exports");
    const ReconfigGraph r = build_reconfig(g, parse_k(a.k, g.order()));
    text = a.format == "dot" ? to_dot(r, a.labels == "bits" ? LabelStyle::bits : LabelStyle::set)
                             : to_adjacency_csv(r);
  }
  if (a.out.empty()) out << text;
  else write_file(a.out, text);
  return kExitOk;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::CapacityExceeded:
    case ErrorCode::ReconfigTooLarge:
      return kExitCapacity;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Build k-dominating graphs, test them for Eulerian structure, and verify the "
               "characterisation claims by exhaustive search."};
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Analyse D_k for one seed graph");
  cmd_analyze->add_option("--graph", analyze.graph, "Graph spec, e.g. path:4 or g6:Ch")->required();
  cmd_analyze->add_option("--k", analyze.k, "Cardinality bound or 'max'")->required();
  cmd_analyze->add_flag("--json", analyze.json, "Emit the report as JSON");
  cmd_analyze->add_option("--dot", analyze.dot, "Also write D_k as DOT to this path");
  cmd_analyze->add_flag("--circuit", analyze.circuit, "Append an Euler circuit when one exists");
  cmd_analyze->add_option("--labels", analyze.labels, "Node labels: set or bits")
      ->check(CLI::IsMember({"set", "bits"}));

  ScanArgs scan;
  auto* cmd_scan = app.add_subcommand("scan", "Sweep a family over n and k");
  cmd_scan->add_option("--family", scan.family, "Family to sweep")
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "complete", "biclique", "cocktail", "complete_k", "corona"}));
  cmd_scan->add_option("--n", scan.n, "Vertex range <a>..<b>")->required();
  cmd_scan->add_option("--k", scan.k, "'all' for gamma <= k <= n (default gamma < k < n)");
  cmd_scan->add_option("--filter", scan.filter, "'eulerian' keeps only Eulerian rows");
  cmd_scan->add_option("--csv", scan.csv, "Write rows to this path instead of stdout");
  cmd_scan->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Exhaustively verify one claim or all of them");
  cmd_verify->add_option("--claim", verify.claim, "Claim id or 'all'")->required();
  cmd_verify->add_option("--max-n", verify.max_n, "Upper bound on n")->check(CLI::PositiveNumber);
  cmd_verify->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--json", verify.json, "Emit reports as JSON");
  cmd_verify->add_flag("--audit", verify.audit, "Also audit every D_k built for structural invariants");
  cmd_verify->add_option("--plant-seed", verify.plant_seed,
                         "Negative control: seed whose D(G) is built from a mutated copy");
  cmd_verify->add_option("--plant-toggle", verify.plant_toggle, "Edge u,v flipped in the planted seed");

  ExportArgs exp;
  auto* cmd_export = app.add_subcommand("export", "Export D_k (dot, csv) or the seed (g6)");
  cmd_export->add_option("--graph", exp.graph, "Graph spec")->required();
  cmd_export->add_option("--k", exp.k, "Cardinality bound or 'max'");
  cmd_export->add_option("--format", exp.format, "dot, csv or g6")
      ->required()
      ->check(CLI::IsMember({"dot", "csv", "g6"}));
  cmd_export->add_option("--labels", exp.labels, "DOT node labels: set or bits")
      ->check(CLI::IsMember({"set", "bits"}));
  cmd_export->add_option("--out", exp.out, "Write to this path instead of stdout");

  std::vector<const char*> argv{"domgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_analyze->parsed()) return run_analyze(analyze, out);
    if (cmd_scan->parsed()) return run_scan(scan, out);
    if (cmd_verify->parsed()) return run_verify(verify, out);
    if (cmd_export->parsed()) return run_export(exp, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace domgraph
