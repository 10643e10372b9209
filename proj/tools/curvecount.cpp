// curvecount: invariants and identity checks for nodal curves given by dual graphs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "curvecount/cache.hpp"
#include "curvecount/catalog.hpp"
#include "curvecount/graph_io.hpp"
#include "curvecount/report.hpp"
#include "curvecount/verify.hpp"

using namespace curvecount;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

NamedGraph load_graph(const std::string& arg) {
  if (auto g = catalog_graph(arg)) return {arg, *g};
  if (!std::filesystem::is_regular_file(arg)) throw UsageError("no catalog graph or file named '" + arg + "'");
  std::ifstream in(arg, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return {std::filesystem::path(arg).stem().string(), parse_graph_json(buf.str())};
  } catch (const ParseError& e) {
    throw UsageError(arg + ": " + e.what());
  }
}

int cmd_invariants(const std::string& target, const std::string& format, bool no_cache) {
  const NamedGraph g = load_graph(target);
  std::string report;
  const std::string key = invariants_cache_key(g.graph);
  const ResultCache cache = ResultCache::from_environment();
  if (!no_cache) {
    if (auto hit = cache.get(key)) report = *hit;
  }
  if (report.empty()) {
    report = invariants_json(g.graph);
    if (!no_cache) {
      try {
        cache.put(key, report);
      } catch (const std::exception& e) {
        std::cerr << "warning: cache not written: " << e.what() << "\n";
      }
    }
  }
  std::cout << (format == "json" ? report : invariants_text(report));
  return 0;
}

struct VerifyArgs {
  std::vector<std::string> graphs;
  std::size_t random = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  std::string format = "text";
  std::size_t max_edges = 10;
  unsigned polarizations = 50;
  bool timings = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.max_edges > kEnumerationLimit) throw UsageError("--max-edges is limited to 24");
  SuiteOptions options;
  options.seed = args.seed;
  options.polarizations = args.polarizations;
  for (const auto& spec : args.checks) {
    std::stringstream parts(spec);
    std::string name;
    while (std::getline(parts, name, ',')) {
      if (name == "all") continue;
      if (!is_check_name(name)) throw UsageError("unknown check '" + name + "'");
      options.names.push_back(name);
    }
  }
  std::vector<NamedGraph> graphs;
  if (args.graphs.empty()) graphs = catalog_graphs();
  for (const auto& arg : args.graphs) graphs.push_back(load_graph(arg));
  if (args.random > 0) {
    auto extra = random_graphs(args.seed, args.random, args.max_edges);
    graphs.insert(graphs.end(), extra.begin(), extra.end());
  }
  const auto results = run_suite(graphs, options);
  std::cout << (args.format == "json" ? json_report(results, args.timings) : text_report(results, args.timings));
  return summarize(results).failed == 0 ? 0 : kExitFailures;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of nodal curves from their dual graphs"};
  app.require_subcommand(1);

  std::string target;
  std::string format = "text";
  bool no_cache = false;
  auto* inv = app.add_subcommand("invariants", "Print the invariants of a graph");
  inv->add_option("graph", target, "Catalog name or graph JSON file")->required();
  inv->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  inv->add_flag("--no-cache", no_cache, "Recompute without reading or writing the cache");

  VerifyArgs vargs;
  auto* ver = app.add_subcommand("verify", "Run identity checks");
  ver->add_option("graphs", vargs.graphs, "Catalog names or graph JSON files (default: the catalog)");
  ver->add_option("--random", vargs.random, "Number of random graphs to add");
  ver->add_option("--seed", vargs.seed, "Seed for random graphs and polarizations");
  ver->add_option("--check", vargs.checks, "Check name, comma separated list, or all");
  ver->add_option("--format", vargs.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  ver->add_option("--max-edges", vargs.max_edges, "Edge bound for random graphs (at most 24)");
  ver->add_option("--polarizations", vargs.polarizations, "Random polarizations per graph for multidegrees");
  ver->add_flag("--timings", vargs.timings, "Include elapsed times in the report");

  std::string export_target;
  auto* exp = app.add_subcommand("export", "Print the canonical JSON of a graph");
  exp->add_option("graph", export_target, "Catalog name or graph JSON file")->required();

  app.add_subcommand("catalog", "List catalog graphs and check names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(target, format, no_cache);
    if (ver->parsed()) return cmd_verify(vargs);
    if (exp->parsed()) {
      std::cout << to_graph_json(load_graph(export_target).graph) << "\n";
      return 0;
    }
    std::cout << "graphs:";
    for (const auto& name : catalog_names()) std::cout << " " << name;
    std::cout << "\nchecks:";
    for (const auto& name : check_names()) std::cout << " " << name;
    std::cout << "\n";
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
