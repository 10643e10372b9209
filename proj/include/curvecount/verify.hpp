#pragma once

// Named identity checks and batch runs over graphs.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "curvecount/check_result.hpp"
#include "curvecount/graph.hpp"

namespace curvecount {

/// Unknown check name.
class UnknownCheckError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CheckOptions {
  /// Seeds the random polarizations of the multidegrees check.
  std::uint64_t seed = 0;
  unsigned polarizations = 50;
};

/// All check names in sorted order.
const std::vector<std::string>& check_names();
bool is_check_name(std::string_view name);

/// Runs one check. Precondition failures come back as skips; any other
/// exception propagates.
CheckResult run_check(std::string_view name, const Multigraph& g, const std::string& graph_id,
                      const CheckOptions& options = {});

struct NamedGraph {
  std::string id;
  Multigraph graph;
};

/// The catalog as named graphs, in catalog order.
std::vector<NamedGraph> catalog_graphs();
/// `count` random graphs (connected or not, rational components) with ids random-<seed>-<k>.
std::vector<NamedGraph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_edges,
                                      bool connected = false);

struct SuiteOptions {
  /// Empty means every check.
  std::vector<std::string> names;
  std::uint64_t seed = 0;
  unsigned polarizations = 50;
};

/// Runs every requested check on every graph. Results are sorted by check
/// name, then graph id.
std::vector<CheckResult> run_suite(const std::vector<NamedGraph>& graphs, const SuiteOptions& options);

struct SuiteSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};
SuiteSummary summarize(const std::vector<CheckResult>& results);

/// One line per result plus a summary line. Timings only when asked for,
/// so that reports are reproducible.
std::string text_report(const std::vector<CheckResult>& results, bool timings = false);
std::string json_report(const std::vector<CheckResult>& results, bool timings = false);

}  // namespace curvecount
