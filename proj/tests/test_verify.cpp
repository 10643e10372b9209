#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include <json.hpp>

#include "curvecount/cache.hpp"
#include "curvecount/catalog.hpp"
#include "curvecount/graph_gen.hpp"
#include "curvecount/report.hpp"
#include "curvecount/verify.hpp"

using namespace curvecount;

namespace {

Multigraph named(const char* name) { return *catalog_graph(name); }

}  // namespace

TEST_CASE("check names") {
  CHECK(check_names().size() == 13);
  CHECK(std::is_sorted(check_names().begin(), check_names().end()));
  CHECK(is_check_name("nnbar"));
  CHECK_FALSE(is_check_name("nope"));
  CHECK_THROWS_AS(run_check("nope", named("node"), "node"), UnknownCheckError);
}

TEST_CASE("run_check examples") {
  const CheckResult hilb = run_check("nodalhilb", named("pair-of-lines"), "pair-of-lines");
  CHECK(hilb.status == CheckStatus::Pass);
  CHECK(hilb.diff == "0");
  CHECK(hilb.lhs.find("{v1,v2}: (q*L - q^2*L + q^3*L^2) / ((1-q)^2*(1-q*L)^2)") != std::string::npos);

  const CheckResult jac = run_check("jacobian-strata", named("banana"), "banana");
  CHECK(jac.status == CheckStatus::Pass);
  CHECK(jac.lhs == "2*L");
  CHECK(jac.rhs == "2*L");

  const CheckResult cks = run_check("nodaljac-cks", named("node"), "node");
  CHECK(cks.status == CheckStatus::Pass);
  CHECK(cks.lhs == "1 - q + q^2*L");
  CHECK(cks.rhs == "1 - q + q^2*L");
  CHECK(cks.graph == "node");
}

TEST_CASE("every check passes or skips on the catalog") {
  SuiteOptions options;
  options.polarizations = 10;
  const auto results = run_suite(catalog_graphs(), options);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.graph);
    CAPTURE(r.diff);
    CAPTURE(r.detail);
    CHECK(r.status != CheckStatus::Fail);
    CHECK((r.status == CheckStatus::Pass) == (r.diff == "0"));
  }
  CHECK(summarize(results).failed == 0);
}

TEST_CASE("preconditions are skips") {
  const CheckResult r = run_check("jacobian-strata", named("banana-genus"), "banana-genus");
  CHECK(r.status == CheckStatus::Skip);
  CHECK_FALSE(r.detail.empty());
  CHECK(run_check("severi", named("banana-plus-point"), "x").status == CheckStatus::Skip);
  CHECK(run_check("multidegrees", named("empty"), "empty").status == CheckStatus::Skip);
  CHECK(run_check("weights-q1", named("banana-genus"), "banana-genus").status == CheckStatus::Pass);
}

TEST_CASE("suite order and reproducibility") {
  std::vector<NamedGraph> graphs = random_graphs(3, 6, 6);
  graphs.push_back({"banana", named("banana")});
  SuiteOptions options;
  options.names = {"subsum", "severi", "nnbar"};
  options.seed = 3;
  const auto a = run_suite(graphs, options);
  const auto b = run_suite(random_graphs(3, 6, 6), options);
  for (std::size_t k = 1; k < a.size(); ++k) {
    CHECK(std::tie(a[k - 1].name, a[k - 1].graph) <= std::tie(a[k].name, a[k].graph));
  }
  CHECK(json_report(a) == json_report(run_suite(graphs, options)));
  CHECK(text_report(a) == text_report(run_suite(graphs, options)));
  CHECK(b.size() == 18);
  CHECK_THROWS_AS(run_suite(graphs, SuiteOptions{{"bogus"}, 0, 1}), UnknownCheckError);

  const auto parsed = nlohmann::json::parse(json_report(a));
  CHECK(parsed.size() == a.size());
  CHECK(parsed[0].contains("diff"));
  CHECK_FALSE(parsed[0].contains("elapsed_ms"));
  CHECK(nlohmann::json::parse(json_report(a, true))[0].contains("elapsed_ms"));
}

TEST_CASE("random subsum suite") {
  SuiteOptions options;
  options.names = {"subsum"};
  const auto results = run_suite(random_graphs(11, 200, 10, true), options);
  CHECK(results.size() == 200);
  CHECK(summarize(results).passed == 200);
}

TEST_CASE("invariants report") {
  const std::string banana = invariants_text(invariants_json(named("banana")));
  CHECK(banana.find("delta_a: 1\n") != std::string::npos);
  const std::string node = invariants_text(invariants_json(named("node")));
  CHECK(node.find("perverse series: 1 - q + q^2*L\n") != std::string::npos);
  const auto tri = nlohmann::json::parse(invariants_json(named("triangle")));
  CHECK(tri["n"] == nlohmann::json::array({3, 1}));
  CHECK(tri["severi"]["nbar"] == nlohmann::json::array({1, 3, 3, 1}));
  const auto genus = nlohmann::json::parse(invariants_json(named("triangle-genus")));
  CHECK(genus["jacobian_class"].is_null());
  CHECK(genus["unavailable"].contains("jacobian_class"));
  CHECK(genus["jacobian_weight_poly"].is_string());
}

TEST_CASE("cache") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const auto dir = std::filesystem::temp_directory_path() / "curvecount-cache-test";
  std::filesystem::remove_all(dir);
  const ResultCache cache(dir);
  const Multigraph g = named("theta");
  const std::string key = invariants_cache_key(g);
  CHECK_FALSE(cache.get(key).has_value());
  const std::string fresh = invariants_json(g);
  cache.put(key, fresh);
  REQUIRE(cache.get(key).has_value());
  CHECK(*cache.get(key) == fresh);
  CHECK(*cache.get(key) == invariants_json(g));
  CHECK(cache.path_for(key).parent_path() == dir);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : std::filesystem::directory_iterator(dir)) ++files;
  CHECK(files == 1);

  ::setenv("CURVECOUNT_CACHE", dir.c_str(), 1);
  CHECK(ResultCache::from_environment().dir() == dir);
  ::unsetenv("CURVECOUNT_CACHE");
  std::filesystem::remove_all(dir);
}
