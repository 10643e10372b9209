#include "curvecount/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "curvecount/catalog.hpp"
#include "curvecount/graph_gen.hpp"
#include "curvecount/homology.hpp"
#include "curvecount/invariants.hpp"

namespace curvecount {

namespace {

constexpr std::size_t kWedgeBettiLimit = 5;
constexpr std::size_t kComplexBettiLimit = 8;
constexpr std::size_t kSubsetEdgeLimit = 16;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::string render_list(const std::vector<BigInt>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ", ";
    out += xs[k].get_str();
  }
  return out + "]";
}

std::string subset_label(const Multigraph& g, VertexSet s) {
  std::string out = "{";
  for (std::size_t v : s.indices()) {
    if (out.size() > 1) out += ",";
    out += g.vertices()[v].id;
  }
  return out + "}";
}

std::string render_class(const Multigraph& g, const VertexClass& f) {
  std::string out;
  for (const auto& [s, c] : f.terms()) {
    if (!out.empty()) out += "; ";
    out += subset_label(g, s) + ": " + c.render();
  }
  return out.empty() ? "0" : out;
}

CheckResult compare_lists(std::string name, const std::vector<BigInt>& lhs, const std::vector<BigInt>& rhs) {
  CheckResult r;
  r.name = std::move(name);
  r.lhs = render_list(lhs);
  r.rhs = render_list(rhs);
  std::vector<BigInt> diff;
  bool zero = lhs.size() == rhs.size();
  for (std::size_t k = 0; k < std::max(lhs.size(), rhs.size()); ++k) {
    const BigInt a = k < lhs.size() ? lhs[k] : BigInt(0);
    const BigInt b = k < rhs.size() ? rhs[k] : BigInt(0);
    diff.push_back(a - b);
    if (a != b) zero = false;
  }
  r.diff = zero ? "0" : render_list(diff);
  r.status = zero ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// --- individual checks ------------------------------------------------------

CheckResult check_nodaljac_cks(const Multigraph& g, const CheckOptions&) {
  require(first_betti(g) <= kComplexBettiLimit, "the brute-force complex is limited to h^1 <= 8");
  const RationalQL brute = cks_stalk_class(g);
  const RationalQL closed = perverse_series(g);
  CheckResult r = compare_values("nodaljac-cks", brute, closed);
  const RationalQL product = ic_stalk_product(g);
  if (r.status == CheckStatus::Pass && !(product == closed)) {
    r.status = CheckStatus::Fail;
    r.diff = (product - closed).render();
    r.detail = "stalk product differs from the closed form";
  }
  return r;
}

CheckResult check_nodalhilb(const Multigraph& g, const CheckOptions&) {
  const VertexClass lhs = hilbert_vertex_class(g);
  const VertexClass rhs = vertex_exp(perverse_vertex_class(g));
  CheckResult r;
  r.name = "nodalhilb";
  r.lhs = render_class(g, lhs);
  r.rhs = render_class(g, rhs);
  VertexClass diff(g.vertex_count());
  for (const auto& [s, c] : lhs.terms()) diff.set(s, c - rhs.at(s));
  for (const auto& [s, c] : rhs.terms()) {
    if (lhs.terms().count(s) == 0) diff.set(s, -c);
  }
  r.diff = render_class(g, diff);
  r.status = diff.terms().empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult check_jacobian_strata(const Multigraph& g, const CheckOptions&) {
  const JacobianClass j = jacobian_class(g);
  return compare_values("jacobian-strata", j.strata, j.closed);
}

CheckResult check_subsum(const Multigraph& g, const CheckOptions&) {
  const SubsumSides s = subsum_sides(g);
  return compare_lists("subsum", s.removals, s.binomial);
}

CheckResult check_weights_q1(const Multigraph& g, const CheckOptions&) {
  const LaurentPoly lhs = ic_weight_poly(g).at_q_one();
  const LaurentPoly rhs = jacobian_weight_poly(g).at_q_one();
  CheckResult r;
  r.name = "weights-q1";
  r.lhs = lhs.render("t");
  r.rhs = rhs.render("t");
  const LaurentPoly diff = lhs - rhs;
  r.diff = diff.render("t");
  r.status = diff.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult check_main_pointwise(const Multigraph& g, const CheckOptions&) {
  return verify_connected_disconnected(g);
}

CheckResult check_lmain(const Multigraph& g, const CheckOptions&) {
  require(first_betti(g) <= kWedgeBettiLimit, "subspace comparison is limited to h^1 <= 5");
  const auto top = static_cast<unsigned>(2 * first_betti(g));
  std::size_t compared = 0;
  for (EdgeSet I : enumerate_matroid(g)) {
    for (unsigned i = 0; i <= top; ++i) {
      CheckResult one = verify_Lmain(g, I, i);
      if (one.status != CheckStatus::Pass) {
        one.detail = "I = " + std::to_string(I.bits()) + ", i = " + std::to_string(i) + ": " + one.detail;
        return one;
      }
      ++compared;
    }
  }
  CheckResult r;
  r.name = "lmain";
  r.lhs = r.rhs = std::to_string(compared) + " subspace pairs equal";
  r.diff = "0";
  r.status = CheckStatus::Pass;
  return r;
}

CheckResult check_vanishing(const Multigraph& g, const CheckOptions&) {
  require(first_betti(g) <= kWedgeBettiLimit, "image enumeration is limited to h^1 <= 5");
  require(g.edge_count() <= 8, "image enumeration is limited to 8 edges");
  const DualGraphHomology hom(g);
  const std::size_t h = hom.betti();
  std::size_t predicted = 0;
  std::vector<std::string> violations;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    const EdgeSet I(bits);
    const bool outside = !is_spanning_connected(g, I) || h < I.size();
    for (unsigned i = 0; i <= 2 * h; ++i) {
      if (!outside && i >= I.size()) continue;
      ++predicted;
      const std::size_t dim = image_NI(hom, I, i).dim();
      if (dim != 0) {
        violations.push_back("I=" + std::to_string(bits) + ",i=" + std::to_string(i) + ":dim " + std::to_string(dim));
      }
    }
  }
  CheckResult r;
  r.name = "vanishing";
  r.lhs = std::to_string(predicted) + " images predicted zero";
  r.rhs = std::to_string(predicted - violations.size()) + " images zero";
  std::string diff;
  for (const auto& v : violations) diff += (diff.empty() ? "" : "; ") + v;
  r.diff = diff.empty() ? "0" : diff;
  r.status = violations.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

CheckResult check_severi(const Multigraph& g, const CheckOptions&) {
  const SeveriVectors s = severi_vectors(g);
  std::vector<BigInt> series = s.n;
  series.insert(series.end(), s.nbar.begin(), s.nbar.end());
  std::vector<BigInt> oracle = matroid_size_counts(g);
  for (std::size_t i = 0; i <= g.edge_count(); ++i) oracle.push_back(binomial(g.edge_count(), i));
  CheckResult r = compare_lists("severi", series, oracle);
  r.detail = "n followed by nbar";
  return r;
}

CheckResult check_nnbar(const Multigraph& g, const CheckOptions&) { return verify_nnbar(g); }

Polarization random_polarization(std::mt19937_64& rng, std::size_t n) {
  constexpr long kDen = 97;
  std::vector<long> num(n);
  long total = 0;
  for (auto& a : num) {
    a = static_cast<long>(draw(rng, 0, 2 * kDen)) - kDen;
    total += a;
  }
  // Make the total an integer.
  num.back() -= ((total % kDen) + kDen) % kDen;
  Polarization m;
  for (long a : num) m.emplace_back(a, kDen);
  for (auto& x : m) x.canonicalize();
  return m;
}

CheckResult check_multidegrees(const Multigraph& g, const CheckOptions& options) {
  require(is_connected(g), "stability needs a connected graph");
  require(g.vertex_count() <= 12, "polarization genericity is limited to 12 vertices");
  std::mt19937_64 rng(options.seed);
  const BigInt c = spanning_forest_count(g, ForestCountMethod::MatrixTree);
  std::set<std::size_t> counts;
  std::string mismatches;
  unsigned done = 0;
  for (unsigned attempt = 0; done < options.polarizations && attempt < 100 * options.polarizations; ++attempt) {
    const Polarization m = random_polarization(rng, g.vertex_count());
    if (!is_general_polarization(g, m)) continue;
    ++done;
    const std::size_t count = stable_multidegrees(g, m).size();
    counts.insert(count);
    if (BigInt(static_cast<unsigned long>(count)) != c) {
      if (!mismatches.empty()) mismatches += "; ";
      std::string label;
      for (const auto& x : m) label += (label.empty() ? "" : ",") + x.get_str();
      mismatches += "(" + label + "): " + std::to_string(count);
    }
  }
  CheckResult r;
  r.name = "multidegrees";
  std::string seen;
  for (std::size_t k : counts) seen += (seen.empty() ? "" : ", ") + std::to_string(k);
  r.lhs = "counts {" + seen + "} over " + std::to_string(done) + " polarizations";
  r.rhs = c.get_str();
  r.diff = mismatches.empty() ? "0" : mismatches;
  r.status = mismatches.empty() && done == options.polarizations ? CheckStatus::Pass : CheckStatus::Fail;
  if (done < options.polarizations) r.detail = "too few general polarizations found";
  return r;
}

CheckResult check_hypergraph_b(const Multigraph& g, const CheckOptions&) {
  const Hypergraph h = to_hypergraph(g);
  require(is_connected(h), "the bound applies to connected hypergraphs");
  const long b = hypergraph_b(h);
  CheckResult r;
  r.name = "hypergraph-b";
  r.lhs = std::to_string(b);
  r.rhs = std::to_string(first_betti(g));
  r.diff = std::to_string(b - static_cast<long>(first_betti(g)));
  r.status = b >= 0 && b == static_cast<long>(first_betti(g)) ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = "b(H) against h^1 of the dual graph";
  return r;
}

CheckResult check_setc_rank(const Multigraph& g, const CheckOptions&) {
  require(g.edge_count() <= kSubsetEdgeLimit, "subset enumeration is limited to 16 edges");
  const DualGraphHomology hom(g);
  const std::size_t h = hom.betti();
  std::size_t members = 0;
  std::string failures;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    const EdgeSet I(bits);
    Matrix covectors(h, I.size());
    std::size_t col = 0;
    for (std::size_t e : I.indices()) {
      const auto c = hom.covector(e);
      for (std::size_t k = 0; k < h; ++k) covectors(k, col) = c[k];
      ++col;
    }
    const bool injective = covectors.rank() == I.size();
    const bool member = is_spanning_connected(g, I);
    bool ok = injective == member;
    if (member) {
      ++members;
      ok = ok && first_betti(g, g.all_edges() - I) + I.size() == h;
    }
    if (!ok) failures += (failures.empty() ? "" : "; ") + std::to_string(bits);
  }
  CheckResult r;
  r.name = "setc-rank";
  const std::size_t listed = enumerate_matroid(g).size();
  r.lhs = std::to_string(members) + " independent covector sets";
  r.rhs = std::to_string(listed) + " matroid members";
  if (members != listed) failures += (failures.empty() ? "" : "; ") + std::string("member count");
  r.diff = failures.empty() ? "0" : "subsets " + failures;
  r.status = failures.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

using CheckFn = CheckResult (*)(const Multigraph&, const CheckOptions&);

const std::map<std::string, CheckFn, std::less<>>& registry() {
  static const std::map<std::string, CheckFn, std::less<>> table{
      {"hypergraph-b", check_hypergraph_b},
      {"jacobian-strata", check_jacobian_strata},
      {"lmain", check_lmain},
      {"main-pointwise", check_main_pointwise},
      {"multidegrees", check_multidegrees},
      {"nnbar", check_nnbar},
      {"nodalhilb", check_nodalhilb},
      {"nodaljac-cks", check_nodaljac_cks},
      {"setc-rank", check_setc_rank},
      {"severi", check_severi},
      {"subsum", check_subsum},
      {"vanishing", check_vanishing},
      {"weights-q1", check_weights_q1},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_check_name(std::string_view name) { return registry().find(name) != registry().end(); }

CheckResult run_check(std::string_view name, const Multigraph& g, const std::string& graph_id,
                      const CheckOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownCheckError("unknown check: " + std::string(name));
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = it->second(g, options);
  } catch (const GraphError& e) {
    r = CheckResult{};
    r.status = CheckStatus::Skip;
    r.detail = e.what();
  } catch (const RingError& e) {
    r = CheckResult{};
    r.status = CheckStatus::Fail;
    r.detail = std::string("ring error: ") + e.what();
  }
  r.name = std::string(name);
  r.graph = graph_id;
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<NamedGraph> catalog_graphs() {
  std::vector<NamedGraph> out;
  for (const auto& name : catalog_names()) out.push_back({name, *catalog_graph(name)});
  return out;
}

std::vector<NamedGraph> random_graphs(std::uint64_t seed, std::size_t count, std::size_t max_edges,
                                      bool connected) {
  std::mt19937_64 rng(seed);
  RandomGraphOptions options;
  options.max_edges = max_edges;
  options.connected = connected;
  std::vector<NamedGraph> out;
  for (std::size_t k = 0; k < count; ++k) {
    // Mostly connected graphs; the others exercise the skip paths.
    options.connected = connected || draw(rng, 0, 9) != 0;
    out.push_back({"random-" + std::to_string(seed) + "-" + std::to_string(k), random_graph(rng, options)});
  }
  return out;
}

std::vector<CheckResult> run_suite(const std::vector<NamedGraph>& graphs, const SuiteOptions& options) {
  const std::vector<std::string>& names = options.names.empty() ? check_names() : options.names;
  for (const auto& name : names) {
    if (!is_check_name(name)) throw UnknownCheckError("unknown check: " + name);
  }
  CheckOptions check_options;
  check_options.seed = options.seed;
  check_options.polarizations = options.polarizations;
  std::vector<CheckResult> out;
  for (const auto& name : names) {
    for (const auto& [id, graph] : graphs) out.push_back(run_check(name, graph, id, check_options));
  }
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) {
    return std::tie(a.name, a.graph) < std::tie(b.name, b.graph);
  });
  return out;
}

SuiteSummary summarize(const std::vector<CheckResult>& results) {
  SuiteSummary s;
  for (const auto& r : results) {
    switch (r.status) {
      case CheckStatus::Pass: ++s.passed; break;
      case CheckStatus::Fail: ++s.failed; break;
      case CheckStatus::Skip: ++s.skipped; break;
    }
  }
  return s;
}

std::string text_report(const std::vector<CheckResult>& results, bool timings) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << to_string(r.status) << "  " << r.name << "  " << r.graph;
    if (timings) out << "  " << static_cast<long long>(r.elapsed_ms) << " ms";
    out << "\n";
    if (r.status == CheckStatus::Skip) {
      out << "    reason: " << r.detail << "\n";
      continue;
    }
    out << "    lhs:  " << r.lhs << "\n";
    out << "    rhs:  " << r.rhs << "\n";
    out << "    diff: " << r.diff << "\n";
    if (!r.detail.empty()) out << "    note: " << r.detail << "\n";
  }
  const SuiteSummary s = summarize(results);
  out << s.passed << " passed, " << s.failed << " failed, " << s.skipped << " skipped\n";
  return out.str();
}

std::string json_report(const std::vector<CheckResult>& results, bool timings) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["graph"] = r.graph;
    j["status"] = to_string(r.status);
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["diff"] = r.diff;
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace curvecount
