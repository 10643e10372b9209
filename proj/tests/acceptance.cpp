// Acceptance run: one pass/fail line per criterion, with wall-clock limits.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "curvecount/catalog.hpp"
#include "curvecount/graph_gen.hpp"
#include "curvecount/homology.hpp"
#include "curvecount/invariants.hpp"
#include "curvecount/verify.hpp"

using namespace curvecount;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

struct Criterion {
  int number;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

bool rational(const Multigraph& g) { return g.genus_sum() == 0; }

BigInt choose(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::vector<NamedGraph> random_connected(std::uint64_t seed, std::size_t count, std::size_t max_edges) {
  return random_graphs(seed, count, max_edges, true);
}

Outcome pair_of_lines() {
  Outcome o;
  const Multigraph g = *catalog_graph("pair-of-lines");
  const CheckResult r = run_check("nodalhilb", g, "pair-of-lines");
  if (r.status != CheckStatus::Pass) o.fail("nodalhilb did not pass");
  const RationalQL x = RationalQL::monomial(1, 1) * RationalQL::inverse_denominator(1, 1);
  if (!(hilbert_vertex_class(g).at(g.all_vertices()) == x + x * x)) o.fail("full coefficient differs");
  if (o.ok) o.note = "full coefficient " + (x + x * x).render();
  return o;
}

Outcome stalk_three_ways() {
  Outcome o;
  std::vector<Multigraph> graphs = connected_multigraphs_up_to(5, 6);
  const std::size_t exhaustive = graphs.size();
  for (auto& [id, g] : random_connected(2024, 200, 8)) graphs.push_back(std::move(g));
  for (const auto& g : graphs) {
    const RationalQL closed = perverse_series(g);
    if (!(cks_stalk_class(g) == closed)) o.fail("complex differs from the closed form");
    if (!(ic_stalk_product(g) == closed)) o.fail("stalk product differs from the closed form");
  }
  if (o.ok) o.note = std::to_string(exhaustive) + " exhaustive + 200 random graphs";
  return o;
}

Outcome hilbert_exp() {
  Outcome o;
  std::vector<Multigraph> graphs = connected_multigraphs_up_to(6, 5);
  const std::size_t exhaustive = graphs.size();
  std::size_t catalog = 0;
  for (const auto& name : catalog_names()) {
    const Multigraph g = *catalog_graph(name);
    if (!rational(g)) continue;
    graphs.push_back(g);
    ++catalog;
  }
  for (const auto& g : graphs) {
    if (!(hilbert_vertex_class(g) == vertex_exp(perverse_vertex_class(g)))) o.fail("vertex classes differ");
  }
  if (o.ok) o.note = std::to_string(exhaustive) + " exhaustive + " + std::to_string(catalog) + " catalog graphs";
  return o;
}

Outcome jacobian_strata() {
  Outcome o;
  for (const auto& [id, g] : random_connected(500, 500, 10)) {
    const JacobianClass j = jacobian_class(g);
    if (!(j.strata == j.closed)) o.fail(id + ": strata sum differs");
    const SubsumSides s = subsum_sides(g);
    if (s.removals != s.binomial) o.fail(id + ": subset sums differ");
  }
  if (o.ok) o.note = "500 random connected graphs";
  return o;
}

Outcome weights_q1() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& name : catalog_names()) {
    const Multigraph g = *catalog_graph(name);
    if (!is_connected(g)) continue;
    ++checked;
    if (!(ic_weight_poly(g).at_q_one() == jacobian_weight_poly(g).at_q_one())) o.fail(name + " differs");
  }
  if (o.ok) o.note = std::to_string(checked) + " connected catalog graphs";
  return o;
}

Outcome severi() {
  Outcome o;
  std::vector<NamedGraph> graphs = catalog_graphs();
  for (auto& ng : random_connected(100, 100, 10)) graphs.push_back(std::move(ng));
  std::size_t vectors = 0;
  std::size_t identities = 0;
  for (const auto& [id, g] : graphs) {
    if (!rational(g)) continue;
    if (verify_nnbar(g).status != CheckStatus::Pass) o.fail(id + ": n / nbar identity fails");
    ++identities;
    if (!is_connected(g)) continue;
    const SeveriVectors s = severi_vectors(g);
    if (s.n != matroid_size_counts(g)) o.fail(id + ": n differs from the matroid counts");
    for (std::size_t i = 0; i <= g.edge_count(); ++i) {
      if (s.nbar[i] != choose(g.edge_count(), i)) o.fail(id + ": nbar differs from the binomials");
    }
    ++vectors;
  }
  if (o.ok) o.note = std::to_string(vectors) + " vector checks, " + std::to_string(identities) + " identities";
  return o;
}

Outcome stability() {
  Outcome o;
  CheckOptions options;
  options.polarizations = 50;
  for (const char* name : {"banana", "triangle", "theta", "cycle-5"}) {
    options.seed = 7;
    const CheckResult r = run_check("multidegrees", *catalog_graph(name), name, options);
    if (r.status != CheckStatus::Pass) o.fail(std::string(name) + ": " + r.diff + " " + r.detail);
  }
  if (o.ok) o.note = "50 general polarizations on each of 4 graphs";
  return o;
}

Outcome structure() {
  Outcome o;
  const std::vector<Multigraph> graphs = connected_multigraphs_up_to(5, 6);
  for (const auto& g : graphs) {
    const auto members = enumerate_matroid(g);
    std::set<std::uint64_t> listed;
    for (EdgeSet I : members) listed.insert(I.bits());
    for (EdgeSet I : members) {
      for (std::size_t e : I.indices()) {
        if (listed.count(I.without(e).bits()) == 0) o.fail("matroid not downward closed");
      }
      if (first_betti(g) - first_betti(g, g.all_edges() - I) != I.size()) o.fail("rank identity fails");
    }
    if (spanning_forest_count(g, ForestCountMethod::Matroid) !=
        spanning_forest_count(g, ForestCountMethod::MatrixTree)) {
      o.fail("forest counts differ");
    }
    const DualGraphHomology hom(g);
    std::vector<Matrix> ops;
    for (std::size_t e = 0; e < g.edge_count(); ++e) ops.push_back(operator_N(hom, e).matrix);
    for (std::size_t e = 0; e < ops.size(); ++e) {
      if (!(ops[e] * ops[e]).is_zero()) o.fail("N_e does not square to zero");
      for (std::size_t f = e + 1; f < ops.size(); ++f) {
        if (!(ops[e] * ops[f] == ops[f] * ops[e])) o.fail("N_e and N_f do not commute");
      }
    }
    for (const char* name : {"vanishing", "lmain", "setc-rank", "hypergraph-b"}) {
      const CheckResult r = run_check(name, g, "exhaustive");
      if (r.status != CheckStatus::Pass) o.fail(std::string(name) + ": " + to_string(r.status) + " " + r.detail);
    }
  }
  std::mt19937_64 rng(8);
  for (int k = 0; k < 1000; ++k) {
    const Hypergraph h = random_hypergraph(rng, 8, 6);
    if (!is_connected(h) || hypergraph_b(h) < 0) o.fail("hypergraph bound fails");
  }
  if (o.ok) o.note = std::to_string(graphs.size()) + " graphs with |E| <= 5, 1000 hypergraphs";
  return o;
}

Outcome banana_invariants() {
  Outcome o;
  const NumericInvariants inv = numeric_invariants(*catalog_graph("banana"));
  if (inv.affine_rank != 1) o.fail("delta_a = " + std::to_string(inv.affine_rank));
  if (inv.cogenus != 2 || inv.components != 2) o.fail("delta or gamma wrong");
  if (o.ok) o.note = "delta_a = 1";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "pair-of-lines Hilbert identity", 0.1, pair_of_lines},
      {2, "CKS complex = stalk product = closed form", 60, stalk_three_ways},
      {3, "Hilbert class = Exp of perverse class", 120, hilbert_exp},
      {4, "Jacobian strata and subset sums", 60, jacobian_strata},
      {5, "weight polynomials at q = 1", 1, weights_q1},
      {6, "Severi vectors and n / nbar identity", 30, severi},
      {7, "stable multidegree counts", 30, stability},
      {8, "structural property suites", 60, structure},
      {9, "banana numeric invariants", 1, banana_invariants},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_s) o.fail("over the time limit");
    if (!o.ok) ++failures;
    std::printf("criterion %d: %s  %s  (%.3f s, limit %g s)  %s\n", c.number, o.ok ? "PASS" : "FAIL", c.title,
                seconds, c.limit_s, o.note.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
