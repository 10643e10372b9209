#include <doctest.h>

#include <random>
#include <set>

#include "curvecount/catalog.hpp"
#include "curvecount/graph_gen.hpp"
#include "curvecount/homology.hpp"
#include "curvecount/invariants.hpp"

using namespace curvecount;

namespace {

const std::vector<Multigraph>& small_graphs() {
  static const std::vector<Multigraph> graphs = connected_multigraphs_up_to(4, 5);
  return graphs;
}

}  // namespace

TEST_CASE("isomorphism classes of connected multigraphs") {
  // Connected multigraphs with loops, by edge count.
  const std::vector<std::size_t> expected{1, 2, 4, 11, 30, 95};
  for (std::size_t m = 0; m < expected.size(); ++m) {
    CAPTURE(m);
    const auto graphs = connected_multigraphs(m, m + 1);
    CHECK(graphs.size() == expected[m]);
    for (const auto& g : graphs) {
      CHECK(is_connected(g));
      CHECK(g.edge_count() == m);
    }
  }
  // Trees on up to 6 vertices.
  std::size_t trees = 0;
  for (const auto& g : connected_multigraphs(5, 6)) trees += first_betti(g) == 0 ? 1 : 0;
  CHECK(trees == 6);
}

TEST_CASE("random graphs are reproducible and respect the options") {
  RandomGraphOptions options;
  options.max_edges = 8;
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  for (int k = 0; k < 100; ++k) {
    const Multigraph g = random_graph(a, options);
    CHECK(g == random_graph(b, options));
    CHECK(is_connected(g));
    CHECK(g.edge_count() <= 8);
    CHECK(g.vertex_count() <= 5);
    CHECK(g.genus_sum() == 0);
  }
  options.max_edges = 25;
  CHECK_THROWS_AS(random_graph(a, options), GraphError);
}

TEST_CASE("matroid is downward closed and satisfies the rank identity") {
  for (const auto& g : small_graphs()) {
    const auto members = enumerate_matroid(g);
    std::set<std::uint64_t> listed;
    for (EdgeSet I : members) listed.insert(I.bits());
    for (EdgeSet I : members) {
      for (std::size_t e : I.indices()) CHECK(listed.count(I.without(e).bits()) == 1);
      CHECK(first_betti(g) - first_betti(g, g.all_edges() - I) == I.size());
    }
    std::int64_t total = 0;
    for (auto n : n_vector(g)) total += n;
    CHECK(total == static_cast<std::int64_t>(members.size()));
    CHECK(spanning_forest_count(g, ForestCountMethod::Matroid) ==
          spanning_forest_count(g, ForestCountMethod::MatrixTree));
  }
}

TEST_CASE("N_e commute and square to zero") {
  for (const auto& g : small_graphs()) {
    const DualGraphHomology hom(g);
    std::vector<Matrix> ops;
    for (std::size_t e = 0; e < g.edge_count(); ++e) ops.push_back(operator_N(hom, e).matrix);
    for (std::size_t e = 0; e < ops.size(); ++e) {
      CHECK((ops[e] * ops[e]).is_zero());
      for (std::size_t f = e + 1; f < ops.size(); ++f) CHECK(ops[e] * ops[f] == ops[f] * ops[e]);
    }
  }
}

TEST_CASE("images vanish outside the matroid and in low degree") {
  for (const auto& g : small_graphs()) {
    const DualGraphHomology hom(g);
    const std::size_t h = hom.betti();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const EdgeSet I(bits);
      const bool outside = !is_spanning_connected(g, I) || h < I.size();
      for (unsigned i = 0; i <= 2 * h; ++i) {
        if (outside || i < I.size()) CHECK(image_NI(hom, I, i).dim() == 0);
      }
    }
  }
}

TEST_CASE("image subspaces match the wedge description") {
  for (const auto& g : small_graphs()) {
    for (EdgeSet I : enumerate_matroid(g)) {
      for (unsigned i = 0; i <= 2 * first_betti(g); ++i) CHECK(verify_Lmain(g, I, i).status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("closed forms agree on small graphs") {
  for (const auto& g : small_graphs()) {
    CHECK(perverse_series(g) == ic_stalk_product(g));
    CHECK(perverse_series(g) == cks_stalk_class(g));
    CHECK(vertex_exp(perverse_vertex_class(g)) == hilbert_vertex_class(g));
    const auto j = jacobian_class(g);
    CHECK(j.strata == j.closed);
    CHECK(verify_nnbar(g).status == CheckStatus::Pass);
    CHECK(verify_connected_disconnected(g).status == CheckStatus::Pass);
  }
}

TEST_CASE("hypergraph bound") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Hypergraph h = random_hypergraph(rng, 6, 5);
    REQUIRE(is_connected(h));
    CHECK(hypergraph_b(h) >= 0);
  }
}
