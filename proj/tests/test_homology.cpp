#include <doctest.h>

#include "curvecount/catalog.hpp"
#include "curvecount/homology.hpp"

using namespace curvecount;

namespace {

Multigraph named(const char* name) { return *catalog_graph(name); }

RationalQL poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  LaurentPoly p;
  for (auto [i, j, c] : terms) p.add_term(i, j, c);
  return RationalQL(p);
}

// Dense oracle: image of the composite of wedge operators, rank per weight.
LaurentPoly dense_image_class(const DualGraphHomology& hom, EdgeSet I, unsigned i) {
  const GradedSpace space = wedge_space(hom.working_space(), i);
  Matrix m = Matrix::identity(space.dim());
  for (std::size_t e : I.indices()) m = wedge_operator(operator_N(hom, e), i).matrix * m;
  LaurentPoly out;
  std::map<int, std::vector<std::size_t>> by_weight;
  for (std::size_t r = 0; r < space.dim(); ++r) by_weight[space.weights[r]].push_back(r);
  for (const auto& [w, rows] : by_weight) {
    Matrix block(rows.size(), m.cols());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t c = 0; c < m.cols(); ++c) block(k, c) = m(rows[k], c);
    }
    out.add_term(0, w + static_cast<int>(I.size()), static_cast<long>(block.rank()));
  }
  return out;
}

RationalQL dense_cks(const Multigraph& g) {
  const DualGraphHomology hom(g);
  LaurentPoly total;
  for (unsigned i = 0; i <= 2 * hom.betti(); ++i) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const EdgeSet I(bits);
      LaurentPoly cls = dense_image_class(hom, I, i).shifted(i, 0);
      if ((i + I.size()) % 2 == 0) {
        total += cls;
      } else {
        total -= cls;
      }
    }
  }
  return RationalQL(total);
}

}  // namespace

TEST_CASE("homology dimensions and exactness") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto g = *catalog_graph(name);
    const DualGraphHomology hom(g);
    CHECK(hom.betti() == first_betti(g));
    const Matrix d = hom.boundary();
    CHECK(d.rank() == g.vertex_count() - component_count(g));
    CHECK(d.kernel().cols() == first_betti(g));
    // Each stored cycle is a cycle.
    for (const auto& z : hom.forest().cycles) {
      Matrix col(g.edge_count(), 1);
      for (std::size_t e = 0; e < g.edge_count(); ++e) col(e, 0) = z[e];
      CHECK((d * col).is_zero());
    }
    CHECK(hom.pairing() == Matrix::identity(hom.betti()));
  }
}

TEST_CASE("banana and theta bases") {
  const DualGraphHomology banana(named("banana"));
  REQUIRE(banana.betti() == 1);
  CHECK(banana.forest().cycles[0] == std::vector<long>{-1, 1});
  CHECK(DualGraphHomology(named("chain-3")).betti() == 0);
  CHECK(DualGraphHomology(named("theta")).betti() == 2);
}

TEST_CASE("N_e is square-zero, commuting and orientation free") {
  for (const char* name : {"node", "banana", "theta", "triangle", "cycle-4"}) {
    CAPTURE(name);
    const auto g = named(name);
    const DualGraphHomology hom(g);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Matrix ne = operator_N(hom, e).matrix;
      CHECK((ne * ne).is_zero());
      for (std::size_t f = 0; f < g.edge_count(); ++f) {
        const Matrix nf = operator_N(hom, f).matrix;
        CHECK(ne * nf == nf * ne);
      }
    }
  }
  CHECK(operator_N(DualGraphHomology(named("pair-of-lines")), 0).matrix.rows() == 0);
  const DualGraphHomology node(named("node"));
  const Matrix n = operator_N(node, 0).matrix;
  CHECK(n.rank() == 1);
  CHECK(n(0, 1) == 1);
  const DualGraphHomology banana(named("banana"));
  const Matrix na = operator_N(banana, 0).matrix;
  const Matrix nb = operator_N(banana, 1).matrix;
  CHECK(na.rank() == 1);
  CHECK(nb.rank() == 1);
  CHECK((na * nb).is_zero());
}

TEST_CASE("cks class does not depend on vertex order or orientation") {
  // Same theta-with-tail graph under two labelings.
  const auto a = make_graph({0, 0, 0}, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}});
  const auto b = make_graph({0, 0, 0}, {{2, 1}, {2, 1}, {1, 0}, {1, 0}, {2, 0}});
  CHECK(cks_stalk_class(a) == cks_stalk_class(b));
}

TEST_CASE("wedge operators") {
  const DualGraphHomology node(named("node"));
  const LinOp n = operator_N(node, 0);
  const LinOp w0 = wedge_operator(n, 0);
  CHECK(w0.matrix.rows() == 1);
  CHECK(w0.matrix.is_zero());
  CHECK(wedge_operator(n, 1).matrix.rank() == 1);
  const DualGraphHomology banana(named("banana"));
  CHECK(wedge_operator(operator_N(banana, 0), 2).matrix.is_zero());
  // Theta, N_e of rank one: N^(2) hits v^x and v^(c1 y2 - c2 y1) only.
  const DualGraphHomology theta(named("theta"));
  const LinOp w2 = wedge_operator(operator_N(theta, 0), 2);
  CHECK(w2.matrix.rows() == 6);
  CHECK(w2.matrix.rank() == 2);
  CHECK((w2.matrix * w2.matrix).is_zero());
  const LinOp w3 = wedge_operator(operator_N(theta, 0), 3);
  CHECK((w3.matrix * w3.matrix * w3.matrix).is_zero());
}

TEST_CASE("images of N_I") {
  const DualGraphHomology banana(named("banana"));
  for (unsigned i = 0; i <= 2; ++i) CHECK(image_NI(banana, EdgeSet(3), i).dim() == 0);
  CHECK(image_NI(banana, EdgeSet(1), 2).dim() == 0);
  const DualGraphHomology node(named("node"));
  const auto img = image_NI(node, EdgeSet(1), 1);
  CHECK(img.dim() == 1);
  CHECK(img.graded_class() == LaurentPoly::monomial(0, 1));
}

TEST_CASE("cks stalk class examples") {
  CHECK(cks_stalk_class(named("node")) == poly({{0, 0, 1}, {1, 0, -1}, {2, 1, 1}}));
  CHECK(cks_stalk_class(named("node")).render() == "1 - q + q^2*L");
  CHECK(cks_stalk_class(named("banana")) == poly({{0, 0, 1}, {1, 1, 1}, {1, 0, -1}, {2, 1, 1}}));
  CHECK(cks_stalk_class(named("pair-of-lines")) == RationalQL(1));
  CHECK_THROWS_AS(cks_stalk_class(named("banana-plus-point")), GraphError);
  CHECK_THROWS_AS(cks_stalk_class(named("banana-genus")), GraphError);
}

TEST_CASE("sparse route matches the dense oracle") {
  for (const char* name : {"node", "banana", "theta", "triangle", "cycle-4", "chain-3"}) {
    CAPTURE(name);
    const auto g = named(name);
    CHECK(cks_stalk_class(g) == dense_cks(g));
    const DualGraphHomology hom(g);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      for (unsigned i = 0; i <= 2 * hom.betti(); ++i) {
        CHECK(image_NI(hom, EdgeSet(bits), i).graded_class() == dense_image_class(hom, EdgeSet(bits), i));
      }
    }
  }
  const auto mixed = make_graph({0, 0}, {{0, 0}, {0, 1}, {0, 1}, {1, 1}});
  CHECK(cks_stalk_class(mixed) == dense_cks(mixed));
}

TEST_CASE("equivariant trace") {
  const auto banana = named("banana");
  const auto id = GraphAutomorphism::identity(banana);
  const auto terms = cks_terms(banana);
  const auto traced = equivariant_trace(banana, id, 1);
  REQUIRE(traced.size() == terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const LaurentPoly expected = (i % 2 == 0) ? terms[i] : -terms[i];
    CHECK(traced[i] == expected);
  }
  const auto swap = GraphAutomorphism::from_maps(banana, {0, 1}, {1, 0});
  CHECK(swap.order() == 2);
  const auto swapped = equivariant_trace(banana, swap, 1);
  CHECK(swapped[1] == (LaurentPoly(1) + LaurentPoly::monomial(0, 1)));
  CHECK(equivariant_trace(banana, swap, 2) == traced);

  // Flipping the two banana vertices reverses both edges.
  const auto flip = GraphAutomorphism::from_maps(banana, {1, 0}, {0, 1});
  CHECK(flip.reversed == std::vector<bool>{true, true});
  CHECK(equivariant_trace(banana, flip, flip.order()) == traced);

  const auto theta = named("theta");
  const auto rot = GraphAutomorphism::from_maps(theta, {0, 1}, {1, 2, 0});
  CHECK(rot.order() == 3);
  CHECK(equivariant_trace(theta, rot, 3) == equivariant_trace(theta, GraphAutomorphism::identity(theta), 1));

  GraphAutomorphism bad = GraphAutomorphism::identity(banana);
  bad.reversed[0] = true;
  CHECK_THROWS_AS(bad.validate(banana), GraphError);
}

TEST_CASE("main lemma subspaces") {
  const auto node = named("node");
  auto r = verify_Lmain(node, EdgeSet(1), 1);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.lhs == "L");
  const auto theta = named("theta");
  for (std::size_t e = 0; e < 3; ++e) {
    r = verify_Lmain(theta, EdgeSet::single(e), 2);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(r.detail == "dim 2 vs 2");
  }
  r = verify_Lmain(named("banana"), EdgeSet(1), 1);
  CHECK(r.status == CheckStatus::Pass);
  CHECK(r.detail == "dim 1 vs 1");
  CHECK_THROWS_AS(verify_Lmain(named("banana"), EdgeSet(3), 1), GraphError);
}
