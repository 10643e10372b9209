#include <doctest.h>

#include "curvecount/catalog.hpp"
#include "curvecount/graph.hpp"
#include "curvecount/graph_io.hpp"

using namespace curvecount;

namespace {

Multigraph named(const char* name) { return *catalog_graph(name); }

EdgeSet edges_of(const Multigraph& g, std::initializer_list<const char*> ids) {
  EdgeSet s;
  for (const char* id : ids) s = s.with(*g.find_edge(id));
  return s;
}

}  // namespace

TEST_CASE("connected components") {
  CHECK(connected_components(Multigraph()).empty());
  CHECK(connected_components(named("banana")) == VertexPartition{{0, 1}});
  CHECK(connected_components(make_graph({0, 0}, {})) == VertexPartition{{0}, {1}});
  CHECK(connected_components(named("banana-plus-point")) == VertexPartition{{0, 1}, {2}});
}

TEST_CASE("first betti number") {
  CHECK(first_betti(named("node")) == 1);
  CHECK(first_betti(named("banana")) == 1);
  CHECK(first_betti(named("theta")) == 2);
  CHECK(first_betti(named("chain-3")) == 0);
  CHECK(first_betti(Multigraph()) == 0);
}

TEST_CASE("cographic matroid membership and enumeration") {
  const auto node = named("node");
  CHECK(is_spanning_connected(node, edges_of(node, {"e1"})));
  const auto lines = named("pair-of-lines");
  CHECK_FALSE(is_spanning_connected(lines, edges_of(lines, {"e1"})));
  const auto banana = named("banana");
  CHECK(is_spanning_connected(banana, edges_of(banana, {"e1"})));
  CHECK_FALSE(is_spanning_connected(banana, edges_of(banana, {"e1", "e2"})));

  CHECK(enumerate_matroid(banana) == std::vector<EdgeSet>{EdgeSet(), EdgeSet(1), EdgeSet(2)});
  CHECK(enumerate_matroid(named("triangle")).size() == 4);
  const auto theta = enumerate_matroid(named("theta"));
  CHECK(theta.size() == 7);
  CHECK(theta.back() == EdgeSet(0b110));
  CHECK(enumerate_matroid(Multigraph()) == std::vector<EdgeSet>{EdgeSet()});
}

TEST_CASE("enumeration order is by size then edge id") {
  // Edge ids chosen so index order and id order disagree.
  Multigraph g({{"a", 0}, {"b", 0}}, {{"z", {"a", "b"}}, {"y", {"a", "b"}}, {"x", {"a", "b"}}});
  const auto sets = enumerate_matroid(g);
  REQUIRE(sets.size() == 7);
  CHECK(sets[1] == EdgeSet::single(2));
  CHECK(sets[2] == EdgeSet::single(1));
  CHECK(sets[3] == EdgeSet::single(0));
  CHECK(sets[4] == EdgeSet(0b110));
}

TEST_CASE("n vector") {
  CHECK(n_vector(named("node")) == std::vector<std::int64_t>{1, 1});
  CHECK(n_vector(named("banana")) == std::vector<std::int64_t>{2, 1});
  CHECK(n_vector(named("triangle")) == std::vector<std::int64_t>{3, 1});
  CHECK(n_vector(named("theta")) == std::vector<std::int64_t>{3, 3, 1});
  CHECK(n_vector(named("banana-plus-point")) == std::vector<std::int64_t>{0, 0});
}

TEST_CASE("spanning forest counts agree") {
  for (const char* name : {"triangle", "node", "banana", "theta", "cycle-5", "chain-3", "banana-plus-point", "empty"}) {
    CAPTURE(name);
    const auto g = named(name);
    CHECK(spanning_forest_count(g, ForestCountMethod::Matroid) == spanning_forest_count(g, ForestCountMethod::MatrixTree));
  }
  CHECK(spanning_forest_count(named("triangle"), ForestCountMethod::MatrixTree) == 3);
  CHECK(spanning_forest_count(named("node"), ForestCountMethod::MatrixTree) == 1);
  CHECK(spanning_forest_count(named("banana"), ForestCountMethod::Matroid) == 2);
  // K4 has 16 spanning trees.
  const auto k4 = make_graph({0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(spanning_forest_count(k4, ForestCountMethod::MatrixTree) == 16);
  CHECK(spanning_forest_count(k4, ForestCountMethod::Matroid) == 16);
}

TEST_CASE("reduced complexity") {
  const auto banana = named("banana");
  CHECK(reduced_complexity(banana, EdgeSet()) == 2);
  CHECK(reduced_complexity(banana, EdgeSet(1)) == 1);
  CHECK(reduced_complexity(banana, EdgeSet(3)) == 0);
}

TEST_CASE("connected partitions") {
  CHECK(connected_partitions(named("pair-of-lines")) == std::vector<VertexPartition>{{{0, 1}}, {{0}, {1}}});
  CHECK(connected_partitions(named("chain-1")).size() == 1);
  CHECK(connected_partitions(named("triangle")).size() == 5);
  // Path 1-2-3: {1,3} is not connected.
  CHECK(connected_partitions(named("chain-3")).size() == 4);
  CHECK(connected_partitions(Multigraph()).size() == 1);
}

TEST_CASE("hypergraph bound") {
  const auto banana = to_hypergraph(named("banana"));
  CHECK(hypergraph_b(banana) == 1);
  CHECK(is_connected(banana));
  Hypergraph point{{"v"}, {}};
  CHECK(hypergraph_b(point) == 0);
  CHECK(is_connected(point));
  Hypergraph two{{"a", "b"}, {}};
  CHECK(hypergraph_b(two) == -1);
  CHECK_FALSE(is_connected(two));
  Hypergraph bad{{"a"}, {{"a", "c"}}};
  CHECK_THROWS_AS(validate(bad), GraphError);
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(Multigraph({{"a", 0}, {"a", 0}}, {}), GraphError);
  CHECK_THROWS_AS(Multigraph({{"a", 0}}, {{"e", {"a", "b"}}}), GraphError);
  CHECK_THROWS_AS(Multigraph({{"a", -1}}, {}), GraphError);
  CHECK_THROWS_AS(Multigraph({{"a", 0}}, {{"e", {"a", "a"}}, {"e", {"a", "a"}}}), GraphError);
}

TEST_CASE("subcurves keep induced edges") {
  const auto tri = named("triangle");
  const auto sub = tri.induced(VertexSet(0b011));
  CHECK(sub.vertex_count() == 2);
  CHECK(sub.edge_count() == 1);
  const auto node = named("node");
  CHECK(node.induced(VertexSet(1)).edge_count() == 1);
}

TEST_CASE("graph json round trip") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const auto g = *catalog_graph(name);
    CHECK(parse_graph_json(to_graph_json(g)) == g);
  }
  CHECK(to_graph_json(named("node")) ==
        R"({"vertices":[{"id":"v1","genus":0}],"edges":[{"id":"e1","ends":["v1","v1"]}]})");
}

TEST_CASE("graph json errors") {
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":[],"edges":[],"extra":1})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":[{"id":"a","colour":1}],"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices":[{"id":"a"}],"edges":[{"id":"e","ends":["a","b"]}]})"), ParseError);
  try {
    parse_graph_json("{\n  \"vertices\": [,\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() > 1);
  }
  const auto g = parse_graph_json(R"({"vertices":[{"id":"a"}],"edges":[]})");
  CHECK(g.vertices()[0].genus == 0);
}
