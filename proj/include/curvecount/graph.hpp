#pragma once

// Dual multigraph of a nodal curve: one vertex per irreducible component
// (carrying its geometric genus), one edge per node. Loops are self-nodes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace curvecount {

using BigInt = mpz_class;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The graph is valid but outside the hypotheses of the requested formula
/// (disconnected, positive genus, ...). Verification reports these as skips.
class PreconditionError : public GraphError {
 public:
  using GraphError::GraphError;
};

/// Hard limit for anything that enumerates subsets of edges or vertices.
inline constexpr std::size_t kEnumerationLimit = 24;

/// A subset of a fixed index range [0, 64), stored as a bitmask. `Tag`
/// keeps edge subsets and vertex subsets from being mixed up.
template <class Tag>
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr IndexSet full(std::size_t n) {
    return IndexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr IndexSet single(std::size_t i) { return IndexSet(std::uint64_t{1} << i); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1U; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(__builtin_popcountll(bits_)); }
  constexpr bool is_subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr IndexSet with(std::size_t i) const { return IndexSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr IndexSet without(std::size_t i) const { return IndexSet(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) { return IndexSet(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & b.bits_); }
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) { return IndexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(IndexSet, IndexSet) = default;
  friend constexpr auto operator<=>(IndexSet, IndexSet) = default;

  /// Member indices in increasing order.
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<std::size_t>(__builtin_ctzll(b)));
    }
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

struct EdgeTag {};
struct VertexTag {};
using EdgeSet = IndexSet<EdgeTag>;
using VertexSet = IndexSet<VertexTag>;

struct Vertex {
  std::string id;
  int genus = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Edge {
  std::string id;
  std::pair<std::string, std::string> ends;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A list of vertex blocks; each block holds sorted vertex indices.
using VertexPartition = std::vector<std::vector<std::size_t>>;

class Multigraph {
 public:
  Multigraph() = default;
  /// Throws GraphError on duplicate ids, unknown endpoints, negative genus
  /// or more than 64 vertices/edges.
  Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  std::optional<std::size_t> find_vertex(std::string_view id) const;
  std::optional<std::size_t> find_edge(std::string_view id) const;

  /// Endpoint indices with first <= second. The edge is oriented first -> second.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const { return ends_[e]; }
  bool is_loop(std::size_t e) const { return ends_[e].first == ends_[e].second; }

  int genus_sum() const;
  int genus_sum(VertexSet s) const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  EdgeSet all_edges() const { return EdgeSet::full(edge_count()); }

  /// Edges with both endpoints in `s` (loops at retained vertices included).
  EdgeSet induced_edges(VertexSet s) const;
  /// Subcurve: the induced subgraph on `s`, keeping vertex and edge order.
  Multigraph induced(VertexSet s) const;
  /// Partial normalization at `removed`.
  Multigraph without_edges(EdgeSet removed) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> ends_;
};

// ---------------------------------------------------------------------------
// Connectivity and Betti numbers. The `kept` argument restricts to a spanning
// subgraph (all vertices, only the listed edges).

VertexPartition connected_components(const Multigraph& g);
std::size_t component_count(const Multigraph& g, EdgeSet kept);
std::size_t component_count(const Multigraph& g);
bool is_connected(const Multigraph& g);
bool induces_connected(const Multigraph& g, VertexSet s);

/// h^1 = |E| - |V| + h^0.
std::size_t first_betti(const Multigraph& g);
std::size_t first_betti(const Multigraph& g, EdgeSet kept);

/// Membership in the cographic matroid: removing `removed` disconnects no component.
bool is_spanning_connected(const Multigraph& g, EdgeSet removed);

/// All members of the cographic matroid, sorted by size and then
/// lexicographically by edge id. Throws GraphError above kEnumerationLimit edges.
std::vector<EdgeSet> enumerate_matroid(const Multigraph& g);

/// n_i = #{I in C(G) : h^1(G \ I) = i}, i = 0..h^1(G). All zeros when G is
/// disconnected or empty.
std::vector<std::int64_t> n_vector(const Multigraph& g);

enum class ForestCountMethod { Matroid, MatrixTree };

/// Number of spanning forests (product over components). Empty graph -> 1.
BigInt spanning_forest_count(const Multigraph& g, ForestCountMethod method);

/// Spanning tree count of G \ S when it has as many components as G, else 0.
/// For disconnected G this is the per-component product.
BigInt reduced_complexity(const Multigraph& g, EdgeSet removed);

/// Vertex partitions whose blocks all induce connected subgraphs.
/// Blocks are ordered by smallest member; partitions in restricted-growth order.
std::vector<VertexPartition> connected_partitions(const Multigraph& g);

// ---------------------------------------------------------------------------

struct Hypergraph {
  std::vector<std::string> vertices;
  /// Each hyperedge is a multiset of vertex ids.
  std::vector<std::vector<std::string>> hyperedges;
};

/// Throws GraphError on undeclared members or empty hyperedges.
void validate(const Hypergraph& h);
/// b(H) = sum_e (|e| - 1) - |V| + 1.
long hypergraph_b(const Hypergraph& h);
/// Connectivity of the bipartite vertex/hyperedge incidence graph.
bool is_connected(const Hypergraph& h);
/// The hypergraph of a nodal curve: one 2-element hyperedge per edge.
Hypergraph to_hypergraph(const Multigraph& g);

}  // namespace curvecount
