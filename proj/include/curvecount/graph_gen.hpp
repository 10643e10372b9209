#pragma once

// Seeded random multigraphs and exhaustive small-graph generation.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "curvecount/graph.hpp"

namespace curvecount {

struct RandomGraphOptions {
  std::size_t max_vertices = 5;
  std::size_t max_edges = 10;
  bool connected = true;
  /// Vertex genera are drawn from [0, max_genus].
  int max_genus = 0;
  /// Per added edge, out of 100.
  unsigned loop_percent = 20;
  unsigned parallel_percent = 30;
};

/// Uniform integer in [lo, hi] by modulo reduction, so sequences do not
/// depend on the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// A random multigraph with 1..max_vertices vertices and at most max_edges
/// edges. Connected graphs start from a random spanning tree.
Multigraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options);

/// A random connected hypergraph: a random tree of hyperedges plus extra
/// hyperedges of size 1..4.
Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_hyperedges);

/// One representative per isomorphism class of connected multigraphs with
/// rational components, 1..max_vertices vertices and exactly `edges` edges.
std::vector<Multigraph> connected_multigraphs(std::size_t edges, std::size_t max_vertices);

/// All classes with 0..max_edges edges.
std::vector<Multigraph> connected_multigraphs_up_to(std::size_t max_edges, std::size_t max_vertices);

}  // namespace curvecount
