#pragma once

// Dual-graph (co)homology and the CKS stalk of the intersection complex.
//
// The working space is W = H^1(G) + H_1(G)L with basis x_0..x_{h-1} (weight
// 0) followed by y_0..y_{h-1} (weight 1). Wedge monomials in W are bitmasks:
// bit k is x_k, bit h+k is y_k.

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "curvecount/check_result.hpp"
#include "curvecount/graph.hpp"
#include "curvecount/kring.hpp"
#include "curvecount/linalg.hpp"

namespace curvecount {

struct GradedSpace {
  std::vector<std::string> labels;
  /// Power of L carried by each basis vector.
  std::vector<int> weights;
  std::size_t dim() const { return labels.size(); }
};

/// Matrix maps source coordinates to target coordinates (rows index the
/// target). An image vector has weight (source weight + twist).
struct LinOp {
  GradedSpace source;
  GradedSpace target;
  Matrix matrix;
  int twist = 0;
};

struct ForestBasis {
  /// Greedy spanning forest in edge order.
  EdgeSet forest;
  /// J = edges outside the forest, increasing; y_k is the cycle through cycle_edges[k].
  std::vector<std::size_t> cycle_edges;
  /// cycles[k][e]: coefficient of edge e in y_k. cycles[k][cycle_edges[k]] = 1.
  std::vector<std::vector<long>> cycles;
};

class DualGraphHomology {
 public:
  explicit DualGraphHomology(const Multigraph& g);

  const Multigraph& graph() const { return graph_; }
  std::size_t betti() const { return basis_.cycle_edges.size(); }
  const ForestBasis& forest() const { return basis_; }

  /// H^1 with basis x_k = class of the covector of cycle_edges[k].
  const GradedSpace& cohomology() const { return cohomology_; }
  /// H_1 with basis y_k, each carrying one L.
  const GradedSpace& homology() const { return homology_; }
  /// H^1 + H_1 L, x's first.
  GradedSpace working_space() const;

  /// Vertex-by-edge boundary: an edge maps to (head - tail).
  Matrix boundary() const;
  /// <x_i, y_j>.
  Matrix pairing() const;
  /// The covector of edge e in x-coordinates: component k is cycles[k][e].
  std::vector<long> covector(std::size_t e) const;

 private:
  Multigraph graph_;
  ForestBasis basis_;
  GradedSpace cohomology_;
  GradedSpace homology_;
};

/// N_e on W: kills H^1, sends y_j to <e*, y_j> [e*]. Twist +1.
LinOp operator_N(const DualGraphHomology& hom, std::size_t e);

/// Basis of the i-th wedge power of a space: monomials of size i in
/// increasing bitmask order.
std::vector<std::uint64_t> wedge_monomials(std::size_t dim, unsigned i);
GradedSpace wedge_space(const GradedSpace& v, unsigned i);
/// Derivation extension of n to the i-th wedge power.
LinOp wedge_operator(const LinOp& n, unsigned i);

/// Sparse columns of an operator on W: column p lists (row, entry).
using SparseColumns = std::vector<std::vector<std::pair<std::size_t, Rational>>>;
SparseColumns sparse_columns(const Matrix& m);
/// Applies the derivation extension of a W-operator to a wedge vector.
SparseVec apply_derivation(const SparseColumns& op, const SparseVec& v);
/// Applies the induced action of a W-automorphism to a wedge vector.
SparseVec apply_induced(const SparseColumns& op, const SparseVec& v);
/// Wedge product of two vectors.
SparseVec wedge(const SparseVec& a, const SparseVec& b);

/// Subspace of a wedge power of W, split by the number of y factors.
struct WedgeSubspace {
  std::size_t h = 0;
  unsigned degree = 0;
  /// Tate twist added to every vector's y-count.
  int twist = 0;
  std::map<unsigned, RowEchelon> pieces;

  std::size_t dim() const;
  /// sum over pieces of rank * L^(y-count + twist).
  LaurentPoly graded_class() const;
  void insert(SparseVec v);
};

/// Im N_I^(i), weights shifted by |I|.
WedgeSubspace image_NI(const DualGraphHomology& hom, EdgeSet I, unsigned i);

/// e_I* wedge (i-|I|)-th wedge of (span{[f*] : f not in I} + H_1(G \ I)L), twisted by |I|.
/// Throws GraphError unless I is in C(G).
WedgeSubspace lmain_subspace(const DualGraphHomology& hom, EdgeSet I, unsigned i);

/// Brute-force CKS class sum_i (-q)^i sum_k (-1)^k [sum_{|I|=k} Im N_I^(i)].
/// Requires a connected graph with rational components.
RationalQL cks_stalk_class(const Multigraph& g);

/// Graded class of the CKS complex in degree i, without the (-q)^i factor.
std::vector<LaurentPoly> cks_terms(const Multigraph& g);

struct GraphAutomorphism {
  std::vector<std::size_t> vertex_map;
  std::vector<std::size_t> edge_map;
  /// reversed[e]: the chosen orientation of e is sent to the reverse of that of edge_map[e].
  std::vector<bool> reversed;

  static GraphAutomorphism identity(const Multigraph& g);
  /// Orientation flags deduced from the vertex map; loops keep their orientation.
  static GraphAutomorphism from_maps(const Multigraph& g, std::vector<std::size_t> vertex_map,
                                     std::vector<std::size_t> edge_map);
  /// Throws GraphError when the maps are not bijections compatible with incidence.
  void validate(const Multigraph& g) const;
  GraphAutomorphism compose(const GraphAutomorphism& first) const;
  GraphAutomorphism power(unsigned m) const;
  unsigned order() const;
  /// The signed permutation action on W.
  Matrix action_on_w(const DualGraphHomology& hom) const;
};

/// i -> sum_k (-1)^(i+k) tr(sigma^m | sum_{|I|=k} Im N_I^(i)), graded by L.
std::vector<LaurentPoly> equivariant_trace(const Multigraph& g, const GraphAutomorphism& sigma, unsigned m);

/// Compares Im N_I^(i) with lmain_subspace. diff = 2[A+B] - [A] - [B].
CheckResult verify_Lmain(const Multigraph& g, EdgeSet I, unsigned i);

}  // namespace curvecount
