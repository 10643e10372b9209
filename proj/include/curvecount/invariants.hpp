#pragma once

// Closed-form invariants of a nodal curve computed from its dual graph.
// D below is (1-q)(1-q*L). All node symbols are specialized to 1.

#include <cstdint>
#include <vector>

#include "curvecount/check_result.hpp"
#include "curvecount/graph.hpp"
#include "curvecount/kring.hpp"
#include "curvecount/linalg.hpp"

namespace curvecount {

struct NumericInvariants {
  long components = 0;        // gamma
  long cogenus = 0;           // delta = |E|
  long arithmetic_genus = 0;  // g = 1 - chi(O_C)
  long geometric_genus = 0;   // genus of the normalization, sum g_v + 1 - gamma
  long abelian_rank = 0;      // sum g_v
  long affine_rank = 0;       // delta + 1 - gamma
};

NumericInvariants numeric_invariants(const Multigraph& g);
/// Loops plus edges between distinct vertex pairs, counted pair by pair.
long hironaka_cogenus(const Multigraph& g);
/// 1 - chi(O_C) = |E| - |V| + 1 + sum g_v; 1 for the empty graph.
long arithmetic_genus(const Multigraph& g);
/// |V| - |E| - sum g_v.
long euler_characteristic(const Multigraph& g);

struct JacobianClass {
  /// sum over S of c^(G \ S) (L - 1)^(h^1(G \ S))
  RationalQL strata;
  /// c(G) L^(h^1(G))
  RationalQL closed;
};
/// Connected graphs with rational components.
JacobianClass jacobian_class(const Multigraph& g);

/// sum_{|S| = i} c^(G \ S) and binomial(b_1, i) c(G), for i = 0..|E|.
struct SubsumSides {
  std::vector<BigInt> removals;
  std::vector<BigInt> binomial;
};
SubsumSides subsum_sides(const Multigraph& g);

/// (1+t)^(2 sum g_v) t^(2 h^1) c(G). Connected graphs.
WeightPoly jacobian_weight_poly(const Multigraph& g);
/// (1+qt)^(2 sum g_v) sum_i n_i (q t^2)^(h^1 - i) ((1-q t^2)(1-q))^i. Connected graphs.
WeightPoly ic_weight_poly(const Multigraph& g);

/// sum_h n_h (qL)^(g-h) D^h; zero for disconnected or empty graphs.
RationalQL perverse_series(const Multigraph& g);
/// sum_{I in C(G)} (qL)^|I| D^(|E \ I| + h^0) / D^|V|. Connected, rational.
RationalQL ic_stalk_product(const Multigraph& g);
/// prod_v 1/D prod_e (1 - q + q^2 L). Rational components; empty graph -> 1.
RationalQL hilbert_series(const Multigraph& g);

/// S -> (qL)^(1 - g(G_S)) hilbert_series(G_S), with 1 at the empty set.
VertexClass hilbert_vertex_class(const Multigraph& g);
/// S -> (qL)^(1 - g(G_S)) / D * perverse_series(G_S) for connected nonempty S, else 0.
VertexClass perverse_vertex_class(const Multigraph& g);

struct SeveriVectors {
  /// Extracted from the Hilbert series at L = 1, indices 0..|E|.
  std::vector<BigInt> nbar;
  /// Extracted from the perverse series at L = 1, indices 0..|E|.
  std::vector<BigInt> n;
};
/// Connected graphs with rational components.
SeveriVectors severi_vectors(const Multigraph& g);
/// #{I in C(G) : |I| = i}, i = 0..|E|.
std::vector<BigInt> matroid_size_counts(const Multigraph& g);

/// Square-zero identity between the n and nbar vectors of all subcurves.
CheckResult verify_nnbar(const Multigraph& g);

using Polarization = std::vector<Rational>;
using Multidegree = std::vector<long>;

/// Throws PreconditionError when |m| is not an integer.
bool is_general_polarization(const Multigraph& g, const Polarization& m);
/// Multidegrees with total |m| - chi(O_C) and d_D + chi(O_D) > m_D for every
/// nontrivial subcurve D, in lexicographic order. Throws PreconditionError
/// when m is not general.
std::vector<Multidegree> stable_multidegrees(const Multigraph& g, const Polarization& m);

/// Sum over all edge subsets against the sum over connected vertex partitions.
CheckResult verify_connected_disconnected(const Multigraph& g);

}  // namespace curvecount
