#include "curvecount/invariants.hpp"

#include <map>

namespace curvecount {

namespace {

constexpr std::size_t kSubcurveLimit = 12;

void require_connected(const Multigraph& g, const char* what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + " needs a connected graph");
}

void require_rational(const Multigraph& g, const char* what) {
  if (g.genus_sum() != 0) throw PreconditionError(std::string(what) + " needs rational components");
}

void require_few_vertices(const Multigraph& g, const char* what) {
  if (g.vertex_count() > kSubcurveLimit) {
    throw PreconditionError(std::string(what) + " enumerates subcurves; limited to 12 vertices");
  }
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Vertex subset S as global indices of the induced subgraph's components.
std::vector<VertexSet> components_of(const Multigraph& g, VertexSet s) {
  const auto global = s.indices();
  std::vector<VertexSet> out;
  for (const auto& block : connected_components(g.induced(s))) {
    VertexSet c;
    for (std::size_t local : block) c = c.with(global[local]);
    out.push_back(c);
  }
  return out;
}

Rational sum_over(const Polarization& m, VertexSet s) {
  Rational total = 0;
  for (std::size_t v : s.indices()) total += m[v];
  return total;
}

BigInt floor_of(const Rational& x) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return out;
}

std::string subset_label(const Multigraph& g, VertexSet s) {
  std::string out = "{";
  for (std::size_t v : s.indices()) {
    if (out.size() > 1) out += ",";
    out += g.vertices()[v].id;
  }
  return out + "}";
}

}  // namespace

long arithmetic_genus(const Multigraph& g) {
  return static_cast<long>(g.edge_count()) - static_cast<long>(g.vertex_count()) + 1 + g.genus_sum();
}

long euler_characteristic(const Multigraph& g) { return 1 - arithmetic_genus(g); }

long hironaka_cogenus(const Multigraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, long> multiplicity;
  for (std::size_t e = 0; e < g.edge_count(); ++e) ++multiplicity[g.endpoints(e)];
  long delta = 0;
  for (const auto& [pair, count] : multiplicity) delta += count;
  return delta;
}

NumericInvariants numeric_invariants(const Multigraph& g) {
  NumericInvariants inv;
  inv.components = static_cast<long>(g.vertex_count());
  inv.cogenus = static_cast<long>(g.edge_count());
  if (hironaka_cogenus(g) != inv.cogenus) throw std::logic_error("node count disagrees with the edge count");
  inv.arithmetic_genus = arithmetic_genus(g);
  inv.abelian_rank = g.genus_sum();
  inv.geometric_genus = inv.abelian_rank + 1 - inv.components;
  inv.affine_rank = inv.cogenus + 1 - inv.components;
  return inv;
}

JacobianClass jacobian_class(const Multigraph& g) {
  require_connected(g, "the Jacobian class");
  require_rational(g, "the Jacobian class");
  if (g.edge_count() > kEnumerationLimit) throw GraphError("graph exceeds the enumeration limit");
  JacobianClass out;
  const RationalQL l_minus_one = RationalQL::monomial(0, 1) - RationalQL(1);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    const EdgeSet s(bits);
    const BigInt c = reduced_complexity(g, s);
    if (c == 0) continue;
    const auto h = static_cast<unsigned>(first_betti(g, g.all_edges() - s));
    out.strata += l_minus_one.pow(h) * RationalQL(LaurentPoly(c));
  }
  out.closed = RationalQL::monomial(0, static_cast<std::int64_t>(first_betti(g)),
                                    spanning_forest_count(g, ForestCountMethod::MatrixTree));
  return out;
}

SubsumSides subsum_sides(const Multigraph& g) {
  require_connected(g, "the subset sum identity");
  if (g.edge_count() > kEnumerationLimit) throw GraphError("graph exceeds the enumeration limit");
  SubsumSides out;
  out.removals.assign(g.edge_count() + 1, 0);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
    const EdgeSet s(bits);
    out.removals[s.size()] += reduced_complexity(g, s);
  }
  const BigInt c = reduced_complexity(g, EdgeSet());
  for (std::size_t i = 0; i <= g.edge_count(); ++i) out.binomial.push_back(binomial(first_betti(g), i) * c);
  return out;
}

WeightPoly jacobian_weight_poly(const Multigraph& g) {
  require_connected(g, "the Jacobian weight polynomial");
  const auto abelian = static_cast<unsigned>(2 * g.genus_sum());
  const WeightPoly one_plus_t = WeightPoly(1) + WeightPoly::monomial(0, 1);
  return one_plus_t.pow(abelian) *
         WeightPoly::monomial(0, 2 * static_cast<std::int64_t>(first_betti(g)),
                              spanning_forest_count(g, ForestCountMethod::MatrixTree));
}

WeightPoly ic_weight_poly(const Multigraph& g) {
  require_connected(g, "the IC weight polynomial");
  const auto abelian = static_cast<unsigned>(2 * g.genus_sum());
  const auto n = n_vector(g);
  const auto h = static_cast<std::int64_t>(first_betti(g));
  const WeightPoly one_plus_qt = WeightPoly(1) + WeightPoly::monomial(1, 1);
  const WeightPoly d = WeightPoly(one_minus_q(0) * one_minus_q(2));
  WeightPoly sum;
  for (std::size_t i = 0; i < n.size(); ++i) {
    const auto k = h - static_cast<std::int64_t>(i);
    sum += WeightPoly::monomial(k, 2 * k, n[i]) * d.pow(static_cast<unsigned>(i));
  }
  return one_plus_qt.pow(abelian) * sum;
}

RationalQL perverse_series(const Multigraph& g) {
  if (!is_connected(g)) return RationalQL();
  const auto n = n_vector(g);
  const long genus = arithmetic_genus(g);
  const RationalQL d = D_factor();
  RationalQL out;
  for (std::size_t h = 0; h < n.size(); ++h) {
    out += qL_power(genus - static_cast<long>(h)) * d.pow(static_cast<unsigned>(h)) * RationalQL(n[h]);
  }
  return out;
}

RationalQL ic_stalk_product(const Multigraph& g) {
  require_connected(g, "the IC stalk product");
  require_rational(g, "the IC stalk product");
  const RationalQL d = D_factor();
  const auto h0 = static_cast<unsigned>(component_count(g));
  RationalQL sum;
  for (EdgeSet I : enumerate_matroid(g)) {
    const auto rest = static_cast<unsigned>(g.edge_count() - I.size());
    sum += qL_power(static_cast<std::int64_t>(I.size())) * d.pow(rest + h0);
  }
  const auto nv = static_cast<unsigned>(g.vertex_count());
  return sum * RationalQL::inverse_denominator(nv, nv);
}

RationalQL hilbert_series(const Multigraph& g) {
  require_rational(g, "the Hilbert series");
  const RationalQL node = RationalQL(1) - RationalQL::monomial(1, 0) + RationalQL::monomial(2, 1);
  const auto nv = static_cast<unsigned>(g.vertex_count());
  return node.pow(static_cast<unsigned>(g.edge_count())) * RationalQL::inverse_denominator(nv, nv);
}

VertexClass hilbert_vertex_class(const Multigraph& g) {
  require_rational(g, "the Hilbert vertex class");
  require_few_vertices(g, "the Hilbert vertex class");
  VertexClass out(g.vertex_count());
  const std::uint64_t full = g.all_vertices().bits();
  for (std::uint64_t bits = 0; bits <= full; ++bits) {
    const Multigraph sub = g.induced(VertexSet(bits));
    out.set(VertexSet(bits), qL_power(1 - arithmetic_genus(sub)) * hilbert_series(sub));
  }
  return out;
}

VertexClass perverse_vertex_class(const Multigraph& g) {
  require_rational(g, "the perverse vertex class");
  require_few_vertices(g, "the perverse vertex class");
  VertexClass out(g.vertex_count());
  const std::uint64_t full = g.all_vertices().bits();
  const RationalQL inv_d = RationalQL::inverse_denominator(1, 1);
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    const Multigraph sub = g.induced(VertexSet(bits));
    if (!is_connected(sub)) continue;
    out.set(VertexSet(bits), qL_power(1 - arithmetic_genus(sub)) * inv_d * perverse_series(sub));
  }
  return out;
}

namespace {

// sum_i u^(i+1-g) nbar^i
ULaurent nbar_series(const Multigraph& g) {
  return to_u_laurent(at_L_one(hilbert_series(g)).shifted(1 - arithmetic_genus(g), 0));
}

// sum_i u^(i-g) n^i
ULaurent n_series(const Multigraph& g) {
  return to_u_laurent(at_L_one(perverse_series(g)).shifted(-arithmetic_genus(g), 0));
}

std::vector<BigInt> read_window(const ULaurent& f, std::int64_t lo, std::size_t len) {
  for (const auto& [e, c] : f.terms()) {
    if (e < lo || e >= lo + static_cast<std::int64_t>(len)) {
      throw RingError("u-expansion has a term outside the expected range");
    }
  }
  return f.window(lo, len);
}

}  // namespace

SeveriVectors severi_vectors(const Multigraph& g) {
  require_connected(g, "the Severi vectors");
  require_rational(g, "the Severi vectors");
  const long genus = arithmetic_genus(g);
  const std::size_t len = g.edge_count() + 1;
  SeveriVectors out;
  out.nbar = read_window(nbar_series(g), 1 - genus, len);
  out.n = read_window(n_series(g), -genus, len);
  return out;
}

std::vector<BigInt> matroid_size_counts(const Multigraph& g) {
  std::vector<BigInt> out(g.edge_count() + 1, 0);
  for (EdgeSet I : enumerate_matroid(g)) out[I.size()] += 1;
  return out;
}

CheckResult verify_nnbar(const Multigraph& g) {
  require_rational(g, "the n / nbar identity");
  require_few_vertices(g, "the n / nbar identity");
  const std::size_t nv = g.vertex_count();
  SquareZero<ULaurent> connected(nv);
  SquareZero<ULaurent> all(nv);
  const std::uint64_t full = g.all_vertices().bits();
  for (std::uint64_t bits = 0; bits <= full; ++bits) {
    const Multigraph sub = g.induced(VertexSet(bits));
    all.set(VertexSet(bits), nbar_series(sub));
    if (bits != 0 && is_connected(sub)) connected.set(VertexSet(bits), n_series(sub) * ULaurent::monomial(1));
  }
  const SquareZero<ULaurent> product = vertex_exp(connected);
  auto render = [&](const SquareZero<ULaurent>& f) {
    std::string out;
    for (std::uint64_t bits = 0; bits <= full; ++bits) {
      if (!out.empty()) out += "; ";
      out += subset_label(g, VertexSet(bits)) + ": " + f.at(VertexSet(bits)).render();
    }
    return out;
  };
  CheckResult r;
  r.name = "nnbar";
  r.lhs = render(product);
  r.rhs = render(all);
  std::string diff;
  for (std::uint64_t bits = 0; bits <= full; ++bits) {
    const ULaurent d = product.at(VertexSet(bits)) - all.at(VertexSet(bits));
    if (d.is_zero()) continue;
    if (!diff.empty()) diff += "; ";
    diff += subset_label(g, VertexSet(bits)) + ": " + d.render();
  }
  r.diff = diff.empty() ? "0" : diff;
  r.status = diff.empty() ? CheckStatus::Pass : CheckStatus::Fail;
  return r;
}

bool is_general_polarization(const Multigraph& g, const Polarization& m) {
  if (m.size() != g.vertex_count()) throw PreconditionError("polarization has the wrong number of entries");
  if (sum_over(m, g.all_vertices()).get_den() != 1) throw PreconditionError("polarization total is not an integer");
  require_few_vertices(g, "polarization genericity");
  const std::uint64_t full = g.all_vertices().bits();
  auto integral_on_components = [&](VertexSet s) {
    for (VertexSet c : components_of(g, s)) {
      if (sum_over(m, c).get_den() != 1) return false;
    }
    return true;
  };
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    const VertexSet d(bits);
    if (integral_on_components(d) && integral_on_components(g.all_vertices() - d)) return false;
  }
  return true;
}

std::vector<Multidegree> stable_multidegrees(const Multigraph& g, const Polarization& m) {
  if (!is_general_polarization(g, m)) throw PreconditionError("polarization is not general");
  const std::size_t nv = g.vertex_count();
  const std::uint64_t full = g.all_vertices().bits();
  const BigInt total_big = BigInt(sum_over(m, g.all_vertices()).get_num()) - euler_characteristic(g);
  const long total = total_big.get_si();
  if (nv == 0) return {Multidegree{}};
  if (nv == 1) return {Multidegree{total}};

  auto chi = [&](VertexSet s) { return euler_characteristic(g.induced(s)); };
  // d_D > m_D - chi(D) for every nontrivial D.
  std::vector<long> strict_floor(full + 1);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    strict_floor[bits] = BigInt(floor_of(sum_over(m, VertexSet(bits)) - chi(VertexSet(bits))) + 1).get_si();
  }
  std::vector<long> lo(nv);
  std::vector<long> hi(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    lo[v] = strict_floor[std::uint64_t{1} << v];
    hi[v] = total - strict_floor[full & ~(std::uint64_t{1} << v)];
  }

  std::vector<Multidegree> out;
  Multidegree d(nv);
  auto stable = [&]() {
    for (std::uint64_t bits = 1; bits < full; ++bits) {
      long sum = 0;
      for (std::uint64_t b = bits; b != 0; b &= b - 1) sum += d[static_cast<std::size_t>(__builtin_ctzll(b))];
      if (sum < strict_floor[bits]) return false;
    }
    return true;
  };
  auto walk = [&](auto&& self, std::size_t v, long partial) -> void {
    if (v + 1 == nv) {
      d[v] = total - partial;
      if (d[v] >= lo[v] && d[v] <= hi[v] && stable()) out.push_back(d);
      return;
    }
    for (long x = lo[v]; x <= hi[v]; ++x) {
      d[v] = x;
      self(self, v + 1, partial + x);
    }
  };
  walk(walk, 0, 0);
  return out;
}

CheckResult verify_connected_disconnected(const Multigraph& g) {
  require_rational(g, "the connected / disconnected identity");
  require_few_vertices(g, "the connected / disconnected identity");
  const RationalQL d = D_factor();
  const auto ne = static_cast<unsigned>(g.edge_count());
  RationalQL lhs;
  // Subsets J of E grouped by size.
  for (unsigned j = 0; j <= ne; ++j) lhs += qL_power(j) * d.pow(ne - j) * RationalQL(LaurentPoly(binomial(ne, j)));
  lhs = qL_power(1 - arithmetic_genus(g)) * lhs;

  RationalQL rhs;
  for (const auto& partition : connected_partitions(g)) {
    RationalQL term(1);
    for (const auto& block : partition) {
      VertexSet s;
      for (std::size_t v : block) s = s.with(v);
      const Multigraph sub = g.induced(s);
      RationalQL inner;
      for (EdgeSet I : enumerate_matroid(sub)) {
        inner += qL_power(static_cast<std::int64_t>(I.size())) *
                 d.pow(static_cast<unsigned>(sub.edge_count() - I.size()));
      }
      term *= qL_power(1 - arithmetic_genus(sub)) * inner;
    }
    rhs += term;
  }
  return compare_values("main-pointwise", lhs, rhs);
}

}  // namespace curvecount
