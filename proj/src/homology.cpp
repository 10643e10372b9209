#include "curvecount/homology.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>
#include <numeric>

namespace curvecount {

namespace {

constexpr std::uint64_t bit(std::size_t k) { return std::uint64_t{1} << k; }

int popcount(std::uint64_t m) { return __builtin_popcountll(m); }

SparseVec from_map(const std::map<std::uint64_t, Rational>& acc) {
  SparseVec out;
  out.reserve(acc.size());
  for (const auto& [k, c] : acc) {
    if (c != 0) out.emplace_back(k, c);
  }
  return out;
}

void require_rational_connected(const Multigraph& g) {
  if (!is_connected(g)) throw PreconditionError("the CKS stalk needs a connected graph");
  if (g.genus_sum() != 0) throw PreconditionError("the CKS stalk is computed for rational components only");
  if (g.edge_count() > kEnumerationLimit) throw GraphError("graph exceeds the enumeration limit");
}

}  // namespace

DualGraphHomology::DualGraphHomology(const Multigraph& g) : graph_(g) {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // tree adjacency: (neighbour, edge)
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
  for (std::size_t e = 0; e < ne; ++e) {
    auto [s, t] = g.endpoints(e);
    const std::size_t a = find(s);
    const std::size_t b = find(t);
    if (a == b) {
      basis_.cycle_edges.push_back(e);
      continue;
    }
    parent[std::max(a, b)] = std::min(a, b);
    basis_.forest = basis_.forest.with(e);
    adj[s].emplace_back(t, e);
    adj[t].emplace_back(s, e);
  }
  for (std::size_t j : basis_.cycle_edges) {
    std::vector<long> z(ne, 0);
    z[j] = 1;
    auto [s, t] = g.endpoints(j);
    if (s != t) {
      // Tree path from t to s; a step u -> v along f adds +f if f is oriented u -> v.
      std::vector<std::pair<std::size_t, std::size_t>> via(nv, {SIZE_MAX, SIZE_MAX});
      std::deque<std::size_t> queue{t};
      via[t] = {t, SIZE_MAX};
      while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        if (u == s) break;
        for (auto [v, f] : adj[u]) {
          if (via[v].first != SIZE_MAX) continue;
          via[v] = {u, f};
          queue.push_back(v);
        }
      }
      for (std::size_t v = s; v != t; v = via[v].first) {
        const auto [u, f] = via[v];
        z[f] += g.endpoints(f).first == u ? 1 : -1;
      }
    }
    basis_.cycles.push_back(std::move(z));
  }
  for (std::size_t j : basis_.cycle_edges) {
    cohomology_.labels.push_back("x:" + g.edges()[j].id);
    cohomology_.weights.push_back(0);
    homology_.labels.push_back("y:" + g.edges()[j].id);
    homology_.weights.push_back(1);
  }
}

GradedSpace DualGraphHomology::working_space() const {
  GradedSpace w = cohomology_;
  w.labels.insert(w.labels.end(), homology_.labels.begin(), homology_.labels.end());
  w.weights.insert(w.weights.end(), homology_.weights.begin(), homology_.weights.end());
  return w;
}

Matrix DualGraphHomology::boundary() const {
  Matrix d(graph_.vertex_count(), graph_.edge_count());
  for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
    auto [s, t] = graph_.endpoints(e);
    d(t, e) += 1;
    d(s, e) -= 1;
  }
  return d;
}

Matrix DualGraphHomology::pairing() const {
  const std::size_t h = betti();
  Matrix p(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = 0; j < h; ++j) p(i, j) = basis_.cycles[j][basis_.cycle_edges[i]];
  }
  return p;
}

std::vector<long> DualGraphHomology::covector(std::size_t e) const {
  std::vector<long> c(betti());
  for (std::size_t k = 0; k < betti(); ++k) c[k] = basis_.cycles[k][e];
  return c;
}

LinOp operator_N(const DualGraphHomology& hom, std::size_t e) {
  const std::size_t h = hom.betti();
  LinOp n{hom.working_space(), hom.working_space(), Matrix(2 * h, 2 * h), 1};
  const auto c = hom.covector(e);
  for (std::size_t j = 0; j < h; ++j) {
    for (std::size_t k = 0; k < h; ++k) n.matrix(k, h + j) = c[j] * c[k];
  }
  return n;
}

std::vector<std::uint64_t> wedge_monomials(std::size_t dim, unsigned i) {
  std::vector<std::uint64_t> out;
  if (i > dim) return out;
  if (i == 0) return {0};
  std::uint64_t m = bit(i) - 1;
  const std::uint64_t limit = dim >= 64 ? ~std::uint64_t{0} : bit(dim);
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t c = m & (~m + 1);
    const std::uint64_t r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

GradedSpace wedge_space(const GradedSpace& v, unsigned i) {
  GradedSpace out;
  for (std::uint64_t m : wedge_monomials(v.dim(), i)) {
    std::string label;
    int weight = 0;
    for (std::uint64_t b = m; b != 0; b &= b - 1) {
      const auto k = static_cast<std::size_t>(__builtin_ctzll(b));
      if (!label.empty()) label += "^";
      label += v.labels[k];
      weight += v.weights[k];
    }
    out.labels.push_back(label.empty() ? "1" : label);
    out.weights.push_back(weight);
  }
  return out;
}

SparseColumns sparse_columns(const Matrix& m) {
  SparseColumns cols(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (m(r, c) != 0) cols[c].emplace_back(r, m(r, c));
    }
  }
  return cols;
}

SparseVec apply_derivation(const SparseColumns& op, const SparseVec& v) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [m, a] : v) {
    for (std::uint64_t rest = m; rest != 0; rest &= rest - 1) {
      const auto p = static_cast<std::size_t>(__builtin_ctzll(rest));
      if (op[p].empty()) continue;
      const std::uint64_t m0 = m & ~bit(p);
      const int pos_p = popcount(m & (bit(p) - 1));
      for (const auto& [r, x] : op[p]) {
        if (m0 & bit(r)) continue;
        const int pos_r = popcount(m0 & (bit(r) - 1));
        Rational term = a * x;
        if ((pos_p + pos_r) & 1) term = -term;
        acc[m0 | bit(r)] += term;
      }
    }
  }
  return from_map(acc);
}

SparseVec wedge(const SparseVec& a, const SparseVec& b) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      int inversions = 0;
      for (std::uint64_t rest = mb; rest != 0; rest &= rest - 1) {
        const auto y = static_cast<std::size_t>(__builtin_ctzll(rest));
        inversions += popcount(ma & ~(bit(y + 1) - 1));
      }
      Rational term = ca * cb;
      if (inversions & 1) term = -term;
      acc[ma | mb] += term;
    }
  }
  return from_map(acc);
}

SparseVec apply_induced(const SparseColumns& op, const SparseVec& v) {
  std::map<std::uint64_t, Rational> acc;
  for (const auto& [m, a] : v) {
    SparseVec prod{{0, a}};
    for (std::uint64_t rest = m; rest != 0 && !prod.empty(); rest &= rest - 1) {
      const auto p = static_cast<std::size_t>(__builtin_ctzll(rest));
      SparseVec image;
      for (const auto& [r, x] : op[p]) image.emplace_back(bit(r), x);
      prod = wedge(prod, image);
    }
    for (const auto& [k, c] : prod) acc[k] += c;
  }
  return from_map(acc);
}

LinOp wedge_operator(const LinOp& n, unsigned i) {
  LinOp out{wedge_space(n.source, i), wedge_space(n.target, i), Matrix(), n.twist};
  const auto monos = wedge_monomials(n.source.dim(), i);
  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index[monos[k]] = k;
  out.matrix = Matrix(monos.size(), monos.size());
  const auto cols = sparse_columns(n.matrix);
  for (std::size_t k = 0; k < monos.size(); ++k) {
    for (const auto& [m, c] : apply_derivation(cols, SparseVec{{monos[k], 1}})) out.matrix(index.at(m), k) = c;
  }
  return out;
}

std::size_t WedgeSubspace::dim() const {
  std::size_t d = 0;
  for (const auto& [c, piece] : pieces) d += piece.rank();
  return d;
}

LaurentPoly WedgeSubspace::graded_class() const {
  LaurentPoly out;
  for (const auto& [c, piece] : pieces) {
    out.add_term(0, static_cast<std::int64_t>(c) + twist, static_cast<long>(piece.rank()));
  }
  return out;
}

void WedgeSubspace::insert(SparseVec v) {
  if (v.empty()) return;
  const auto ycount = static_cast<unsigned>(popcount(v.front().first >> h));
  pieces[ycount].insert(std::move(v));
}

namespace {

WedgeSubspace full_wedge(std::size_t h, unsigned i) {
  WedgeSubspace s;
  s.h = h;
  s.degree = i;
  for (std::uint64_t m : wedge_monomials(2 * h, i)) s.insert(SparseVec{{m, 1}});
  return s;
}

WedgeSubspace apply_step(const WedgeSubspace& from, const SparseColumns& op) {
  WedgeSubspace to;
  to.h = from.h;
  to.degree = from.degree;
  to.twist = from.twist + 1;
  for (const auto& [c, piece] : from.pieces) {
    if (c == 0) continue;
    for (const auto& row : piece.basis()) to.insert(apply_derivation(op, row));
  }
  return to;
}

std::vector<SparseColumns> all_N_columns(const DualGraphHomology& hom) {
  std::vector<SparseColumns> ops;
  for (std::size_t e = 0; e < hom.graph().edge_count(); ++e) ops.push_back(sparse_columns(operator_N(hom, e).matrix));
  return ops;
}

// Visits every I with a nonzero image, in increasing-edge DFS order.
void for_each_image(const DualGraphHomology& hom, unsigned i, const std::vector<SparseColumns>& ops,
                    const std::function<void(EdgeSet, const WedgeSubspace&)>& visit) {
  const std::size_t ne = hom.graph().edge_count();
  std::function<void(EdgeSet, std::size_t, const WedgeSubspace&)> walk = [&](EdgeSet I, std::size_t next,
                                                                                const WedgeSubspace& space) {
    visit(I, space);
    for (std::size_t e = next; e < ne; ++e) {
      WedgeSubspace child = apply_step(space, ops[e]);
      if (child.dim() == 0) continue;
      walk(I.with(e), e + 1, child);
    }
  };
  WedgeSubspace root = full_wedge(hom.betti(), i);
  if (root.dim() == 0) return;
  walk(EdgeSet(), 0, root);
}

}  // namespace

WedgeSubspace image_NI(const DualGraphHomology& hom, EdgeSet I, unsigned i) {
  WedgeSubspace space = full_wedge(hom.betti(), i);
  for (std::size_t e : I.indices()) {
    if (e >= hom.graph().edge_count()) throw GraphError("edge index out of range");
    space = apply_step(space, sparse_columns(operator_N(hom, e).matrix));
  }
  space.twist = static_cast<int>(I.size());
  return space;
}

WedgeSubspace lmain_subspace(const DualGraphHomology& hom, EdgeSet I, unsigned i) {
  const Multigraph& g = hom.graph();
  if (!is_spanning_connected(g, I)) throw PreconditionError("edge set is not in the cographic matroid");
  const std::size_t h = hom.betti();
  WedgeSubspace out;
  out.h = h;
  out.degree = i;
  out.twist = static_cast<int>(I.size());
  if (i < I.size()) return out;

  auto covector_vec = [&](std::size_t e) {
    SparseVec v;
    const auto c = hom.covector(e);
    for (std::size_t k = 0; k < h; ++k) {
      if (c[k] != 0) v.emplace_back(bit(k), c[k]);
    }
    return v;
  };

  SparseVec e_I{{0, 1}};
  for (std::size_t e : I.indices()) e_I = wedge(e_I, covector_vec(e));

  // Generators: [f*] for f outside I, and cycles of G \ I.
  RowEchelon gens;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (!I.contains(f)) gens.insert(covector_vec(f));
  }
  std::vector<std::size_t> kept;
  for (std::size_t f = 0; f < g.edge_count(); ++f) {
    if (!I.contains(f)) kept.push_back(f);
  }
  const Matrix d = hom.boundary();
  Matrix restricted(d.rows(), kept.size());
  for (std::size_t r = 0; r < d.rows(); ++r) {
    for (std::size_t c = 0; c < kept.size(); ++c) restricted(r, c) = d(r, kept[c]);
  }
  const Matrix ker = restricted.kernel();
  for (std::size_t col = 0; col < ker.cols(); ++col) {
    std::vector<Rational> z(g.edge_count());
    for (std::size_t c = 0; c < kept.size(); ++c) z[kept[c]] = ker(c, col);
    SparseVec v;
    for (std::size_t l = 0; l < h; ++l) {
      const Rational& coord = z[hom.forest().cycle_edges[l]];
      if (coord != 0) v.emplace_back(bit(h + l), coord);
    }
    gens.insert(std::move(v));
  }

  const auto basis = gens.basis();
  const unsigned rest = i - static_cast<unsigned>(I.size());
  for (std::uint64_t choice : wedge_monomials(basis.size(), rest)) {
    SparseVec v = e_I;
    for (std::uint64_t b = choice; b != 0 && !v.empty(); b &= b - 1) v = wedge(v, basis[static_cast<std::size_t>(__builtin_ctzll(b))]);
    out.insert(std::move(v));
  }
  return out;
}

std::vector<LaurentPoly> cks_terms(const Multigraph& g) {
  require_rational_connected(g);
  const DualGraphHomology hom(g);
  const auto ops = all_N_columns(hom);
  const auto top = static_cast<unsigned>(2 * hom.betti());
  std::vector<LaurentPoly> terms(top + 1);
  for (unsigned i = 0; i <= top; ++i) {
    for_each_image(hom, i, ops, [&](EdgeSet I, const WedgeSubspace& space) {
      const LaurentPoly cls = space.graded_class();
      if (I.size() % 2 == 0) {
        terms[i] += cls;
      } else {
        terms[i] -= cls;
      }
    });
  }
  return terms;
}

RationalQL cks_stalk_class(const Multigraph& g) {
  const auto terms = cks_terms(g);
  LaurentPoly total;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const LaurentPoly t = terms[i].shifted(static_cast<std::int64_t>(i), 0);
    if (i % 2 == 0) {
      total += t;
    } else {
      total -= t;
    }
  }
  return RationalQL(total);
}

GraphAutomorphism GraphAutomorphism::identity(const Multigraph& g) {
  GraphAutomorphism s;
  s.vertex_map.resize(g.vertex_count());
  std::iota(s.vertex_map.begin(), s.vertex_map.end(), 0);
  s.edge_map.resize(g.edge_count());
  std::iota(s.edge_map.begin(), s.edge_map.end(), 0);
  s.reversed.assign(g.edge_count(), false);
  return s;
}

GraphAutomorphism GraphAutomorphism::from_maps(const Multigraph& g, std::vector<std::size_t> vertex_map,
                                               std::vector<std::size_t> edge_map) {
  GraphAutomorphism s;
  s.vertex_map = std::move(vertex_map);
  s.edge_map = std::move(edge_map);
  s.reversed.assign(g.edge_count(), false);
  if (s.vertex_map.size() != g.vertex_count() || s.edge_map.size() != g.edge_count()) {
    throw GraphError("automorphism maps have the wrong size");
  }
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (g.is_loop(e) || s.edge_map[e] >= g.edge_count()) continue;
    const auto [u, v] = g.endpoints(e);
    s.reversed[e] = s.vertex_map[u] == g.endpoints(s.edge_map[e]).second && s.vertex_map[u] != s.vertex_map[v];
  }
  s.validate(g);
  return s;
}

void GraphAutomorphism::validate(const Multigraph& g) const {
  const std::size_t nv = g.vertex_count();
  const std::size_t ne = g.edge_count();
  if (vertex_map.size() != nv || edge_map.size() != ne || reversed.size() != ne) {
    throw GraphError("automorphism maps have the wrong size");
  }
  std::vector<bool> seen_v(nv, false);
  for (std::size_t v : vertex_map) {
    if (v >= nv || seen_v[v]) throw GraphError("vertex map is not a permutation");
    seen_v[v] = true;
  }
  std::vector<bool> seen_e(ne, false);
  for (std::size_t e = 0; e < ne; ++e) {
    const std::size_t f = edge_map[e];
    if (f >= ne || seen_e[f]) throw GraphError("edge map is not a permutation");
    seen_e[f] = true;
    auto [s, t] = g.endpoints(e);
    auto [fs, ft] = g.endpoints(f);
    std::size_t ms = vertex_map[s];
    std::size_t mt = vertex_map[t];
    if (reversed[e]) std::swap(ms, mt);
    if (ms != fs || mt != ft) throw GraphError("automorphism is not compatible with incidence");
  }
  if (g.genus_sum() > 0) {
    for (std::size_t v = 0; v < nv; ++v) {
      if (g.vertices()[v].genus != g.vertices()[vertex_map[v]].genus) throw GraphError("automorphism moves genera");
    }
  }
}

GraphAutomorphism GraphAutomorphism::compose(const GraphAutomorphism& first) const {
  GraphAutomorphism out;
  out.vertex_map.resize(vertex_map.size());
  for (std::size_t v = 0; v < vertex_map.size(); ++v) out.vertex_map[v] = vertex_map[first.vertex_map[v]];
  out.edge_map.resize(edge_map.size());
  out.reversed.resize(edge_map.size());
  for (std::size_t e = 0; e < edge_map.size(); ++e) {
    out.edge_map[e] = edge_map[first.edge_map[e]];
    out.reversed[e] = first.reversed[e] != reversed[first.edge_map[e]];
  }
  return out;
}

GraphAutomorphism GraphAutomorphism::power(unsigned m) const {
  GraphAutomorphism out;
  out.vertex_map.resize(vertex_map.size());
  std::iota(out.vertex_map.begin(), out.vertex_map.end(), 0);
  out.edge_map.resize(edge_map.size());
  std::iota(out.edge_map.begin(), out.edge_map.end(), 0);
  out.reversed.assign(edge_map.size(), false);
  for (unsigned k = 0; k < m; ++k) out = compose(out);
  return out;
}

unsigned GraphAutomorphism::order() const {
  GraphAutomorphism cur = *this;
  for (unsigned k = 1;; ++k) {
    bool is_id = true;
    for (std::size_t v = 0; v < cur.vertex_map.size() && is_id; ++v) is_id = cur.vertex_map[v] == v;
    for (std::size_t e = 0; e < cur.edge_map.size() && is_id; ++e) is_id = cur.edge_map[e] == e && !cur.reversed[e];
    if (is_id) return k;
    cur = compose(cur);
  }
}

Matrix GraphAutomorphism::action_on_w(const DualGraphHomology& hom) const {
  const std::size_t h = hom.betti();
  const auto& J = hom.forest().cycle_edges;
  const auto& cycles = hom.forest().cycles;
  Matrix s(2 * h, 2 * h);
  auto sign = [&](std::size_t e) { return reversed[e] ? -1L : 1L; };
  for (std::size_t k = 0; k < h; ++k) {
    // x_k = [J_k*] -> sign * [sigma(J_k)*] = sign * sum_l cycles[l][sigma(J_k)] x_l
    const std::size_t target = edge_map[J[k]];
    for (std::size_t l = 0; l < h; ++l) s(l, k) = sign(J[k]) * cycles[l][target];
  }
  for (std::size_t j = 0; j < h; ++j) {
    // y_j -> sum_e cycles[j][e] sign(e) sigma(e); read off the J-coordinates.
    for (std::size_t e = 0; e < edge_map.size(); ++e) {
      if (cycles[j][e] == 0) continue;
      const auto pos = std::find(J.begin(), J.end(), edge_map[e]);
      if (pos == J.end()) continue;
      s(h + static_cast<std::size_t>(pos - J.begin()), h + j) += cycles[j][e] * sign(e);
    }
  }
  return s;
}

std::vector<LaurentPoly> equivariant_trace(const Multigraph& g, const GraphAutomorphism& sigma, unsigned m) {
  require_rational_connected(g);
  sigma.validate(g);
  const GraphAutomorphism sm = sigma.power(m);
  const DualGraphHomology hom(g);
  const auto ops = all_N_columns(hom);
  const auto action = sparse_columns(sm.action_on_w(hom));
  const auto top = static_cast<unsigned>(2 * hom.betti());
  std::vector<LaurentPoly> out(top + 1);
  for (unsigned i = 0; i <= top; ++i) {
    for_each_image(hom, i, ops, [&](EdgeSet I, const WedgeSubspace& space) {
      EdgeSet moved;
      for (std::size_t e : I.indices()) moved = moved.with(sm.edge_map[e]);
      if (moved != I) return;
      LaurentPoly tr;
      for (const auto& [c, piece] : space.pieces) {
        Rational total = 0;
        for (const auto& b : piece.reduced_basis()) total += coefficient(apply_induced(action, b), b.front().first);
        if (total.get_den() != 1) throw std::logic_error("non-integral trace");
        tr.add_term(0, static_cast<std::int64_t>(c + I.size()), total.get_num());
      }
      if ((i + I.size()) % 2 == 0) {
        out[i] += tr;
      } else {
        out[i] -= tr;
      }
    });
  }
  return out;
}

CheckResult verify_Lmain(const Multigraph& g, EdgeSet I, unsigned i) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  r.name = "lmain";
  const DualGraphHomology hom(g);
  const WedgeSubspace a = image_NI(hom, I, i);
  const WedgeSubspace b = lmain_subspace(hom, I, i);
  WedgeSubspace sum = a;
  for (const auto& [c, piece] : b.pieces) {
    for (const auto& row : piece.basis()) sum.insert(row);
  }
  const LaurentPoly ca = a.graded_class();
  const LaurentPoly cb = b.graded_class();
  const LaurentPoly diff = sum.graded_class() * LaurentPoly(2) - ca - cb;
  r.lhs = ca.render("L");
  r.rhs = cb.render("L");
  r.diff = diff.render("L");
  r.status = diff.is_zero() ? CheckStatus::Pass : CheckStatus::Fail;
  r.detail = "dim " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace curvecount
