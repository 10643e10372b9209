#include "curvecount/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace curvecount {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr std::size_t kMaxIndexed = 64;
constexpr std::size_t kPartitionLimit = 12;

void require_enumerable(const Multigraph& g) {
  if (g.edge_count() > kEnumerationLimit) {
    throw GraphError("graph has " + std::to_string(g.edge_count()) + " edges; enumeration is limited to " +
                     std::to_string(kEnumerationLimit));
  }
}

// Bareiss fraction-free determinant.
BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]);
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt matrix_tree_count(const Multigraph& g) {
  BigInt total = 1;
  for (const auto& block : connected_components(g)) {
    if (block.size() <= 1) continue;
    std::vector<std::size_t> local(g.vertex_count(), 0);
    for (std::size_t k = 0; k < block.size(); ++k) local[block[k]] = k;
    std::vector<std::vector<BigInt>> lap(block.size(), std::vector<BigInt>(block.size(), 0));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      auto [u, v] = g.endpoints(e);
      if (u == v) continue;
      if (local[u] >= block.size() || block[local[u]] != u) continue;
      const std::size_t a = local[u];
      const std::size_t b = local[v];
      lap[a][a] += 1;
      lap[b][b] += 1;
      lap[a][b] -= 1;
      lap[b][a] -= 1;
    }
    // Delete the first row and column.
    std::vector<std::vector<BigInt>> minor(block.size() - 1, std::vector<BigInt>(block.size() - 1));
    for (std::size_t i = 1; i < block.size(); ++i) {
      for (std::size_t j = 1; j < block.size(); ++j) minor[i - 1][j - 1] = lap[i][j];
    }
    total *= determinant(std::move(minor));
  }
  return total;
}

std::vector<std::string> sorted_ids(const Multigraph& g, EdgeSet s) {
  std::vector<std::string> ids;
  for (auto e : s.indices()) ids.push_back(g.edges()[e].id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

Multigraph::Multigraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.size() > kMaxIndexed || edges_.size() > kMaxIndexed) {
    throw GraphError("graphs are limited to 64 vertices and 64 edges");
  }
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].genus < 0) throw GraphError("vertex '" + vertices_[v].id + "' has negative genus");
    if (!index.emplace(vertices_[v].id, v).second) {
      throw GraphError("duplicate vertex id '" + vertices_[v].id + "'");
    }
  }
  std::set<std::string, std::less<>> edge_ids;
  ends_.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!edge_ids.insert(e.id).second) throw GraphError("duplicate edge id '" + e.id + "'");
    auto a = index.find(e.ends.first);
    auto b = index.find(e.ends.second);
    if (a == index.end() || b == index.end()) {
      throw GraphError("edge '" + e.id + "' has an undeclared endpoint");
    }
    ends_.emplace_back(std::min(a->second, b->second), std::max(a->second, b->second));
  }
}

std::optional<std::size_t> Multigraph::find_vertex(std::string_view id) const {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].id == id) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> Multigraph::find_edge(std::string_view id) const {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].id == id) return e;
  }
  return std::nullopt;
}

int Multigraph::genus_sum() const { return genus_sum(all_vertices()); }

int Multigraph::genus_sum(VertexSet s) const {
  int total = 0;
  for (auto v : s.indices()) total += vertices_[v].genus;
  return total;
}

EdgeSet Multigraph::induced_edges(VertexSet s) const {
  EdgeSet out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (s.contains(ends_[e].first) && s.contains(ends_[e].second)) out = out.with(e);
  }
  return out;
}

Multigraph Multigraph::induced(VertexSet s) const {
  std::vector<Vertex> vs;
  for (auto v : s.indices()) vs.push_back(vertices_[v]);
  std::vector<Edge> es;
  for (auto e : induced_edges(s).indices()) es.push_back(edges_[e]);
  return Multigraph(std::move(vs), std::move(es));
}

Multigraph Multigraph::without_edges(EdgeSet removed) const {
  std::vector<Edge> es;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (!removed.contains(e)) es.push_back(edges_[e]);
  }
  return Multigraph(vertices_, std::move(es));
}

VertexPartition connected_components(const Multigraph& g) {
  UnionFind uf(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.endpoints(e);
    uf.unite(u, v);
  }
  std::map<std::size_t, std::vector<std::size_t>> blocks;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) blocks[uf.find(v)].push_back(v);
  VertexPartition out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  return out;
}

std::size_t component_count(const Multigraph& g, EdgeSet kept) {
  UnionFind uf(g.vertex_count());
  std::size_t count = g.vertex_count();
  for (auto e : kept.indices()) {
    auto [u, v] = g.endpoints(e);
    if (uf.unite(u, v)) --count;
  }
  return count;
}

std::size_t component_count(const Multigraph& g) { return component_count(g, g.all_edges()); }

bool is_connected(const Multigraph& g) { return component_count(g) == 1; }

bool induces_connected(const Multigraph& g, VertexSet s) {
  if (s.empty()) return false;
  UnionFind uf(g.vertex_count());
  std::size_t count = s.size();
  for (auto e : g.induced_edges(s).indices()) {
    auto [u, v] = g.endpoints(e);
    if (uf.unite(u, v)) --count;
  }
  return count == 1;
}

std::size_t first_betti(const Multigraph& g, EdgeSet kept) {
  return kept.size() + component_count(g, kept) - g.vertex_count();
}

std::size_t first_betti(const Multigraph& g) { return first_betti(g, g.all_edges()); }

bool is_spanning_connected(const Multigraph& g, EdgeSet removed) {
  return component_count(g, g.all_edges() - removed) == component_count(g);
}

std::vector<EdgeSet> enumerate_matroid(const Multigraph& g) {
  require_enumerable(g);
  const std::size_t base = component_count(g);
  std::vector<EdgeSet> out;
  // The family is downward closed, so extending only members in increasing
  // edge order reaches every member exactly once.
  std::vector<EdgeSet> frontier{EdgeSet{}};
  while (!frontier.empty()) {
    EdgeSet s = frontier.back();
    frontier.pop_back();
    out.push_back(s);
    const std::size_t start = s.empty() ? 0 : s.indices().back() + 1;
    for (std::size_t e = start; e < g.edge_count(); ++e) {
      EdgeSet t = s.with(e);
      if (component_count(g, g.all_edges() - t) == base) frontier.push_back(t);
    }
  }
  std::vector<std::pair<std::vector<std::string>, EdgeSet>> keyed;
  keyed.reserve(out.size());
  for (auto s : out) keyed.emplace_back(sorted_ids(g, s), s);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  for (std::size_t k = 0; k < keyed.size(); ++k) out[k] = keyed[k].second;
  return out;
}

std::vector<std::int64_t> n_vector(const Multigraph& g) {
  const std::size_t h1 = first_betti(g);
  std::vector<std::int64_t> n(h1 + 1, 0);
  if (!is_connected(g)) return n;
  for (auto s : enumerate_matroid(g)) ++n[h1 - s.size()];
  return n;
}

BigInt spanning_forest_count(const Multigraph& g, ForestCountMethod method) {
  if (method == ForestCountMethod::MatrixTree) return matrix_tree_count(g);
  const std::size_t h1 = first_betti(g);
  BigInt count = 0;
  for (auto s : enumerate_matroid(g)) {
    if (s.size() == h1) ++count;
  }
  return count;
}

BigInt reduced_complexity(const Multigraph& g, EdgeSet removed) {
  if (!is_spanning_connected(g, removed)) return 0;
  return matrix_tree_count(g.without_edges(removed));
}

std::vector<VertexPartition> connected_partitions(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kPartitionLimit) {
    throw GraphError("partition enumeration is limited to " + std::to_string(kPartitionLimit) + " vertices");
  }
  std::vector<VertexPartition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: label[0] = 0, label[k] <= max(label[0..k)) + 1.
  std::vector<std::size_t> label(n, 0);
  auto emit = [&] {
    std::size_t blocks = *std::max_element(label.begin(), label.end()) + 1;
    std::vector<VertexSet> sets(blocks);
    for (std::size_t v = 0; v < n; ++v) sets[label[v]] = sets[label[v]].with(v);
    for (auto s : sets) {
      if (!induces_connected(g, s)) return;
    }
    VertexPartition p;
    for (auto s : sets) p.push_back(s.indices());
    out.push_back(std::move(p));
  };
  auto recurse = [&](auto&& self, std::size_t k, std::size_t max_label) -> void {
    if (k == n) {
      emit();
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      label[k] = l;
      self(self, k + 1, std::max(max_label, l));
    }
  };
  recurse(recurse, 1, 0);
  return out;
}

void validate(const Hypergraph& h) {
  std::set<std::string> declared;
  for (const auto& v : h.vertices) {
    if (!declared.insert(v).second) throw GraphError("duplicate hypergraph vertex '" + v + "'");
  }
  for (const auto& e : h.hyperedges) {
    if (e.empty()) throw GraphError("empty hyperedge");
    for (const auto& v : e) {
      if (!declared.contains(v)) throw GraphError("hyperedge member '" + v + "' is not a vertex");
    }
  }
}

long hypergraph_b(const Hypergraph& h) {
  validate(h);
  long b = 1 - static_cast<long>(h.vertices.size());
  for (const auto& e : h.hyperedges) b += static_cast<long>(e.size()) - 1;
  return b;
}

bool is_connected(const Hypergraph& h) {
  validate(h);
  const std::size_t nv = h.vertices.size();
  std::map<std::string, std::size_t> index;
  for (std::size_t v = 0; v < nv; ++v) index[h.vertices[v]] = v;
  UnionFind uf(nv + h.hyperedges.size());
  std::size_t count = nv + h.hyperedges.size();
  for (std::size_t e = 0; e < h.hyperedges.size(); ++e) {
    for (const auto& v : h.hyperedges[e]) {
      if (uf.unite(index[v], nv + e)) --count;
    }
  }
  return count == 1;
}

Hypergraph to_hypergraph(const Multigraph& g) {
  Hypergraph h;
  for (const auto& v : g.vertices()) h.vertices.push_back(v.id);
  for (const auto& e : g.edges()) h.hyperedges.push_back({e.ends.first, e.ends.second});
  return h;
}

}  // namespace curvecount
