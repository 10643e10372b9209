#include "curvecount/graph_gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "curvecount/catalog.hpp"

namespace curvecount {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

bool connected_on(std::size_t n, const EdgeList& edges) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (auto [a, b] : edges) {
    const auto ra = find(static_cast<std::size_t>(a));
    const auto rb = find(static_cast<std::size_t>(b));
    if (ra != rb) {
      parent[ra] = rb;
      --parts;
    }
  }
  return parts == 1;
}

EdgeList canonical_form(std::size_t n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  EdgeList relabeled(edges.size());
  do {
    for (std::size_t k = 0; k < edges.size(); ++k) {
      int a = perm[static_cast<std::size_t>(edges[k].first)];
      int b = perm[static_cast<std::size_t>(edges[k].second)];
      if (a > b) std::swap(a, b);
      relabeled[k] = {a, b};
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (best.empty() || relabeled < best) best = relabeled;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

Multigraph random_graph(std::mt19937_64& rng, const RandomGraphOptions& options) {
  if (options.max_vertices == 0) throw GraphError("random graphs need at least one vertex");
  if (options.max_edges > kEnumerationLimit) throw GraphError("random graphs are limited to 24 edges");
  std::size_t n = draw(rng, 1, options.max_vertices);
  if (options.connected) n = std::min(n, options.max_edges + 1);

  std::vector<int> genera(n);
  for (auto& genus : genera) genus = static_cast<int>(draw(rng, 0, static_cast<std::uint64_t>(options.max_genus)));

  EdgeList edges;
  if (options.connected) {
    for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(draw(rng, 0, v - 1)), static_cast<int>(v));
  }
  const std::size_t extra = draw(rng, 0, options.max_edges - edges.size());
  for (std::size_t k = 0; k < extra; ++k) {
    const auto roll = draw(rng, 0, 99);
    if (roll < options.loop_percent) {
      const int v = static_cast<int>(draw(rng, 0, n - 1));
      edges.emplace_back(v, v);
    } else if (roll < options.loop_percent + options.parallel_percent && !edges.empty()) {
      edges.push_back(edges[draw(rng, 0, edges.size() - 1)]);
    } else if (n > 1) {
      int a = static_cast<int>(draw(rng, 0, n - 1));
      int b = static_cast<int>(draw(rng, 0, n - 2));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    } else {
      edges.emplace_back(0, 0);
    }
  }
  return make_graph(genera, edges);
}

Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_hyperedges) {
  const std::size_t n = draw(rng, 1, std::max<std::size_t>(max_vertices, 1));
  Hypergraph h;
  for (std::size_t v = 0; v < n; ++v) h.vertices.push_back("v" + std::to_string(v + 1));
  // Attach each new vertex to an earlier one through a fresh hyperedge, or
  // grow the previous hyperedge.
  h.hyperedges.push_back({h.vertices[0]});
  for (std::size_t v = 1; v < n; ++v) {
    if (draw(rng, 0, 1) == 0) {
      h.hyperedges.push_back({h.vertices[draw(rng, 0, v - 1)], h.vertices[v]});
    } else {
      h.hyperedges.back().push_back(h.vertices[v]);
    }
  }
  const std::size_t extra = draw(rng, 0, max_hyperedges);
  for (std::size_t k = 0; k < extra; ++k) {
    std::vector<std::string> e;
    const std::size_t size = draw(rng, 1, 4);
    for (std::size_t j = 0; j < size; ++j) e.push_back(h.vertices[draw(rng, 0, n - 1)]);
    h.hyperedges.push_back(std::move(e));
  }
  return h;
}

std::vector<Multigraph> connected_multigraphs(std::size_t edges, std::size_t max_vertices) {
  std::vector<Multigraph> out;
  for (std::size_t n = 1; n <= std::min(max_vertices, edges + 1); ++n) {
    EdgeList pairs;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    std::set<EdgeList> seen;
    std::vector<std::size_t> pick(edges, 0);
    EdgeList current(edges);
    // Nondecreasing index sequences are the multisets of pairs.
    auto walk = [&](auto&& self, std::size_t k, std::size_t start) -> void {
      if (k == edges) {
        if (connected_on(n, current)) seen.insert(canonical_form(n, current));
        return;
      }
      for (std::size_t p = start; p < pairs.size(); ++p) {
        current[k] = pairs[p];
        self(self, k + 1, p);
      }
    };
    walk(walk, 0, 0);
    for (const auto& form : seen) out.push_back(make_graph(std::vector<int>(n, 0), form));
  }
  return out;
}

std::vector<Multigraph> connected_multigraphs_up_to(std::size_t max_edges, std::size_t max_vertices) {
  std::vector<Multigraph> out;
  for (std::size_t m = 0; m <= max_edges; ++m) {
    auto batch = connected_multigraphs(m, max_vertices);
    out.insert(out.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }
  return out;
}

}  // namespace curvecount
